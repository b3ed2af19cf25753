"""
    compoundbh/rng
    ~~~~~~~~~~~~~~

    Contains counter-based random number streams.

    Stream ``(seed, index)`` is a :class:`numpy.random.Philox` generator keyed by the
    seed whose counter starts at ``index << 128``. Streams never overlap in practice
    and any one of them can be rebuilt without generating the others.
"""
import numpy as np

from . import errors
from .hints import Int

#: Philox keys are 128-bit.
KEY_BITS = 128

#: Offset separating stream families sharing a seed (replicates vs. trials vs. scenarios).
FAMILY_SHIFT = 96


class Family:
    """
    Known stream families. Each family gets a disjoint range of stream indices.
    """
    Replicate = 0
    Trial = 1
    Scenario = 2
    Check = 3


def stream(seed: Int, index: Int, family: Int = Family.Replicate) -> np.random.Generator:
    """
    Create the random generator for the given seed and stream index.

    :param seed: Nonnegative seed, used as the Philox key
    :param index: Nonnegative stream index, e.g. replicate number
    :param family: Stream family
    :return: Independent generator
    """
    if seed < 0 or index < 0:
        raise errors.DomainError(f'seed and index must be nonnegative, got {seed}, {index}')
    if seed >= 1 << KEY_BITS or index >= 1 << FAMILY_SHIFT:
        raise errors.DomainError(f'seed or index too large: {seed}, {index}')
    counter = ((family << FAMILY_SHIFT) | index) << KEY_BITS
    return np.random.Generator(np.random.Philox(key=seed, counter=counter))
