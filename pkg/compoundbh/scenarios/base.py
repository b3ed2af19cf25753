"""
    compoundbh/scenarios/base
    ~~~~~~~~~~~~~~~~~~~~~~~~~

    Contains base classes for all scenario implementations.
"""
import abc
import dataclasses

import numpy as np

from .. import rng
from ..config import ApproxParams
from ..hints import Array, Float, Int, IntSet, OptionalFloat, Str, TypeVar
from ..procedures import PValueVector


@dataclasses.dataclass(frozen=True)
class SampleDraw:
    """
    Represents one realization of the p-value vector of a scenario.
    """
    p: PValueVector
    h0: IntSet


class Scenario(metaclass=abc.ABCMeta):
    """
    Abstract class that represents a joint distribution over p-value vectors
    with a known set of true nulls.
    """
    name: Str
    m: Int
    h0: IntSet
    exact_fdr: OptionalFloat

    @abc.abstractmethod
    def draw(self: 'ST', gen: np.random.Generator) -> Array:
        """
        Draw one p-value vector using the given generator.

        :param gen: Random generator to consume
        :return: Float array of length m
        """
        raise NotImplementedError('Derived classes must implement this method')

    @abc.abstractmethod
    def cdf(self: 'ST', i: Int, t: Float) -> Float:
        """
        Evaluate the marginal CDF P(p_i <= t) of coordinate i (1-based).

        :param i: Coordinate index
        :param t: Point to evaluate
        :return: Probability
        """
        raise NotImplementedError('Derived classes must implement this method')

    @abc.abstractmethod
    def validity_gap(self: 'ST', params: ApproxParams = ApproxParams()) -> Float:
        """
        Compute ``max_t sum_{i in H0} P(p_i <= t) - m (t (1 + epsilon) + delta)``.

        A value <= 0 means the null coordinates are (epsilon, delta)-approximate
        compound p-values; with the default params, compound p-values.

        :param params: Approximation slack
        :return: Largest violation
        """
        raise NotImplementedError('Derived classes must implement this method')

    def null_mask_array(self) -> Array:
        """
        Boolean array that is True at 0-based positions of true nulls.
        """
        mask = np.zeros(self.m, dtype=bool)
        mask[[i - 1 for i in self.h0]] = True
        return mask

    def sample(self: 'ST', seed: Int, replicate: Int) -> SampleDraw:
        """
        Draw the p-value vector of the given replicate. Deterministic in (seed, replicate).

        :param seed: Experiment seed
        :param replicate: Replicate index
        :return: Sampled p-values and null set
        """
        values = self.draw(rng.stream(seed, replicate))
        return SampleDraw(PValueVector(values, self.h0), self.h0)


ST = TypeVar('ST', bound=Scenario)
