"""
    compoundbh/constructions/cdf
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~~

    Contains compound p-values built by averaging the null CDFs of every test.
"""
import dataclasses

import numpy as np

from .. import errors, utils
from ..hints import Callable, Float, FloatSequence, Int, List, Sequence, Str
from ..procedures import PValueVector

Evaluator = Callable[[Float], Float]

#: Points used to spot check monotonicity of an evaluator.
MONOTONE_GRID = np.concatenate([-np.logspace(3, -3, 25), [0.0], np.logspace(-3, 3, 25)])


class Orientation:
    """
    Known directions of a CDF bank.
    """
    Left = 'left'
    Right = 'right'


ORIENTATIONS = (Orientation.Left, Orientation.Right)


@dataclasses.dataclass(frozen=True)
class CdfBank:
    """
    Represents m monotone functions, either left CDFs ``F_j(x) = P(X_j <= x)`` used
    when small statistics are evidence, or right tails ``P(X_j >= x)`` used when
    large statistics are evidence.
    """
    evaluators: Sequence[Evaluator]
    orientation: Str = Orientation.Right

    def __post_init__(self):
        if self.orientation not in ORIENTATIONS:
            raise errors.DomainError(f'orientation must be one of {ORIENTATIONS}, got {self.orientation!r}')
        object.__setattr__(self, 'evaluators', tuple(self.evaluators))

    def __len__(self) -> Int:
        return len(self.evaluators)

    def evaluate(self, x: Float) -> List[Float]:
        return [float(f(x)) for f in self.evaluators]

    def check_monotone(self, grid: FloatSequence = MONOTONE_GRID) -> bool:
        """
        Check each evaluator is monotone in the bank's direction on the given grid.
        """
        grid = np.sort(np.asarray(grid, dtype=float))
        for f in self.evaluators:
            values = np.array([float(f(x)) for x in grid])
            steps = np.diff(values)
            if self.orientation == Orientation.Left and (steps < 0).any():
                return False
            if self.orientation == Orientation.Right and (steps > 0).any():
                return False
        return True


def avg_null_cdf_pvalues(stats: FloatSequence, bank: CdfBank) -> PValueVector:
    """
    Compute ``p_i = (1/m) sum_j bank_j(stat_i)``, clamped to [0, 1].

    If every null statistic X_j has the CDF (or right tail) bank_j, these are
    compound p-values regardless of the dependence between statistics.

    :param stats: Observed statistics
    :param bank: One evaluator per statistic
    :return: Compound p-values
    """
    x = utils.finite_array(stats, 'stats')
    if x.size != len(bank):
        raise errors.LengthMismatch(f'{x.size} statistics but {len(bank)} evaluators')
    if x.size < 1:
        raise errors.DomainError('at least one statistic is required')
    p = np.array([np.mean(bank.evaluate(xi)) for xi in x])
    return PValueVector(utils.clamp_unit(p))
