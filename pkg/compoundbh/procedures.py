"""
    compoundbh/procedures
    ~~~~~~~~~~~~~~~~~~~~~

    Contains the Benjamini-Hochberg step-up procedure, its leave-one-out and
    null/non-null reformulations, and the false discovery proportion metrics.

    Indices in every public type are 1-based. Rejection thresholds are always the
    floating point value of ``alpha * k / m``, evaluated left to right, so that
    constructions placing atoms at thresholds compare equal to them.
"""
import dataclasses
import math

import numpy as np

from . import errors, utils
from .config import ApproxParams
from .hints import Array, Float, FloatSequence, Int, IntSet, Iterable, Optional, Tuple, Union

PValueLike = Union['PValueVector', FloatSequence, Array]


@dataclasses.dataclass(frozen=True)
class PValueVector:
    """
    Represents m values in [0, 1], optionally with the set of true null indices.
    """
    values: Array
    h0: Optional[IntSet] = None

    def __post_init__(self):
        values = utils.probability_array(self.values, 'p')
        if values.size < 1:
            raise errors.DomainError('p-value vector must have at least one entry')
        values.setflags(write=False)
        object.__setattr__(self, 'values', values)
        if self.h0 is not None:
            object.__setattr__(self, 'h0', null_mask(self.h0, values.size))

    @property
    def m(self) -> Int:
        return int(self.values.size)

    def __len__(self) -> Int:
        return self.m


@dataclasses.dataclass(frozen=True)
class BHResult:
    """
    Represents the outcome of the BH procedure.
    """
    rejected: IntSet
    k_hat: Int
    threshold: Float

    def __len__(self) -> Int:
        return self.k_hat


@dataclasses.dataclass(frozen=True)
class CrossCheck:
    """
    Represents the null/non-null reformulation of BH: ``k_seq[i]`` is the number of
    rejections if exactly i true nulls are rejected, and `I` the realized count.
    """
    k_seq: Tuple[Int, ...]
    I: Int  # noqa: E741

    @property
    def k_I(self) -> Int:  # noqa: N802
        return self.k_seq[self.I]


def as_array(p: PValueLike) -> Array:
    """
    Convert p-values to a validated float array.

    :param p: P-values as a :class:`PValueVector` or a sequence
    :return: Float array with entries in [0, 1]
    """
    if isinstance(p, PValueVector):
        return p.values
    arr = utils.probability_array(p, 'p')
    if arr.size < 1:
        raise errors.DomainError('p-value vector must have at least one entry')
    return arr


def null_mask(h0: Iterable[Int], m: Int) -> IntSet:
    """
    Validate a set of 1-based null indices against the index range [1, m].

    :param h0: Null indices
    :param m: Number of hypotheses
    :return: Frozen set of indices
    """
    members = frozenset(int(i) for i in h0)
    outside = sorted(i for i in members if not 1 <= i <= m)
    if outside:
        raise errors.DomainError(f'null indices {outside} outside [1, {m}]')
    return members


def _check_alpha(alpha: Float) -> Float:
    return utils.require_probability(alpha, 'alpha')


def step_up(p: Array, alpha: Float) -> Tuple[Int, Float]:
    """
    Find the BH rejection count and threshold on a validated array.

    k_hat is the largest k such that the k-th smallest value is at most ``alpha * k / m``,
    which is the same as ``#{i : p_i <= alpha * k / m} >= k``.

    :param p: Float array of p-values
    :param alpha: Target level
    :return: Tuple of (k_hat, threshold)
    """
    m = p.size
    ks = np.arange(1, m + 1)
    passed = np.flatnonzero(np.sort(p) <= alpha * ks / m)
    if passed.size == 0:
        return 0, 0.0
    k_hat = int(passed[-1]) + 1
    return k_hat, alpha * k_hat / m


def bh_reject(p: PValueLike, alpha: Float) -> BHResult:
    """
    Run the Benjamini-Hochberg step-up procedure at level alpha.

    :param p: P-values
    :param alpha: Target level in [0, 1]
    :return: Rejection set (1-based), k_hat and the realized threshold
    """
    p = as_array(p)
    alpha = _check_alpha(alpha)
    k_hat, threshold = step_up(p, alpha)
    if k_hat == 0:
        return BHResult(frozenset(), 0, 0.0)
    rejected = frozenset(int(i) + 1 for i in np.flatnonzero(p <= threshold))
    return BHResult(rejected, k_hat, threshold)


def bh_crosscheck(p: PValueLike, alpha: Float, h0: Iterable[Int]) -> CrossCheck:
    """
    Compute the null/non-null reformulation of BH.

    For i = 0..|H0|, ``k_i = max{k : i + #{j not in H0 : p_j <= alpha k / m} >= k}``
    (0 if none), and ``I = max{i : #{j in H0 : p_j <= alpha k_i / m} >= i}``. It always
    holds that ``k_I`` equals the BH rejection count and ``I`` the number of rejected nulls.

    :param p: P-values
    :param alpha: Target level in [0, 1]
    :param h0: 1-based null indices
    :return: Cross check sequence and index
    """
    p = as_array(p)
    alpha = _check_alpha(alpha)
    m = p.size
    nulls = null_mask(h0, m)
    is_null = np.zeros(m, dtype=bool)
    is_null[[i - 1 for i in nulls]] = True

    ks = np.arange(1, m + 1)
    thresholds = alpha * ks / m
    nonnull_sorted = np.sort(p[~is_null])
    null_sorted = np.sort(p[is_null])
    nonnull_counts = np.searchsorted(nonnull_sorted, thresholds, side='right')

    k_seq = []
    for i in range(len(nulls) + 1):
        ok = np.flatnonzero(i + nonnull_counts >= ks)
        k_seq.append(int(ks[ok[-1]]) if ok.size else 0)

    big_i = 0
    for i in range(1, len(nulls) + 1):
        k_i = k_seq[i]
        count = int(np.searchsorted(null_sorted, alpha * k_i / m, side='right')) if k_i else 0
        if count >= i:
            big_i = i
    return CrossCheck(tuple(k_seq), big_i)


def bh_leave_one_out(p: PValueLike, alpha: Float) -> Array:
    """
    Compute the leave-one-out rejection counts of BH.

    ``k_hat_i = max{k : 1 + #{j != i : p_j <= alpha k / m} >= k}`` is the number of
    rejections BH would make with p_i set to 0. It satisfies
    ``i rejected <=> p_i <= alpha k_hat_i / m <=> k_hat_i == k_hat``.

    :param p: P-values
    :param alpha: Target level in [0, 1]
    :return: Integer array of k_hat_i, in index order
    """
    p = as_array(p)
    alpha = _check_alpha(alpha)
    m = p.size
    ks = np.arange(1, m + 1)
    thresholds = alpha * ks / m
    counts = np.searchsorted(np.sort(p), thresholds, side='right')
    # First k whose threshold counts p_i itself; m + 1 when none does.
    first = np.searchsorted(thresholds, p, side='left') + 1
    full = ks[counts >= ks]
    k_hat = int(full[-1]) if full.size else 0
    # below[r] is the largest k <= r that still passes with one extra rejection.
    below = np.concatenate(([0], np.maximum.accumulate(np.where(counts + 1 >= ks, ks, 0))))
    return np.where(k_hat >= first, k_hat, below[first - 1]).astype(int)


def fdp(rejected: Iterable[Int], h0: Iterable[Int]) -> Float:
    """
    Compute the false discovery proportion ``|S & H0| / max(1, |S|)``.

    :param rejected: Rejected indices
    :param h0: Null indices
    :return: False discovery proportion in [0, 1]
    """
    rejected = frozenset(rejected)
    false = len(rejected & frozenset(h0))
    return false / max(1, len(rejected))


def modified_fdp(rejected: Iterable[Int],
                 h0: Iterable[Int],
                 m: Int,
                 alpha: Float,
                 params: ApproxParams = ApproxParams()) -> Float:
    """
    Compute the modified false discovery proportion used for approximate compound p-values:
    ``|S & H0| / (m delta / (alpha (1 + epsilon)) + |S|)``.

    :param rejected: Rejected indices
    :param h0: Null indices
    :param m: Number of hypotheses
    :param alpha: Target level
    :param params: Approximation slack
    :return: Modified false discovery proportion, 0 when the denominator vanishes
    """
    rejected = frozenset(rejected)
    false = len(rejected & frozenset(h0))
    if params.delta > 0 and alpha == 0:
        raise errors.DomainError('modified FDP with delta > 0 requires alpha > 0')
    slack = m * params.delta / (alpha * (1 + params.epsilon)) if params.delta > 0 else 0.0
    denominator = slack + len(rejected)
    return false / denominator if denominator > 0 else 0.0


def harmonic(m: Int) -> Float:
    """
    Compute the harmonic number ``1 + 1/2 + ... + 1/m``.

    :param m: Positive integer
    :return: h_m
    """
    m = utils.require_count(m, 'm')
    if m < 1:
        raise errors.DomainError(f'm={m} must be >= 1')
    return math.fsum(1.0 / j for j in range(1, m + 1))


def bh_harmonic_level(alpha: Float, m: Int) -> Float:
    """
    Compute ``alpha * h_m``, the FDR bound of BH for arbitrarily dependent compound p-values.
    """
    return _check_alpha(alpha) * harmonic(m)


def to_compound(p: PValueLike, params: ApproxParams) -> Array:
    """
    Convert (epsilon, delta)-approximate compound p-values into compound p-values
    with ``min(1, p (1 + epsilon) + delta)``.

    :param p: Approximate compound p-values
    :param params: Approximation slack
    :return: Corrected values
    """
    p = as_array(p)
    return np.minimum(1.0, p * (1 + params.epsilon) + params.delta)
