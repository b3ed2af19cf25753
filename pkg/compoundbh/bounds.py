"""
    compoundbh/bounds
    ~~~~~~~~~~~~~~~~~

    Contains numerical checks of the constants behind the FDR bounds for compound p-values:
    the sequence whose limit gives the 1.93 constant, the Poisson argmax location, two
    Poisson series identities, the global null bounds and Bernoulli tail bounds.
"""
import dataclasses
import itertools
import math

import numpy as np

from . import defaults, errors, loggers, numerics, utils
from .hints import Array, Float, FloatSequence, Int, List, OptionalInt, Str, Tuple

LOG = loggers.get_logger()


class Mode:
    """
    Known comparison modes of the Poisson identities.
    """
    GEQ = 'geq'
    GT = 'gt'


MODES = (Mode.GEQ, Mode.GT)


@dataclasses.dataclass(frozen=True)
class CSequence:
    """
    Represents c_1..c_L and the first index whose increment is below `tolerance`.
    """
    values: Tuple[Float, ...]
    converged_at: OptionalInt
    tolerance: Float

    def __getitem__(self, ell: Int) -> Float:
        """
        1-based access, ``seq[1] == 1.0``.
        """
        if ell < 1:
            raise IndexError(ell)
        return self.values[ell - 1]

    @property
    def last(self) -> Float:
        return self.values[-1]

    def is_nondecreasing(self) -> bool:
        return all(a <= b for a, b in zip(self.values, self.values[1:]))


def c_sequence(L: Int = defaults.C_SEQUENCE_L, tol: Float = defaults.C_SEQUENCE_TOL) -> CSequence:  # noqa: N803
    """
    Compute ``c_1 = 1``, ``c_2 = 1.5`` and for l >= 3,
    ``c_l = c_{l-1} + P(Pois(lam) >= l - 1) - c_{l-1} P(Pois(lam) >= l)`` with
    ``lam = (l - 1) / c_{l-1}``.

    :param L: Number of terms, >= 2
    :param tol: Increment below which the sequence counts as converged
    :return: Sequence with convergence index
    """
    L = utils.require_count(L, 'L')  # noqa: N806
    if L < 2:
        raise errors.DomainError(f'L={L} must be >= 2')
    if utils.require_finite(tol, 'tol') <= 0:
        raise errors.DomainError(f'tol={tol!r} must be positive')
    values = [1.0, 1.5]
    converged_at = None
    for ell in range(3, L + 1):
        prev = values[-1]
        lam = (ell - 1) / prev
        current = prev + numerics.poisson_tail(lam, ell - 1) - prev * numerics.poisson_tail(lam, ell)
        values.append(current)
        if converged_at is None and current - prev < tol:
            converged_at = ell
    return CSequence(tuple(values), converged_at, tol)


@dataclasses.dataclass(frozen=True)
class PoissonIdentity:
    """
    Represents a truncated Poisson series, its closed form and the number of terms summed.
    """
    series: Float
    closed: Float
    terms: Int
    tail_bound: Float

    @property
    def error(self) -> Float:
        return abs(self.series - self.closed)


def identity_closed_form(t: Float, mode: Str) -> Float:
    """
    ``sum_{k>=1} P(Pois(tk) >= k) = (t - t^2/2) / (1 - t)^2`` and
    ``sum_{k>=1} P(Pois(tk) > k) = (t^2/2) / (1 - t)^2``.
    """
    if mode == Mode.GEQ:
        return (t - t * t / 2) / (1 - t) ** 2
    return (t * t / 2) / (1 - t) ** 2


def poisson_identity(t: Float, mode: Str = Mode.GEQ, k_max: Int = defaults.POISSON_IDENTITY_KMAX) -> PoissonIdentity:
    """
    Sum ``P(Pois(tk) >= k)`` (or ``> k``) over k >= 1 and compare to the closed form.

    Terms are at most ``r^k`` with ``r = t e^{1 - t} < 1`` by the Chernoff bound, so
    stopping at K leaves a tail below ``r^{K+1} / (1 - r)``; K is the first index
    where that is under the configured tail tolerance.

    :param t: Point in (0, 1)
    :param mode: ``geq`` or ``gt``
    :param k_max: Largest number of terms allowed
    :return: Series value, closed form and truncation
    """
    t = utils.require_finite(t, 't')
    if not 0.0 < t < 1.0:
        raise errors.DomainError(f't={t!r} outside (0, 1)')
    if mode not in MODES:
        raise errors.DomainError(f'mode must be one of {MODES}, got {mode!r}')
    if utils.require_count(k_max, 'k_max') < 1:
        raise errors.DomainError('k_max must be >= 1')

    r = t * math.exp(1.0 - t)
    log_needed = math.log(defaults.POISSON_IDENTITY_TAIL * (1.0 - r))
    terms = max(1, math.ceil(log_needed / math.log(r)) - 1) if r > 0 else 1
    if terms > k_max:
        raise errors.ConvergenceError(f'identity at t={t!r} needs {terms} terms, more than k_max={k_max}')
    offset = 0 if mode == Mode.GEQ else 1
    series = math.fsum(numerics.poisson_tail(t * k, k + offset) for k in range(1, terms + 1))
    tail_bound = r ** (terms + 1) / (1.0 - r)
    LOG.debug(f'poisson identity t={t} mode={mode} summed {terms} terms')
    return PoissonIdentity(series, identity_closed_form(t, mode), terms, tail_bound)


def poisson_argmax_check(i: Int, c: Float, grid: Int = 4000) -> Float:
    """
    Grid search the maximizer of ``f(t) = P(Pois(t) >= i - 1) - c P(Pois(t) >= i)`` over (0, 4i/c].

    The exact maximizer is ``(i - 1) / c``.

    :param i: Index >= 2
    :param c: Positive constant
    :param grid: Number of grid points
    :return: Grid argmax
    """
    i = utils.require_count(i, 'i')
    if i < 2 or utils.require_finite(c, 'c') <= 0 or grid < 2:
        raise errors.DomainError(f'need i >= 2, c > 0 and grid >= 2, got i={i}, c={c!r}, grid={grid}')
    ts = argmax_grid(i, c, grid)
    f = numerics.poisson_tail_many(ts, i - 1) - c * numerics.poisson_tail_many(ts, i)
    return float(ts[int(np.argmax(f))])


def argmax_grid(i: Int, c: Float, grid: Int) -> Array:
    upper = 4.0 * i / c
    return np.linspace(upper / grid, upper, grid)


def globalnull_closed_bound(alpha: Float) -> Float:
    """
    Compute ``alpha + (alpha^2 / 2) / (1 - alpha)^2``, the FDR bound of BH on compound p-values under the global null.

    :param alpha: Level in [0, 1)
    :return: Bound
    """
    alpha = utils.require_probability(alpha, 'alpha')
    if alpha == 1.0:
        raise errors.DomainError('alpha must be < 1')
    return alpha + (alpha * alpha / 2) / (1 - alpha) ** 2


def globalnull_series_bound(alpha: Float, m: Int) -> Float:
    """
    Compute the finite m bound ``alpha + sum_{i=2}^m P(Pois(alpha (i - 1)) >= i)``.

    Never larger than :func:`globalnull_closed_bound`.
    """
    alpha = utils.require_probability(alpha, 'alpha')
    m = utils.require_count(m, 'm')
    if m < 1:
        raise errors.DomainError(f'm={m} must be >= 1')
    return alpha + math.fsum(numerics.poisson_tail(alpha * (i - 1), i) for i in range(2, m + 1))


def hoeffding_poisson_bound(t: Float, i: Int) -> Float:
    """
    Bound ``B_i(t) = sup P(A_1 + ... + A_r >= i)`` over independent Bernoulli variables
    with total mean at most t.

    Union bounds give t for i = 1 and t^2/2 for i = 2; otherwise ``P(Pois(t) >= i)``,
    which needs ``t <= i - 1``.

    :param t: Total mean, >= 0
    :param i: Threshold >= 1
    :return: Upper bound
    """
    t = utils.require_finite(t, 't')
    i = utils.require_count(i, 'i')
    if t < 0 or i < 1:
        raise errors.DomainError(f'need t >= 0 and i >= 1, got t={t!r}, i={i}')
    if i == 1:
        return t
    if i == 2:
        return t * t / 2
    if t > i - 1:
        raise errors.DomainError(f't={t!r} exceeds i - 1 = {i - 1}, outside the Poisson bound regime')
    return numerics.poisson_tail(t, i)


def poisson_binomial_tail(q: Array, i: Int) -> Array:
    """
    ``P(sum_j Bernoulli(q_j) >= i)`` for each row of q.
    """
    q = np.atleast_2d(q)
    dist = np.zeros((q.shape[0], q.shape[1] + 1))
    dist[:, 0] = 1.0
    for j in range(q.shape[1]):
        p = q[:, j:j + 1]
        dist[:, 1:] = dist[:, 1:] * (1 - p) + dist[:, :-1] * p
        dist[:, 0] *= (1 - p[:, 0])
    return dist[:, i:].sum(axis=1)


def bernoulli_tail_max(t: Float, i: Int, r: Int, grid: Int = 40) -> Float:
    """
    Brute force ``B_i(t)`` over r <= 4 Bernoulli probabilities on a grid of step 1/grid with sum <= t.

    :param t: Total mean
    :param i: Threshold
    :param r: Number of variables
    :param grid: Grid resolution
    :return: Largest tail probability found
    """
    if not 1 <= r <= 4:
        raise errors.DomainError(f'r={r} must be in [1, 4]')
    levels = np.arange(grid + 1) / grid
    combos = np.array(list(itertools.combinations_with_replacement(levels, r)))
    combos = combos[combos.sum(axis=1) <= t + 1e-12]
    if combos.size == 0:
        return 0.0
    return float(poisson_binomial_tail(combos, i).max())


@dataclasses.dataclass(frozen=True)
class BoundCheck:
    """
    Represents one verified quantity.
    """
    name: Str
    computed: Float
    reference: Float
    passed: bool


def verify(L: Int = defaults.C_SEQUENCE_L,  # noqa: N803
           tol: Float = defaults.C_SEQUENCE_TOL,
           identity_points: FloatSequence = (0.1, 0.3, 0.5, 0.7, 0.9),
           argmax_grid_size: Int = 4000) -> List[BoundCheck]:
    """
    Run every bound check.

    :param L: Length of the c sequence
    :param tol: Convergence tolerance of the c sequence
    :return: Checks in a fixed order
    """
    checks: List[BoundCheck] = []

    seq = c_sequence(L, tol)
    checks.append(BoundCheck('c_1', seq[1], 1.0, seq[1] == 1.0))
    checks.append(BoundCheck('c_2', seq[2], 1.5, seq[2] == 1.5))
    if L >= 3:
        checks.append(BoundCheck('c_3', seq[3], 1.659, abs(seq[3] - 1.659) < 1e-3))
    checks.append(BoundCheck('c_nondecreasing', float(seq.is_nondecreasing()), 1.0, seq.is_nondecreasing()))
    checks.append(BoundCheck('c_limit', seq.last, defaults.C_SEQUENCE_LIMIT,
                             seq.last <= defaults.C_SEQUENCE_LIMIT + 1e-6))
    converged = seq.converged_at if seq.converged_at is not None else -1
    checks.append(BoundCheck('c_converged_at', float(converged), float(L), 0 < converged <= L))

    for t in identity_points:
        for mode in MODES:
            identity = poisson_identity(t, mode)
            checks.append(BoundCheck(f'poisson_identity_{mode}(t={t})', identity.series, identity.closed,
                                     identity.error <= 1e-8))

    for c in (1.0, 1.5, defaults.C_SEQUENCE_LIMIT):
        for i in range(2, 11):
            argmax = poisson_argmax_check(i, c, argmax_grid_size)
            step = 4.0 * i / c / argmax_grid_size
            expected = (i - 1) / c
            checks.append(BoundCheck(f'poisson_argmax(i={i},c={c})', argmax, expected,
                                     abs(argmax - expected) <= step))

    alphas = np.linspace(0.0, 0.5, 51)
    worst = max(globalnull_closed_bound(a) - (a + 2 * a * a) for a in alphas)
    checks.append(BoundCheck('globalnull_closed<=alpha+2alpha^2', worst, 0.0, worst <= 1e-15))
    for alpha in (0.1, 0.2, 0.3):
        series = globalnull_series_bound(alpha, 100)
        closed = globalnull_closed_bound(alpha)
        checks.append(BoundCheck(f'globalnull_series(alpha={alpha},m=100)', series, closed, series <= closed + 1e-12))

    for t, i, r in ((0.3, 1, 3), (0.4, 2, 3), (1.0, 3, 4), (1.5, 3, 4), (2.0, 4, 4)):
        brute = bernoulli_tail_max(t, i, r)
        bound = hoeffding_poisson_bound(t, i)
        checks.append(BoundCheck(f'bernoulli_tail(t={t},i={i},r={r})', brute, bound, brute <= bound + 1e-12))

    failed = [c.name for c in checks if not c.passed]
    if failed:
        LOG.warning(f'{len(failed)} bound checks failed: {", ".join(failed)}')
    return checks
