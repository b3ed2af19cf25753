"""
    compoundbh/scenarios/props
    ~~~~~~~~~~~~~~~~~~~~~~~~~~

    Contains the worst-case compound p-value distributions for BH.

    Every atom sitting on a BH threshold is computed as ``alpha * k / m``, the exact
    expression :func:`~compoundbh.procedures.step_up` compares against, so inclusive
    comparisons hold in floating point.
"""
import math

from .. import errors, utils
from ..hints import Float, Int
from ..procedures import harmonic
from .atoms import AtomScenario, Coupling

#: How close 1 / (2 alpha) must be to an integer for the independent worst case.
INTEGRALITY_TOL = 1e-9


def prop2_scenario(alpha: Float, m: Int) -> AtomScenario:
    """
    Build independent compound p-values on which BH has FDR ``7 alpha / 6``.

    With k = 1 / (2 alpha), p_1 is 1.5/m or 1 with probability 1/2 each, p_2 is 1/m,
    the remaining nulls are 1, and the non-nulls are fixed at 1/m (2k - 1 of them)
    and 1.5/m (k - 1 of them), in units of alpha * 2k. BH rejects 3k hypotheses with
    FDP 4 alpha / 3 when p_1 is small and 2k with FDP alpha otherwise.

    :param alpha: Level with 1 / (2 alpha) integral
    :param m: Number of hypotheses, at least 3k
    :return: Scenario
    """
    alpha = utils.require_probability(alpha, 'alpha')
    m = utils.require_count(m, 'm')
    if alpha == 0:
        raise errors.ScenarioPreconditionFailed('alpha must be positive so that 1/(2 alpha) is an integer')
    k = round(1 / (2 * alpha))
    if k < 1 or abs(1 / (2 * alpha) - k) > INTEGRALITY_TOL:
        raise errors.ScenarioPreconditionFailed(f'1/(2 alpha) must be an integer, got {1 / (2 * alpha)!r}')
    if m < 3 * k:
        raise errors.ScenarioPreconditionFailed(f'm must be >= 3/(2 alpha) = {3 * k}, got {m}')

    low = alpha * (2 * k) / m
    high = alpha * (3 * k) / m
    n_null = m - 3 * k + 2
    coordinates = [((high, 0.5),), ((low, 1.0),)]
    coordinates += [()] * (n_null - 2)
    coordinates += [((low, 1.0),)] * (2 * k - 1)
    coordinates += [((high, 1.0),)] * (k - 1)
    return AtomScenario(
        name=f'prop2(alpha={alpha!r},m={m})',
        m=m,
        h0=frozenset(range(1, n_null + 1)),
        coordinates=tuple(coordinates),
        exact_fdr=7 * alpha / 6,
        meta={'alpha': alpha, 'k': k, 'fdp_values': [4 * alpha / 3, alpha]},
    )


def prop4_scenario(alpha: Float, m: Int) -> AtomScenario:
    """
    Build compound p-values under the global null on which BH has FDR ``alpha + alpha^2 / 4``.

    p_1 is alpha/m with probability alpha and 2 alpha/m with probability alpha/2;
    p_2 is 2 alpha/m with probability alpha/2; the rest are 1. BH rejects something
    exactly when p_1 = alpha/m or p_1 = p_2 = 2 alpha/m.

    :param alpha: Level in [0, 2/3]
    :param m: Number of hypotheses, at least 2
    :return: Scenario
    """
    alpha = utils.require_probability(alpha, 'alpha')
    m = utils.require_count(m, 'm')
    if alpha > 2 / 3:
        raise errors.ScenarioPreconditionFailed(f'alpha must be in [0, 2/3], got {alpha!r}')
    if m < 2:
        raise errors.ScenarioPreconditionFailed(f'm must be >= 2, got {m}')

    one = alpha * 1 / m
    two = alpha * 2 / m
    coordinates = [((one, alpha), (two, alpha / 2)), ((two, alpha / 2),)] + [()] * (m - 2)
    return AtomScenario(
        name=f'prop4(alpha={alpha!r},m={m})',
        m=m,
        h0=frozenset(range(1, m + 1)),
        coordinates=tuple(coordinates),
        exact_fdr=alpha + alpha ** 2 / 4,
        meta={'alpha': alpha, 'fdp_values': [0.0, 1.0]},
    )


def bin_count(m: Int) -> Int:
    """
    Largest L with ``L (L + 1) / 2 <= m``.
    """
    big_l = (math.isqrt(8 * m + 1) - 1) // 2
    return big_l


def prop5_scenario(alpha: Float, m: Int) -> AtomScenario:
    """
    Build PRDS compound p-values under the global null on which BH has FDR
    at least ``3/8 min(alpha h_m, 1)``.

    The first L(L+1)/2 coordinates are split into bins of sizes 1..L. Bin l is all
    alpha l / m with probability alpha' / l and all 1 otherwise, where
    ``alpha' = min(alpha, 1 / h_m)``; one uniform drives each bin. Leftover
    coordinates are 1. For alpha < 1, FDR equals the probability some bin fires.

    :param alpha: Level in [0, 1]
    :param m: Number of hypotheses, at least 1
    :return: Scenario
    """
    alpha = utils.require_probability(alpha, 'alpha')
    m = utils.require_count(m, 'm')
    if m < 1:
        raise errors.ScenarioPreconditionFailed(f'm must be >= 1, got {m}')

    big_l = bin_count(m)
    alpha_prime = min(alpha, 1 / harmonic(m))
    coordinates = []
    bins = []
    for ell in range(1, big_l + 1):
        start = len(coordinates) + 1
        bins.append(tuple(range(start, start + ell)))
        coordinates += [((alpha * ell / m, alpha_prime / ell),)] * ell
    coordinates += [()] * (m - len(coordinates))

    exact = None
    if alpha < 1:
        exact = 1 - math.prod(1 - alpha_prime / ell for ell in range(1, big_l + 1))
    return AtomScenario(
        name=f'prop5(alpha={alpha!r},m={m})',
        m=m,
        h0=frozenset(range(1, m + 1)),
        coordinates=tuple(coordinates),
        coupling=Coupling.Shared,
        bins=tuple(bins),
        exact_fdr=exact,
        meta={'alpha': alpha, 'alpha_prime': alpha_prime, 'L': big_l},
    )
