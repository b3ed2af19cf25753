"""
    compoundbh/numerics
    ~~~~~~~~~~~~~~~~~~~

    Contains the special functions used across the package: log binomial coefficients,
    the standard normal survival function, the regularized incomplete beta function,
    Poisson upper tails and the one-sided Fisher exact test.

    Every function is pure, rejects NaN inputs and is total on its preconditions.
"""
import math

import numpy as np
from scipy import special, stats

from . import defaults, errors, utils
from .hints import Array, Float, Int

#: Relative size below which a Poisson series term no longer changes the sum.
SERIES_EPS = 1e-17


def log_choose(n: Int, k: Int) -> Float:
    """
    Compute the natural log of the binomial coefficient C(n, k).

    Uses the log beta function, ``log C(n, k) = -log(n + 1) - log B(n - k + 1, k + 1)``,
    which avoids the cancellation between three log factorials.

    :param n: Population size
    :param k: Selection size, 0 <= k <= n
    :return: log C(n, k)
    """
    n = utils.require_count(n, 'n')
    k = utils.require_count(k, 'k')
    if k > n:
        raise errors.DomainError(f'k={k} exceeds n={n}')
    if k == 0 or k == n:
        return 0.0
    return float(-math.log1p(n) - special.betaln(n - k + 1, k + 1))


def normal_sf(z: Float) -> Float:
    """
    Compute the right tail of the standard normal distribution, 1 - Phi(z).

    :param z: Finite real value
    :return: P(Z >= z) for Z ~ N(0, 1)
    """
    z = utils.require_finite(z, 'z')
    return float(special.ndtr(-z))


def reg_inc_beta(x: Float, a: Float, b: Float) -> Float:
    """
    Compute the regularized incomplete beta function I_x(a, b), i.e. the CDF of
    Beta(a, b) evaluated at x.

    :param x: Point in [0, 1]
    :param a: First shape, > 0
    :param b: Second shape, > 0
    :return: I_x(a, b)
    """
    x = utils.require_probability(x, 'x')
    a = utils.require_finite(a, 'a')
    b = utils.require_finite(b, 'b')
    if a <= 0 or b <= 0:
        raise errors.DomainError(f'shapes must be positive, got a={a!r}, b={b!r}')
    return float(np.clip(special.betainc(a, b, x), 0.0, 1.0))


def poisson_tail(lam: Float, k: Int) -> Float:
    """
    Compute the Poisson upper tail P(Pois(lam) >= k).

    Small means sum the shorter side of the series with compensated summation: the
    upper tail directly when ``k > lam``, one minus the lower tail otherwise. Large
    means switch to the regularized lower incomplete gamma function, using
    ``P(Pois(lam) >= k) = P(Gamma(k, 1) <= lam)``.

    :param lam: Poisson mean, >= 0
    :param k: Tail threshold, >= 0
    :return: P(Pois(lam) >= k)
    """
    lam = utils.require_finite(lam, 'lambda')
    k = utils.require_count(k, 'k')
    if lam < 0:
        raise errors.DomainError(f'lambda={lam!r} is negative')
    if k == 0:
        return 1.0
    if lam == 0.0:
        return 0.0
    if lam > defaults.POISSON_SWITCH_LAMBDA:
        return float(special.gammainc(k, lam))
    if k <= lam:
        return max(0.0, 1.0 - _poisson_lower_sum(lam, k))
    return min(1.0, _poisson_upper_sum(lam, k))


def _poisson_lower_sum(lam: Float, k: Int) -> Float:
    j = np.arange(k)
    return math.fsum(np.exp(special.xlogy(j, lam) - lam - special.gammaln(j + 1)))


def _poisson_upper_sum(lam: Float, k: Int) -> Float:
    term = math.exp(special.xlogy(k, lam) - lam - special.gammaln(k + 1))
    terms = [term]
    j = k
    while True:
        j += 1
        term *= lam / j
        terms.append(term)
        if j > lam and term <= SERIES_EPS * terms[0]:
            break
    return math.fsum(terms)


def fisher_exact_onesided(a: Int, b: Int, c: Int, d: Int) -> Float:
    """
    Compute the one-sided Fisher exact test p-value for the 2x2 table ``[[a, b], [c, d]]``.

    With row and column margins fixed, the top-left cell X is hypergeometric; the
    alternative is that the top-left cell is large, so the p-value is P(X >= a).

    :param a: Top-left count
    :param b: Top-right count
    :param c: Bottom-left count
    :param d: Bottom-right count
    :return: P(X >= a)
    """
    a, b, c, d = (utils.require_count(v, name) for v, name in zip((a, b, c, d), 'abcd'))
    return float(fisher_exact_onesided_many(np.array([a]), np.array([b]), np.array([c]), np.array([d]))[0])


def fisher_exact_onesided_many(a: Array, b: Array, c: Array, d: Array) -> Array:
    """
    Vectorized :func:`fisher_exact_onesided` over arrays of tables.

    Inputs are assumed to be validated nonnegative integer arrays of equal shape.

    :return: Array of one-sided p-values
    """
    a, b, c, d = (np.asarray(v, dtype=np.int64) for v in (a, b, c, d))
    total = a + b + c + d
    col = a + c
    row = a + b
    p = stats.hypergeom.sf(a - 1, total, col, row)
    p = np.where(a == 0, 1.0, p)
    return np.clip(p, 0.0, 1.0)


def reg_inc_beta_many(x: Array, a: Float, b: Float) -> Array:
    """
    Vectorized :func:`reg_inc_beta` over points; x is clipped to [0, 1].
    """
    if a <= 0 or b <= 0:
        raise errors.DomainError(f'shapes must be positive, got a={a!r}, b={b!r}')
    x = np.clip(np.asarray(x, dtype=float), 0.0, 1.0)
    return np.clip(special.betainc(a, b, x), 0.0, 1.0)


def normal_sf_many(z: Array) -> Array:
    """
    Vectorized :func:`normal_sf`.
    """
    return special.ndtr(-np.asarray(z, dtype=float))


def poisson_tail_many(lam: Array, k: Int) -> Array:
    """
    Vectorized :func:`poisson_tail` over means for a fixed threshold k >= 1, via the
    regularized lower incomplete gamma function.
    """
    k = utils.require_count(k, 'k')
    lam = np.asarray(lam, dtype=float)
    if k == 0:
        return np.ones_like(lam)
    return np.clip(special.gammainc(k, np.maximum(lam, 0.0)), 0.0, 1.0)
