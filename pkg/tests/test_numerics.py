"""
    test_numerics
    ~~~~~~~~~~~~~

    Tests for the :mod:`~compoundbh.numerics` module.
"""
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from compoundbh import errors, numerics


@pytest.mark.parametrize('n, k, expected', [
    (4, 2, math.log(6)),
    (10, 0, 0.0),
    (10, 10, 0.0),
    (52, 5, math.log(2598960)),
    (1000, 500, math.log(math.comb(1000, 500))),
])
def test_log_choose_matches_exact_integers(n, k, expected):
    assert numerics.log_choose(n, k) == pytest.approx(expected, rel=1e-12, abs=1e-12)


@pytest.mark.parametrize('n, k', [(3, 4), (-1, 0), (5, -2), (2.5, 1)])
def test_log_choose_rejects_bad_arguments(n, k):
    with pytest.raises(errors.DomainError):
        numerics.log_choose(n, k)


def test_normal_sf_values():
    assert numerics.normal_sf(0.0) == 0.5
    assert numerics.normal_sf(1.0) == pytest.approx(0.15865525393145707, abs=1e-12)


@given(st.floats(min_value=-30, max_value=30, allow_nan=False))
def test_normal_sf_reflection(z):
    assert numerics.normal_sf(z) + numerics.normal_sf(-z) == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize('z', [float('nan'), float('inf'), -float('inf')])
def test_normal_sf_rejects_non_finite(z):
    with pytest.raises(errors.DomainError):
        numerics.normal_sf(z)


@pytest.mark.parametrize('x', [0.0, 0.1, 0.37, 1.0])
def test_reg_inc_beta_uniform_is_identity(x):
    assert numerics.reg_inc_beta(x, 1.0, 1.0) == pytest.approx(x, abs=1e-14)


def test_reg_inc_beta_known_values():
    assert numerics.reg_inc_beta(0.5, 0.5, 0.5) == pytest.approx(0.5, rel=1e-10)
    # Beta(1/2, 3/2) has CDF (2 / pi) (arcsin(sqrt x) + sqrt(x (1 - x))).
    expected = 2 / math.pi * (math.asin(0.5) + math.sqrt(0.25 * 0.75))
    assert numerics.reg_inc_beta(0.25, 0.5, 1.5) == pytest.approx(expected, rel=1e-10)


# Near 0, 1 - x rounds to 1 and the identity cannot hold.
@given(st.floats(1e-6, 1 - 1e-6), st.floats(0.05, 50.0), st.floats(0.05, 50.0))
def test_reg_inc_beta_symmetry(x, a, b):
    total = numerics.reg_inc_beta(x, a, b) + numerics.reg_inc_beta(1.0 - x, b, a)
    assert total == pytest.approx(1.0, abs=1e-10)


@pytest.mark.parametrize('x, a, b', [(-0.1, 1, 1), (1.5, 1, 1), (0.5, 0, 1), (0.5, 1, -2), (float('nan'), 1, 1)])
def test_reg_inc_beta_rejects_bad_arguments(x, a, b):
    with pytest.raises(errors.DomainError):
        numerics.reg_inc_beta(x, a, b)


def test_reg_inc_beta_many_clips_points():
    values = numerics.reg_inc_beta_many(np.array([-1.0, 0.5, 2.0]), 1.0, 1.0)
    np.testing.assert_allclose(values, [0.0, 0.5, 1.0])


def test_poisson_tail_trivial_cases():
    assert numerics.poisson_tail(3.7, 0) == 1.0
    assert numerics.poisson_tail(0.0, 1) == 0.0
    assert numerics.poisson_tail(1.0, 1) == pytest.approx(1 - math.exp(-1), rel=1e-12)


@pytest.mark.parametrize('lam, k', [(0.5, 3), (4.0, 2), (12.0, 20), (49.0, 60), (75.0, 80), (200.0, 150)])
def test_poisson_tail_matches_direct_summation(lam, k):
    head = math.fsum(math.exp(j * math.log(lam) - lam - math.lgamma(j + 1)) for j in range(k))
    assert numerics.poisson_tail(lam, k) == pytest.approx(1.0 - head, rel=1e-9, abs=1e-15)


def test_poisson_tail_monotone_on_grid():
    lams = np.linspace(0.0, 80.0, 41)
    ks = range(0, 90, 3)
    grid = np.array([[numerics.poisson_tail(float(lam), k) for k in ks] for lam in lams])
    assert np.all(np.diff(grid, axis=1) <= 1e-15)
    assert np.all(np.diff(grid, axis=0) >= -1e-15)


def test_poisson_tail_monotone_in_mean_near_one():
    assert numerics.poisson_tail(42.0, 3) <= numerics.poisson_tail(44.0, 3)
    assert numerics.poisson_tail(48.0, 6) <= numerics.poisson_tail(50.0, 6)
    lams = np.arange(0.5, 50.5, 0.5)
    for k in (1, 3, 6, 12, 25, 40):
        tail = np.array([numerics.poisson_tail(float(lam), k) for lam in lams])
        assert np.all(np.diff(tail) >= 0.0)


def test_poisson_tail_rejects_negative_mean():
    with pytest.raises(errors.DomainError):
        numerics.poisson_tail(-0.1, 2)


def test_poisson_tail_many_agrees_with_scalar():
    lams = np.array([0.0, 0.3, 2.0, 9.5, 60.0])
    expected = [numerics.poisson_tail(float(lam), 4) for lam in lams]
    np.testing.assert_allclose(numerics.poisson_tail_many(lams, 4), expected, rtol=1e-10, atol=1e-15)
    np.testing.assert_array_equal(numerics.poisson_tail_many(lams, 0), np.ones(5))


@pytest.mark.parametrize('table, expected', [
    ((0, 3, 0, 5), 1.0),
    ((2, 0, 0, 2), 1 / 6),
    ((1, 1, 1, 1), 5 / 6),
])
def test_fisher_exact_onesided_known_tables(table, expected):
    assert numerics.fisher_exact_onesided(*table) == pytest.approx(expected, rel=1e-12)


def _fisher_brute_force(a, b, c, d):
    row, col, total = a + b, a + c, a + b + c + d
    low, high = max(0, row + col - total), min(row, col)
    weight = {x: math.comb(col, x) * math.comb(total - col, row - x) for x in range(low, high + 1)}
    return sum(w for x, w in weight.items() if x >= a) / sum(weight.values())


@given(st.integers(0, 10), st.integers(0, 10), st.integers(0, 10), st.integers(0, 10))
def test_fisher_exact_onesided_matches_enumeration(a, b, c, d):
    assert numerics.fisher_exact_onesided(a, b, c, d) == pytest.approx(_fisher_brute_force(a, b, c, d), rel=1e-10)
