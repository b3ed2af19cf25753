"""
    test_procedures
    ~~~~~~~~~~~~~~~

    Tests for the :mod:`~compoundbh.procedures` module.
"""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from compoundbh import errors, procedures
from compoundbh.config import ApproxParams
from compoundbh.scenarios import prop2_scenario


@st.composite
def pvalues_and_nulls(draw, max_size=30):
    m = draw(st.integers(1, max_size))
    # Coarse grids produce plenty of ties with the thresholds.
    grid = draw(st.sampled_from([None, 20, 100]))
    if grid is None:
        values = draw(st.lists(st.floats(0.0, 1.0), min_size=m, max_size=m))
    else:
        values = [v / grid for v in draw(st.lists(st.integers(0, grid), min_size=m, max_size=m))]
    h0 = draw(st.sets(st.integers(1, m)))
    alpha = draw(st.sampled_from([0.0, 0.05, 0.1, 0.2, 0.5, 1.0]))
    return np.array(values), h0, alpha


def test_bh_reject_nothing_passes():
    result = procedures.bh_reject([1.0, 1.0, 1.0], 0.5)
    assert result.rejected == frozenset()
    assert result.k_hat == 0
    assert len(result) == 0


def test_bh_reject_hand_example():
    result = procedures.bh_reject([0.01, 0.02, 0.9], 0.05)
    assert result.rejected == {1, 2}
    assert result.k_hat == 2
    assert result.threshold == 0.05 * 2 / 3


def test_bh_reject_includes_ties_at_threshold():
    m = 4
    p = [0.1 * 2 / m, 0.1 * 2 / m, 0.9, 1.0]
    assert procedures.bh_reject(p, 0.1).rejected == {1, 2}


def test_bh_reject_accepts_pvalue_vector():
    vec = procedures.PValueVector(np.array([0.001, 0.5]), h0={2})
    assert vec.m == 2
    assert vec.h0 == {2}
    assert procedures.bh_reject(vec, 0.1).rejected == {1}


@pytest.mark.parametrize('p', [[], [0.1, float('nan')], [0.1, 1.2], [-0.01]])
def test_bh_reject_rejects_invalid_vectors(p):
    with pytest.raises(errors.DomainError):
        procedures.bh_reject(p, 0.1)


@pytest.mark.parametrize('alpha', [-0.1, 1.1, float('nan')])
def test_bh_reject_rejects_invalid_levels(alpha):
    with pytest.raises(errors.DomainError):
        procedures.bh_reject([0.1, 0.2], alpha)


def test_null_mask_rejects_indices_outside_range():
    with pytest.raises(errors.DomainError):
        procedures.null_mask({0, 1}, 3)
    with pytest.raises(errors.DomainError):
        procedures.PValueVector(np.array([0.5]), h0={2})


def test_bh_reject_on_realized_independent_worst_case():
    scenario = prop2_scenario(0.1, 30)
    k = scenario.meta['k']
    p = np.array([atoms[0][0] if atoms else 1.0 for atoms in scenario.coordinates])
    result = procedures.bh_reject(p, 0.1)
    assert len(result.rejected) == 3 * k
    assert result.rejected == {i + 1 for i in np.flatnonzero(p <= 1.5 / 30 + 1e-15)}


@given(pvalues_and_nulls())
def test_bh_reject_invariants(case):
    p, _, alpha = case
    result = procedures.bh_reject(p, alpha)
    m = p.size
    assert len(result.rejected) == result.k_hat
    if result.k_hat:
        assert result.rejected == {i + 1 for i in range(m) if p[i] <= alpha * result.k_hat / m}
    for k in range(result.k_hat + 1, m + 1):
        assert np.count_nonzero(p <= alpha * k / m) < k


@given(pvalues_and_nulls(), st.sampled_from([0.0, 0.05, 0.1, 0.3, 1.0]))
def test_bh_reject_monotone_in_alpha(case, other):
    p, _, alpha = case
    low, high = sorted((alpha, other))
    assert procedures.bh_reject(p, low).rejected <= procedures.bh_reject(p, high).rejected


@given(pvalues_and_nulls(), st.data())
def test_bh_reject_monotone_in_pvalues(case, data):
    p, _, alpha = case
    i = data.draw(st.integers(0, p.size - 1))
    lowered = p.copy()
    lowered[i] = data.draw(st.floats(0.0, float(p[i])))
    assert procedures.bh_reject(p, alpha).rejected <= procedures.bh_reject(lowered, alpha).rejected


def test_bh_crosscheck_hand_example():
    check = procedures.bh_crosscheck([0.01, 0.02, 0.9], 0.05, {3})
    assert check.k_seq == (2, 3)
    assert check.I == 0
    assert check.k_I == 2


def test_bh_crosscheck_without_nulls():
    p = [0.01, 0.02, 0.9]
    check = procedures.bh_crosscheck(p, 0.05, set())
    assert check.I == 0
    assert check.k_seq == (procedures.bh_reject(p, 0.05).k_hat,)


def assert_crosscheck_matches(case):
    p, h0, alpha = case
    check = procedures.bh_crosscheck(p, alpha, h0)
    result = procedures.bh_reject(p, alpha)
    assert check.k_I == result.k_hat
    assert check.I == len(result.rejected & h0)
    assert list(check.k_seq) == sorted(check.k_seq)
    assert all(k_i >= i for i, k_i in enumerate(check.k_seq))


@given(pvalues_and_nulls())
def test_bh_crosscheck_matches_bh_reject(case):
    assert_crosscheck_matches(case)


@pytest.mark.slow
@settings(max_examples=10000)
@given(pvalues_and_nulls(max_size=50))
def test_bh_crosscheck_matches_bh_reject_at_scale(case):
    assert_crosscheck_matches(case)


@given(pvalues_and_nulls())
def test_bh_leave_one_out_characterizes_rejections(case):
    p, _, alpha = case
    result = procedures.bh_reject(p, alpha)
    k_hats = procedures.bh_leave_one_out(p, alpha)
    m = p.size
    for i in range(m):
        rejected = (i + 1) in result.rejected
        assert rejected == (p[i] <= alpha * k_hats[i] / m and k_hats[i] > 0)
        assert rejected == (k_hats[i] == result.k_hat and result.k_hat > 0)


@given(pvalues_and_nulls())
def test_bh_leave_one_out_matches_zeroed_pvalue(case):
    p, _, alpha = case
    expected = []
    for i in range(p.size):
        zeroed = p.copy()
        zeroed[i] = 0.0
        expected.append(procedures.bh_reject(zeroed, alpha).k_hat)
    np.testing.assert_array_equal(procedures.bh_leave_one_out(p, alpha), expected)


def test_bh_leave_one_out_handles_large_m():
    p = np.linspace(0.0, 1.0, 200001)
    k_hats = procedures.bh_leave_one_out(p, 0.1)
    assert k_hats.shape == p.shape
    assert np.all(k_hats >= 1)


@pytest.mark.parametrize('rejected, h0, expected', [
    (set(), {1, 2}, 0.0),
    ({1, 2}, {1}, 0.5),
    ({1, 2, 3}, {1, 2, 3}, 1.0),
])
def test_fdp(rejected, h0, expected):
    assert procedures.fdp(rejected, h0) == expected


def test_modified_fdp_reduces_to_fdp():
    assert procedures.modified_fdp({1, 2, 3}, {1}, 10, 0.1) == procedures.fdp({1, 2, 3}, {1})
    assert procedures.modified_fdp(set(), {1}, 10, 0.1) == 0.0
    assert procedures.modified_fdp(set(), {1}, 10, 0.1, ApproxParams(0.0, 0.05)) == 0.0


def test_modified_fdp_formula():
    value = procedures.modified_fdp({1, 2, 3, 4}, {1, 2}, 10, 0.5, ApproxParams(0.0, 0.05))
    assert value == pytest.approx(0.4)


def test_modified_fdp_requires_positive_alpha_with_delta():
    with pytest.raises(errors.DomainError):
        procedures.modified_fdp({1}, {1}, 10, 0.0, ApproxParams(0.0, 0.05))


@given(pvalues_and_nulls(), st.floats(0.0, 1.0), st.floats(0.0, 0.1))
def test_modified_fdp_at_most_fdp(case, epsilon, delta):
    p, h0, alpha = case
    if delta > 0 and alpha == 0:
        return
    rejected = procedures.bh_reject(p, alpha).rejected
    value = procedures.modified_fdp(rejected, h0, p.size, alpha, ApproxParams(epsilon, delta))
    assert 0.0 <= value <= procedures.fdp(rejected, h0)


@pytest.mark.parametrize('m, expected', [(1, 1.0), (3, 11 / 6), (100, 5.187377517639621)])
def test_harmonic(m, expected):
    assert procedures.harmonic(m) == pytest.approx(expected, rel=1e-14)


def test_harmonic_rejects_zero():
    with pytest.raises(errors.DomainError):
        procedures.harmonic(0)


def test_bh_harmonic_level():
    assert procedures.bh_harmonic_level(0.1, 3) == pytest.approx(0.1 * 11 / 6)


def test_to_compound():
    corrected = procedures.to_compound([0.0, 0.5, 0.95], ApproxParams(0.1, 0.01))
    np.testing.assert_allclose(corrected, [0.01, 0.56, 1.0])
