"""
    test_permutation
    ~~~~~~~~~~~~~~~~

    Tests for the :mod:`~compoundbh.constructions.permutation` module.
"""
import math

import numpy as np
import pytest

from compoundbh import errors
from compoundbh.constructions import (PooledNull, TrialData, difference_in_means, permutation_pooled_pvalues,
                                      permutation_pvalues)
from compoundbh.constructions.permutation import as_trials, assignments


def test_two_trials_hand_example():
    trials = as_trials([([1.0], [0.0]), ([3.0], [0.0])])
    p = permutation_pooled_pvalues(trials, difference_in_means).values
    np.testing.assert_allclose(p, [0.5, 0.25])


def test_single_trial_reduces_to_classical():
    trial = TrialData(np.array([5.0, 4.0, 1.0, 0.0, 2.0]), 2)
    pooled = permutation_pooled_pvalues([trial], difference_in_means).values
    classical = permutation_pvalues([trial], difference_in_means).values
    # Treated {5, 4} is the largest of the C(5, 2) = 10 assignments.
    np.testing.assert_allclose(pooled, [0.1])
    np.testing.assert_allclose(classical, [0.1])


def test_identity_assignment_always_counts():
    gen = np.random.default_rng(1)
    trials = [TrialData(gen.normal(size=6), 3) for _ in range(8)]
    p = permutation_pooled_pvalues(trials, difference_in_means).values
    assert np.all(p >= 1 / (8 * math.comb(6, 3)))


def test_within_group_order_is_irrelevant():
    gen = np.random.default_rng(5)
    trials = [TrialData(gen.normal(size=7), 3) for _ in range(5)]
    shuffled = [TrialData(np.concatenate([gen.permutation(t.treated), gen.permutation(t.control)]), 3)
                for t in trials]
    np.testing.assert_allclose(permutation_pooled_pvalues(trials, difference_in_means).values,
                               permutation_pooled_pvalues(shuffled, difference_in_means).values)


def test_exact_enumeration_lists_every_assignment():
    trial = TrialData(np.arange(6.0), 2)
    masks, approximated = assignments(trial, exact_cap=100, mc_draws=10, seed=0, index=0)
    assert not approximated
    assert masks.shape == (15, 6)
    assert len({tuple(row) for row in masks}) == 15
    assert masks[0].tolist() == [True, True, False, False, False, False]


def test_sampled_assignments_when_over_cap():
    trial = TrialData(np.arange(12.0), 6)
    masks, approximated = assignments(trial, exact_cap=100, mc_draws=50, seed=3, index=2)
    assert approximated
    assert masks.shape == (51, 12)
    assert np.all(masks.sum(axis=1) == 6)
    assert masks[0, :6].all()
    again, _ = assignments(trial, exact_cap=100, mc_draws=50, seed=3, index=2)
    np.testing.assert_array_equal(masks, again)


def test_pooled_null_reports_sampled_trials():
    trials = [TrialData(np.arange(12.0), 6), TrialData(np.arange(4.0), 2)]
    pooled = PooledNull.from_trials(trials, difference_in_means, exact_cap=100, mc_draws=20, seed=1)
    assert pooled.approximated == {0}
    assert pooled.tail[0] == pytest.approx(1.0)
    assert pooled.pvalue(-math.inf) == pytest.approx(1.0)
    assert pooled.pvalue(math.inf) == 0.0


def test_workers_do_not_change_results():
    gen = np.random.default_rng(9)
    trials = [TrialData(gen.normal(size=8), 4) for _ in range(6)]
    one = permutation_pooled_pvalues(trials, difference_in_means, exact_cap=30, seed=4, mc_draws=40, workers=1)
    two = permutation_pooled_pvalues(trials, difference_in_means, exact_cap=30, seed=4, mc_draws=40, workers=2)
    np.testing.assert_array_equal(one.values, two.values)


@pytest.mark.parametrize('values, n_treated', [([1.0, 2.0], 0), ([1.0, 2.0], 2), ([[1.0]], 1)])
def test_degenerate_trials(values, n_treated):
    with pytest.raises(errors.DomainError):
        TrialData(np.array(values), n_treated)


def test_empty_trial_list():
    with pytest.raises(errors.DomainError):
        permutation_pooled_pvalues([], difference_in_means)


def test_compound_validity_under_global_null():
    gen = np.random.default_rng(11)
    m, reps = 20, 200
    grid = np.array([0.05, 0.1, 0.2, 0.5])
    below = np.empty((reps, grid.size))
    for r in range(reps):
        trials = [TrialData(gen.exponential(size=6), 3) for _ in range(m)]
        p = permutation_pooled_pvalues(trials, difference_in_means).values
        below[r] = (p[:, None] <= grid[None, :]).mean(axis=0)
    se = below.std(axis=0, ddof=1) / math.sqrt(reps)
    assert np.all(below.mean(axis=0) <= grid + 3 * se + 1e-12)


@pytest.mark.slow
def test_compound_validity_under_global_null_at_scale():
    gen = np.random.default_rng(12)
    m, reps = 200, 300
    scales = gen.uniform(0.5, 4.0, size=m)
    grid = np.array([0.01, 0.05, 0.1, 0.2, 0.5])
    below = np.empty((reps, grid.size))
    for r in range(reps):
        trials = [TrialData(gen.exponential(size=6) * scale, 3) for scale in scales]
        p = permutation_pooled_pvalues(trials, difference_in_means).values
        below[r] = (p[:, None] <= grid[None, :]).mean(axis=0)
    se = below.std(axis=0, ddof=1) / math.sqrt(reps)
    assert np.all(below.mean(axis=0) <= grid + 3 * se + 1e-12)
