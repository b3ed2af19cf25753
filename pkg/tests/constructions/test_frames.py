"""
    test_frames
    ~~~~~~~~~~~

    Tests for the table adapters in :mod:`~compoundbh.constructions`.
"""
import numpy as np
import pandas as pd
import pytest

from compoundbh import constructions, errors


def test_registry():
    frame = pd.DataFrame({'p': [0.2, 0.4], 'w': [0.5, 1.5]})
    np.testing.assert_allclose(constructions.for_type('weighted')(frame), [0.4, 0.4 / 1.5])
    with pytest.raises(errors.ConstructionTypeNotSupported):
        constructions.for_type('bonferroni')


def test_decreasing_density_frame():
    frame = pd.DataFrame({'x': [0.5, 2.0, 7.0]})
    expected = constructions.decreasing_density_pvalues([0.5, 2.0, 7.0]).values
    np.testing.assert_array_equal(constructions.for_type('decreasing-density')(frame), expected)


def test_gaussian_means_frame():
    frame = pd.DataFrame({'ybar': [0.0, 1.5], 's2': [1.0, 2.0], 'n': [5, 5]})
    assert constructions.for_type('gaussian-means')(frame)[0] == 1.0


def test_mc_pooled_frame():
    frame = pd.DataFrame({'t_obs': [5.0], 'null_1': [3.0], 'null_2': [7.0]})
    assert constructions.for_type('mc-pooled')(frame).tolist() == [pytest.approx(2 / 3)]


@pytest.mark.parametrize('name, columns', [
    ('decreasing-density', ['y']),
    ('weighted', ['p']),
    ('gaussian-means', ['ybar', 'n']),
    ('mc-pooled', ['t_obs']),
])
def test_missing_columns(name, columns):
    frame = pd.DataFrame({c: [1.0] for c in columns})
    with pytest.raises(errors.IngestColumnsMissing):
        constructions.for_type(name)(frame)
