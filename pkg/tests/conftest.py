"""
    conftest
    ~~~~~~~~

    Shared fixtures for the test suite.
"""
import csv
import io

import pytest
from hypothesis import settings

from compoundbh import suites

settings.register_profile('default', max_examples=100, deadline=None)
settings.load_profile('default')

#: Small headline data set: a1 and a2 keep both arms, a3 has digit headlines only.
HEADLINE_ROWS = [
    ('clickability_test_id', 'headline', 'impressions', 'clicks'),
    ('a1', '5 reasons to read this', '1000', '60'),
    ('a1', 'Why you should read this', '1000', '20'),
    ('a1', 'Read this now', '1000', '25'),
    ('a1', '3 ways this changes things', '1000', '50'),
    ('a2', 'A story about cats', '800', '30'),
    ('a2', '10 cats you will love', '800', '20'),
    ('a2', 'Cats, explained', '800', '28'),
    ('a3', '7 facts', '500', '10'),
    ('a3', '8 facts', '500', '12'),
]


def write_rows(path, rows):
    with io.open(path, mode='w', encoding='utf-8', newline='') as f:
        csv.writer(f, lineterminator='\n').writerows(rows)
    return path


@pytest.fixture(scope='function')
def headline_csv(tmp_path):
    """
    Fixture that writes the small headline data set and returns its path.
    """
    return write_rows(tmp_path / 'headlines.csv', HEADLINE_ROWS)


@pytest.fixture(scope='function')
def suite_params():
    """
    Fixture that returns suite parameters small enough for unit tests.
    """
    return suites.SuiteParams(reps=400, seed=7, workers=1, alpha=0.1, fuzz_seeds=5, fuzz_m=10, max_atoms=3,
                              chunk=128, se_multiplier=5.0)
