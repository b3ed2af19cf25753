"""
    test_headlines
    ~~~~~~~~~~~~~~

    Tests for the :mod:`~compoundbh.headlines` module.
"""
import itertools
import math

import numpy as np
import pytest

from compoundbh import errors, headlines
from compoundbh.config import AnalysisConfig, DigitMode, SchemaMap
from compoundbh.constructions.permutation import TrialData

from .conftest import HEADLINE_ROWS, write_rows


def test_ingest_groups_articles(headline_csv):
    trial_set = headlines.ingest_headline_csv(headline_csv)
    assert trial_set.article_ids == ('a1', 'a2')
    assert len(trial_set) == 2
    assert trial_set.errors == ()
    assert trial_set.stats == headlines.IngestStats(rows=9, bad_rows=0, articles=3, dropped_one_sided=1,
                                                    dropped_small=0, kept_articles=2, kept_headlines=7)
    first = trial_set.trials[0]
    assert first.n_treated == 2
    np.testing.assert_array_equal(first.values, [[60, 1000], [50, 1000], [20, 1000], [25, 1000]])


def test_ingest_reads_quoted_headlines(headline_csv):
    assert '"Cats, explained"' in headline_csv.read_text(encoding='utf-8')
    trial_set = headlines.ingest_headline_csv(headline_csv)
    assert trial_set.stats.bad_rows == 0
    second = trial_set.trials[1]
    assert second.n == 3
    np.testing.assert_array_equal(second.values, [[20, 800], [30, 800], [28, 800]])


def test_ingest_drops_small_articles(headline_csv):
    trial_set = headlines.ingest_headline_csv(headline_csv, min_headlines=4)
    assert trial_set.article_ids == ('a1',)
    assert trial_set.stats.dropped_small == 1


def test_ingest_custom_schema(tmp_path):
    rows = [('id', 'title', 'shown', 'hits')] + HEADLINE_ROWS[1:]
    path = write_rows(tmp_path / 'renamed.csv', rows)
    trial_set = headlines.ingest_headline_csv(path, SchemaMap('id', 'title', 'shown', 'hits'))
    assert trial_set.article_ids == ('a1', 'a2')


def test_ingest_drops_few_bad_rows(tmp_path):
    rows = [HEADLINE_ROWS[0]]
    for j in range(150):
        rows.append((f'b{j}', f'{j} things' if j % 2 else 'plain', '100', '5'))
        rows.append((f'b{j}', 'other', '100', '4'))
    rows.insert(3, ('b1', 'broken', '100', '200'))
    trial_set = headlines.ingest_headline_csv(write_rows(tmp_path / 'bad.csv', rows))
    assert trial_set.errors == (headlines.RowError(4, 'clicks exceed impressions'),)
    assert trial_set.stats.bad_rows == 1
    assert trial_set.stats.rows == 301


@pytest.mark.parametrize('row, reason', [
    (('', 'no id', '10', '1'), 'missing article id'),
    (('a9', 'x', 'many', '1'), 'unparsable impressions'),
    (('a9', 'x', '10', '-1'), 'unparsable clicks'),
    (('a9', 'x', '10', '1.5'), 'unparsable clicks'),
])
def test_ingest_rejects_too_many_bad_rows(tmp_path, row, reason):
    path = write_rows(tmp_path / 'bad.csv', HEADLINE_ROWS + [row])
    with pytest.raises(errors.IngestTooManyBadRows) as exc:
        headlines.ingest_headline_csv(path)
    assert exc.value.bad == 1
    assert exc.value.total == 10


def test_ingest_missing_columns(tmp_path):
    path = write_rows(tmp_path / 'short.csv', [row[:3] for row in HEADLINE_ROWS])
    with pytest.raises(errors.IngestColumnsMissing) as exc:
        headlines.ingest_headline_csv(path)
    assert exc.value.columns == ['clicks']


def test_ingest_missing_file(tmp_path):
    with pytest.raises(errors.IngestFileNotFound):
        headlines.ingest_headline_csv(tmp_path / 'nope.csv')


def test_ingest_rejects_digit_mode(headline_csv):
    with pytest.raises(errors.ConfigInvalid):
        headlines.ingest_headline_csv(headline_csv, digit_mode='roman')


@pytest.mark.parametrize('mode, kept', [(DigitMode.Unicode, ('c1',)), (DigitMode.Ascii, ())])
def test_ingest_digit_modes(tmp_path, mode, kept):
    rows = [HEADLINE_ROWS[0], ('c1', '٣ things', '100', '9'), ('c1', 'plain', '100', '3'),
            ('c1', 'other', '100', '4')]
    trial_set = headlines.ingest_headline_csv(write_rows(tmp_path / 'digits.csv', rows), digit_mode=mode)
    assert trial_set.article_ids == kept


def test_statistic_table():
    trial = TrialData(np.array([[60, 1000], [50, 1000], [20, 1000], [25, 1000]]), 2)
    assert headlines.HeadlineStatistic.table(trial) == (110, 1890, 45, 1955)
    assert 0.0 <= headlines.headline_statistic(trial) <= 1.0


def test_statistic_batch_matches_call():
    trial = TrialData(np.array([[9, 100], [4, 80], [7, 120], [3, 50], [5, 90]]), 2)
    masks = np.zeros((10, 5), dtype=bool)
    for row, treated in enumerate(itertools.combinations(range(5), 2)):
        masks[row, list(treated)] = True
    expected = [headlines.headline_statistic(trial.assign(np.flatnonzero(mask))) for mask in masks]
    np.testing.assert_allclose(headlines.HEADLINE_STATISTIC.batch(trial, masks), expected, rtol=1e-12, atol=1e-15)


def test_analyze(headline_csv):
    trial_set = headlines.ingest_headline_csv(headline_csv)
    report = headlines.analyze(trial_set, AnalysisConfig(alphas=(0.2, 0.5)))
    np.testing.assert_allclose(report.perm_pvalues, [1 / 6, 1.0])
    assert report.compound_pvalues[0] == pytest.approx(1 / 12)
    assert report.compound_pvalues[1] >= 0.5
    assert report.approximated == ()
    assert report.discoveries[0] == headlines.Discoveries(0.2, 0, 1)
    assert report.discoveries[1].pvalues == 1
    assert report.settings['ingest']['kept_articles'] == 2

    frame = report.frame()
    assert list(frame['article_id']) == ['a1', 'a2']
    assert list(frame['n_headlines']) == [4, 3]
    assert list(frame['n_treated']) == [2, 1]

    ranked = report.sorted_frame()
    assert list(ranked['diagonal']) == [0.5, 1.0]
    assert list(ranked['perm_pvalue']) == sorted(report.perm_pvalues)

    summary = report.summary()
    assert summary['m'] == 2
    assert summary['headlines'] == 7
    assert report.table().startswith('m = 2 articles, 7 headlines')


def test_analyze_marks_sampled_articles(headline_csv):
    report = headlines.analyze(headlines.ingest_headline_csv(headline_csv), AnalysisConfig(exact_cap=4, mc_draws=50))
    assert report.approximated == ('a1',)
    assert 'sampled assignments' in report.table()


def test_analyze_rejects_empty(headline_csv):
    trial_set = headlines.ingest_headline_csv(headline_csv, min_headlines=10)
    with pytest.raises(errors.DomainError):
        headlines.analyze(trial_set)


def null_trial_set(seed, m=30, n=5, n_treated=2):
    gen = np.random.default_rng(seed)
    trials = []
    for rate in gen.uniform(0.01, 0.05, size=m):
        impressions = np.full(n, 1000)
        trials.append(TrialData(np.column_stack([gen.binomial(impressions, rate), impressions]), n_treated))
    stats = headlines.IngestStats(m * n, 0, m, 0, 0, m, m * n)
    return headlines.TrialSet(tuple(f'n{j}' for j in range(m)), tuple(trials), stats)


def test_analyze_global_null_rarely_discovers():
    runs, alpha = 40, 0.2
    found = np.array([
        headlines.analyze(null_trial_set(seed), AnalysisConfig(alphas=(alpha,))).discoveries[0].compound > 0
        for seed in range(runs)
    ], dtype=float)
    se = found.std(ddof=1) / math.sqrt(runs)
    assert found.mean() <= alpha + 2 * alpha ** 2 + 3 * se
