"""
    compoundbh/headlines
    ~~~~~~~~~~~~~~~~~~~~

    Contains the headline A/B test pipeline: CSV ingestion into per-article trials,
    the Fisher exact test statistic, and the analysis comparing classical
    permutation p-values with pooled compound p-values under BH.

    Within an article, headlines are the exchangeable units under the null; the
    treated group is the headlines containing a numerical digit.
"""
import dataclasses
import os

import numpy as np
import pandas as pd

from . import defaults, errors, loggers, numerics, procedures
from .config import AnalysisConfig, DigitMode, SchemaMap
from .constructions.permutation import PooledNull, TrialData
from .hints import Any, Array, FilePath, Float, Int, List, StrAnyDict, Str, Tuple

LOG = loggers.get_logger()

#: Patterns deciding whether a headline contains a digit.
DIGIT_PATTERNS = {
    DigitMode.Unicode: r'\d',
    DigitMode.Ascii: r'[0-9]',
}


@dataclasses.dataclass(frozen=True)
class HeadlineRecord:
    """
    Represents one row of the headline CSV.
    """
    article_id: Str
    headline: Str
    impressions: Int
    clicks: Int


@dataclasses.dataclass(frozen=True)
class RowError:
    """
    Represents a rejected CSV row. `line` is the 1-based line number in the file.
    """
    line: Int
    reason: Str


@dataclasses.dataclass(frozen=True)
class IngestStats:
    """
    Represents what ingestion kept and dropped.
    """
    rows: Int
    bad_rows: Int
    articles: Int
    dropped_one_sided: Int
    dropped_small: Int
    kept_articles: Int
    kept_headlines: Int


@dataclasses.dataclass(frozen=True)
class TrialSet:
    """
    Represents one trial per article with units ``[clicks, impressions]``, digit headlines first.
    """
    article_ids: Tuple[Str, ...]
    trials: Tuple[TrialData, ...]
    stats: IngestStats
    errors: Tuple[RowError, ...] = ()

    def __len__(self) -> Int:
        return len(self.trials)


def _parse_counts(column: pd.Series) -> pd.Series:
    numbers = pd.to_numeric(column.str.strip(), errors='coerce')
    integral = numbers.notna() & (numbers == np.floor(numbers)) & (numbers >= 0)
    return numbers.where(integral)


def ingest_headline_csv(path: FilePath,
                        schema: SchemaMap = SchemaMap(),
                        min_headlines: Int = defaults.MIN_HEADLINES,
                        digit_mode: Str = defaults.DIGIT_MODE) -> TrialSet:
    """
    Read a headline CSV and group it into per-article trials.

    Rows with missing ids, unparsable or negative counts, or more clicks than
    impressions are dropped and reported; more than 1% of such rows fails the file.
    Articles whose headlines all have, or all lack, a digit are dropped, as are
    articles with fewer than `min_headlines` headlines.

    :param path: CSV path
    :param schema: Column names
    :param min_headlines: Smallest number of headlines an article needs to be kept
    :param digit_mode: ``unicode`` (any decimal digit) or ``ascii`` (0-9)
    :return: Trials in order of first appearance
    """
    if not os.path.isfile(path):
        raise errors.IngestFileNotFound(path)
    if digit_mode not in DIGIT_PATTERNS:
        raise errors.ConfigInvalid(f'digit_mode must be one of {tuple(DIGIT_PATTERNS)}, got {digit_mode!r}')
    frame = pd.read_csv(path, dtype=str, keep_default_na=False, encoding='utf-8')
    missing = [c for c in schema.columns() if c not in frame.columns]
    if missing:
        raise errors.IngestColumnsMissing(missing)

    frame = frame.rename(columns={
        schema.article_id: 'article_id',
        schema.headline: 'headline',
        schema.impressions: 'impressions',
        schema.clicks: 'clicks',
    })[['article_id', 'headline', 'impressions', 'clicks']]
    impressions = _parse_counts(frame['impressions'])
    clicks = _parse_counts(frame['clicks'])

    reasons = pd.Series('', index=frame.index)
    reasons[frame['article_id'].str.strip() == ''] = 'missing article id'
    reasons[(reasons == '') & impressions.isna()] = 'unparsable impressions'
    reasons[(reasons == '') & clicks.isna()] = 'unparsable clicks'
    reasons[(reasons == '') & (clicks > impressions)] = 'clicks exceed impressions'
    bad = reasons != ''
    row_errors = tuple(RowError(int(i) + 2, reasons[i]) for i in frame.index[bad])
    total = len(frame)
    if total and bad.sum() / total > defaults.INGEST_MAX_BAD_FRACTION:
        raise errors.IngestTooManyBadRows(int(bad.sum()), total, defaults.INGEST_MAX_BAD_FRACTION)
    if row_errors:
        LOG.warning(f'dropped {len(row_errors)} malformed rows of {total}; first at line {row_errors[0].line}: '
                    f'{row_errors[0].reason}')

    good = frame[~bad].assign(
        impressions=impressions[~bad].astype(np.int64),
        clicks=clicks[~bad].astype(np.int64),
        digit=frame.loc[~bad, 'headline'].str.contains(DIGIT_PATTERNS[digit_mode], regex=True),
    )

    ids: List[Str] = []
    trials: List[TrialData] = []
    one_sided = small = headlines = 0
    groups = good.groupby('article_id', sort=False)
    for article_id, group in groups:
        n_treated = int(group['digit'].sum())
        if n_treated == 0 or n_treated == len(group):
            one_sided += 1
            continue
        if len(group) < min_headlines:
            small += 1
            continue
        ordered = pd.concat([group[group['digit']], group[~group['digit']]])
        ids.append(str(article_id))
        trials.append(TrialData(ordered[['clicks', 'impressions']].to_numpy(dtype=np.int64), n_treated))
        headlines += len(group)

    stats = IngestStats(total, len(row_errors), groups.ngroups, one_sided, small, len(trials), headlines)
    LOG.info(f'kept {stats.kept_articles} of {stats.articles} articles ({stats.kept_headlines} headlines); '
             f'dropped {one_sided} without both headline kinds and {small} with fewer than {min_headlines} headlines')
    return TrialSet(tuple(ids), tuple(trials), stats, row_errors)


class HeadlineStatistic:
    """
    One minus the one-sided Fisher exact p-value of the table pooling clicks and
    non-clicks of the treated headlines against the control headlines.
    """

    @staticmethod
    def table(trial: TrialData) -> Tuple[Int, Int, Int, Int]:
        clicks = trial.values[:, 0].astype(np.int64)
        no_clicks = (trial.values[:, 1] - trial.values[:, 0]).astype(np.int64)
        k = trial.n_treated
        return int(clicks[:k].sum()), int(no_clicks[:k].sum()), int(clicks[k:].sum()), int(no_clicks[k:].sum())

    def __call__(self, trial: TrialData) -> Float:
        return 1.0 - numerics.fisher_exact_onesided(*self.table(trial))

    def batch(self, trial: TrialData, masks: Array) -> Array:
        """
        Evaluate the statistic for every treated mask at once.
        """
        clicks = trial.values[:, 0].astype(np.int64)
        no_clicks = (trial.values[:, 1] - trial.values[:, 0]).astype(np.int64)
        selected = masks.astype(np.int64)
        a = selected @ clicks
        b = selected @ no_clicks
        c = clicks.sum() - a
        d = no_clicks.sum() - b
        return 1.0 - numerics.fisher_exact_onesided_many(a, b, c, d)


HEADLINE_STATISTIC = HeadlineStatistic()


def headline_statistic(trial: TrialData) -> Float:
    """
    Compute ``1 - p_Fisher`` of the pooled 2x2 clicks table of a trial.

    :param trial: Trial with units ``[clicks, impressions]``, treated first
    :return: Statistic; large values are evidence that digits raise the click rate
    """
    return HEADLINE_STATISTIC(trial)


@dataclasses.dataclass(frozen=True)
class Discoveries:
    """
    Represents BH discovery counts at one level.
    """
    alpha: Float
    pvalues: Int
    compound: Int


@dataclasses.dataclass(frozen=True)
class AnalysisReport:
    """
    Represents per-article statistics and p-values, and BH discovery counts per level.
    """
    article_ids: Tuple[Str, ...]
    n_headlines: Array
    n_treated: Array
    statistics: Array
    perm_pvalues: Array
    compound_pvalues: Array
    approximated: Tuple[Str, ...]
    discoveries: Tuple[Discoveries, ...]
    settings: StrAnyDict

    def frame(self) -> pd.DataFrame:
        """
        One row per article.
        """
        approximated = set(self.approximated)
        return pd.DataFrame({
            'article_id': list(self.article_ids),
            'n_headlines': self.n_headlines,
            'n_treated': self.n_treated,
            'statistic': self.statistics,
            'perm_pvalue': self.perm_pvalues,
            'compound_pvalue': self.compound_pvalues,
            'approximated': [a in approximated for a in self.article_ids],
        })

    def sorted_frame(self) -> pd.DataFrame:
        """
        Both p-value vectors sorted, with the uniform diagonal, for plotting.
        """
        m = len(self.article_ids)
        return pd.DataFrame({
            'rank': np.arange(1, m + 1),
            'diagonal': np.arange(1, m + 1) / m,
            'perm_pvalue': np.sort(self.perm_pvalues),
            'compound_pvalue': np.sort(self.compound_pvalues),
        })

    def summary(self) -> StrAnyDict:
        return {
            'm': len(self.article_ids),
            'headlines': int(self.n_headlines.sum()),
            'approximated': list(self.approximated),
            'discoveries': [dataclasses.asdict(d) for d in self.discoveries],
            'settings': self.settings,
        }

    def table(self) -> Str:
        """
        Human readable discovery table.
        """
        lines = [f'm = {len(self.article_ids)} articles, {int(self.n_headlines.sum())} headlines',
                 f'{"alpha":>8} {"p-values":>10} {"compound":>10}']
        lines += [f'{d.alpha:>8g} {d.pvalues:>10d} {d.compound:>10d}' for d in self.discoveries]
        if self.approximated:
            lines.append(f'{len(self.approximated)} articles used sampled assignments')
        return '\n'.join(lines)


def analyze(trial_set: TrialSet, cfg: AnalysisConfig = AnalysisConfig()) -> AnalysisReport:
    """
    Compute permutation and compound p-values for every article and run BH on both.

    :param trial_set: Ingested trials
    :param cfg: Levels, enumeration cap, seed and workers
    :return: Report
    """
    if not len(trial_set):
        raise errors.DomainError('no articles left to analyze')
    pooled = PooledNull.from_trials(trial_set.trials, HEADLINE_STATISTIC, cfg.exact_cap, cfg.mc_draws, cfg.seed,
                                    cfg.workers)
    perm = pooled.single_trial_pvalues()
    compound = pooled.pooled_pvalues()
    discoveries = tuple(
        Discoveries(alpha, procedures.bh_reject(perm, alpha).k_hat, procedures.bh_reject(compound, alpha).k_hat)
        for alpha in cfg.alphas
    )
    settings: Any = dataclasses.asdict(cfg)
    settings['ingest'] = dataclasses.asdict(trial_set.stats)
    return AnalysisReport(
        article_ids=trial_set.article_ids,
        n_headlines=np.array([t.n for t in trial_set.trials]),
        n_treated=np.array([t.n_treated for t in trial_set.trials]),
        statistics=pooled.observed,
        perm_pvalues=perm,
        compound_pvalues=compound,
        approximated=tuple(trial_set.article_ids[j] for j in sorted(pooled.approximated)),
        discoveries=discoveries,
        settings=settings,
    )
