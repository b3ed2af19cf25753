"""
    compoundbh/actions/analyze
    ~~~~~~~~~~~~~~~~~~~~~~~~~~

    Contains functionality for the `analyze` action.
"""
from .. import config, headlines, loggers, reports, results
from ..hints import FilePath, FloatSequence, OptionalInt, OptionalStr

LOG = loggers.get_logger()


@results.wrapper
def analyze(path: FilePath,
            alphas: FloatSequence = (),
            min_headlines: OptionalInt = None,
            exact_cap: OptionalInt = None,
            mc_draws: OptionalInt = None,
            seed: OptionalInt = None,
            digit_mode: OptionalStr = None,
            workers: OptionalInt = None,
            out_prefix: OptionalStr = None,
            config_path: OptionalStr = None) -> results.Result:
    """
    Responsible for running the headline pipeline on a CSV file.

    :param path: Headline CSV
    :param alphas: BH levels; the configured ones when empty
    :param min_headlines: Smallest number of headlines per kept article
    :param exact_cap: Largest assignment count enumerated exactly
    :param mc_draws: Sampled assignments for larger articles
    :param seed: Seed of sampled assignments
    :param digit_mode: Digit detection rule
    :param workers: joblib worker count
    :param out_prefix: Write ``<prefix>_pvalues.csv``, ``<prefix>_sorted.csv`` and ``<prefix>_report.json``
    :param config_path: JSON analysis configuration whose values the other options override
    :return: Result of the analyze action
    """
    base = config.read(config_path) if config_path else config.AnalysisConfig()
    cfg = config.overrides(base,
                           alphas=tuple(alphas) or None,
                           min_headlines=min_headlines,
                           exact_cap=exact_cap,
                           mc_draws=mc_draws,
                           seed=seed,
                           digit_mode=digit_mode,
                           workers=workers)

    trial_set = headlines.ingest_headline_csv(path, cfg.schema, cfg.min_headlines, cfg.digit_mode)
    report = headlines.analyze(trial_set, cfg)

    if out_prefix:
        reports.write_csv(report.frame(), f'{out_prefix}_pvalues.csv')
        reports.write_csv(report.sorted_frame(), f'{out_prefix}_sorted.csv')
        reports.write_json(report.summary(), f'{out_prefix}_report.json')
        LOG.debug(f'wrote analysis outputs with prefix {out_prefix}')

    return results.success(stdout=report.table())
