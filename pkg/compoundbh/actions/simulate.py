"""
    compoundbh/actions/simulate
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~

    Contains functionality for the `simulate` action.
"""
from .. import reports, results, suites
from ..hints import Float, Int, OptionalStr, Str


@results.wrapper
def simulate(suite: Str,
             reps: Int,
             seed: Int,
             workers: Int,
             alpha: Float,
             fuzz_seeds: Int,
             out_prefix: OptionalStr = None) -> results.Result:
    """
    Responsible for running a verification suite.

    :param suite: Suite name
    :param reps: Replicates per scenario
    :param seed: Experiment seed
    :param workers: joblib worker count
    :param alpha: Level of the fuzz batteries
    :param fuzz_seeds: Number of random scenarios in the fuzz batteries
    :param out_prefix: Write ``<prefix>_<suite>.json`` and ``<prefix>_<suite>.csv``
    :return: Result failing when any row fails
    """
    params = suites.SuiteParams(reps=reps, seed=seed, workers=workers, alpha=alpha, fuzz_seeds=fuzz_seeds)
    report = suites.run_suite(suite, params)
    frame = reports.records_frame(report.rows)
    if out_prefix:
        reports.write_json(report, f'{out_prefix}_{suite}.json')
        reports.write_csv(frame, f'{out_prefix}_{suite}.csv')

    summary = f'{suite}: {len(report.rows) - len(report.failures)} of {len(report.rows)} scenarios passed'
    table = reports.format_rows(frame.drop(columns=['suite'])) if not frame.empty else ''
    failed = ', '.join(r.scenario for r in report.failures)
    return results.verdict(report.passed, stdout=f'{table}\n{summary}',
                           stderr=f'failed: {failed}' if failed else '')
