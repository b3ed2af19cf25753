"""
    compoundbh/cli
    ~~~~~~~~~~~~~~

    Contains command line interface (CLI) for `compoundbh`.
"""
import typer

from . import actions, constructions, defaults, loggers, meta, results, suites
from .config import METRICS, Metric
from .hints import Float, FloatList, Int, OptionalInt, OptionalStr, Str

__all__ = ['run']


LOG = loggers.get_logger()


app = typer.Typer(
    help=meta.TAGLINE,
    no_args_is_help=True,
    add_completion=False
)


@app.command(help='Run BH with pooled permutation p-values on an A/B headline CSV')
def analyze(
        path: Str = typer.Option(
            ...,
            '-i',
            '--input',
            help='Headline CSV with article id, headline, impressions and clicks columns'
        ),
        alphas: FloatList = typer.Option(
            [],
            '-a',
            '--alpha',
            show_default=False,
            help='BH level, may be repeated [default: 0.2 and 0.5]'
        ),
        min_headlines: OptionalInt = typer.Option(
            None,
            '--min-headlines',
            help='Keep only articles with at least this many headlines'
        ),
        exact_cap: OptionalInt = typer.Option(
            None,
            '--exact-cap',
            help='Largest number of label assignments enumerated exactly per article'
        ),
        mc_draws: OptionalInt = typer.Option(
            None,
            '--mc-draws',
            help='Random assignments drawn for articles above the exact cap'
        ),
        seed: OptionalInt = typer.Option(
            None,
            '-s',
            '--seed',
            help='Seed of the random assignments'
        ),
        digit_mode: OptionalStr = typer.Option(
            None,
            '--digit-mode',
            help='Digit detection: unicode or ascii'
        ),
        workers: OptionalInt = typer.Option(
            None,
            '-w',
            '--workers',
            help='joblib worker count'
        ),
        out_prefix: OptionalStr = typer.Option(
            None,
            '-o',
            '--out-prefix',
            help='Write <prefix>_pvalues.csv, <prefix>_sorted.csv and <prefix>_report.json'
        ),
        config_path: OptionalStr = typer.Option(
            None,
            '-c',
            '--config',
            help='JSON analysis config; flags override its values'
        ),
) -> None:
    action = exit_wrapper(results.logger(actions.analyze))
    action(path, alphas, min_headlines, exact_cap, mc_draws, seed, digit_mode, workers, out_prefix, config_path)


@app.command(help='Run a Monte Carlo verification suite')
def simulate(
        suite: Str = typer.Option(
            ...,
            '--suite',
            help=f'Suite name, one of: {", ".join(suites.TYPES)}'
        ),
        reps: Int = typer.Option(
            defaults.REPS,
            '-r',
            '--reps',
            help='Replicates per scenario'
        ),
        seed: Int = typer.Option(
            defaults.SEED,
            '-s',
            '--seed',
            help='Experiment seed'
        ),
        workers: Int = typer.Option(
            defaults.WORKERS,
            '-w',
            '--workers',
            help='joblib worker count'
        ),
        alpha: Float = typer.Option(
            defaults.ALPHA,
            '-a',
            '--alpha',
            help='Level of the random scenario batteries'
        ),
        fuzz_seeds: Int = typer.Option(
            defaults.SUITE_FUZZ_SEEDS,
            '--fuzz-seeds',
            help='Number of random scenarios per battery'
        ),
        out_prefix: OptionalStr = typer.Option(
            None,
            '-o',
            '--out-prefix',
            help='Write <prefix>_<suite>.json and <prefix>_<suite>.csv'
        ),
) -> None:
    action = exit_wrapper(results.logger(actions.simulate))
    action(suite, reps, seed, workers, alpha, fuzz_seeds, out_prefix)


@app.command(name='verify-bounds', help='Verify the numerical constants and identities behind the FDR bounds')
def verify_bounds(
        tol: Float = typer.Option(
            defaults.C_SEQUENCE_TOL,
            '--tol',
            help='Convergence tolerance of the c sequence'
        ),
        length: Int = typer.Option(
            defaults.C_SEQUENCE_L,
            '--L',
            help='Number of c sequence terms'
        ),
        out: OptionalStr = typer.Option(
            None,
            '-o',
            '--out',
            help='Also write the JSON report to this file'
        ),
) -> None:
    action = exit_wrapper(results.logger(actions.verify_bounds))
    action(tol, length, out)


@app.command(help='Compute compound p-values of a construction from a CSV table')
def construct(
        construction: Str = typer.Argument(
            ...,
            metavar='CONSTRUCTION',
            help=f'Construction name, one of: {", ".join(constructions.TYPES)}'
        ),
        path: Str = typer.Option(
            ...,
            '-i',
            '--input',
            help='Input CSV'
        ),
        out: OptionalStr = typer.Option(
            None,
            '-o',
            '--out',
            help='Output CSV; printed when omitted'
        ),
) -> None:
    action = exit_wrapper(results.logger(actions.construct))
    action(construction, path, out)


@app.command(help='Write a built-in adversarial scenario as JSON')
def scenario(
        scenario_type: Str = typer.Argument(
            ...,
            metavar='TYPE',
            help='Scenario type: prop2, prop4, prop5, random or random-null'
        ),
        alpha: Float = typer.Option(
            defaults.ALPHA,
            '-a',
            '--alpha',
            help='Level the scenario is built for'
        ),
        m: Int = typer.Option(
            defaults.SUITE_FUZZ_M,
            '-m',
            help='Number of hypotheses'
        ),
        seed: Int = typer.Option(
            defaults.SEED,
            '-s',
            '--seed',
            help='Seed of random scenarios'
        ),
        max_atoms: Int = typer.Option(
            defaults.SUITE_MAX_ATOMS,
            '--max-atoms',
            help='Atom locations per coordinate of random scenarios'
        ),
        out: OptionalStr = typer.Option(
            None,
            '-o',
            '--out',
            help='Output JSON file; printed when omitted'
        ),
) -> None:
    action = exit_wrapper(results.logger(actions.scenario))
    action(scenario_type, alpha, m, seed, max_atoms, out)


@app.command(help='Estimate the FDR of BH on a scenario JSON file')
def estimate(
        path: Str = typer.Argument(
            ...,
            metavar='SCENARIO',
            help='Scenario JSON file'
        ),
        alpha: Float = typer.Option(
            defaults.ALPHA,
            '-a',
            '--alpha',
            help='BH level'
        ),
        reps: Int = typer.Option(
            defaults.REPS,
            '-r',
            '--reps',
            help='Replicates'
        ),
        seed: Int = typer.Option(
            defaults.SEED,
            '-s',
            '--seed',
            help='Experiment seed'
        ),
        workers: Int = typer.Option(
            defaults.WORKERS,
            '-w',
            '--workers',
            help='joblib worker count'
        ),
        metric: Str = typer.Option(
            Metric.FDR,
            '--metric',
            help=f'Metric, one of: {", ".join(METRICS)}'
        ),
        epsilon: Float = typer.Option(
            defaults.APPROX_EPSILON,
            '--epsilon',
            help='Multiplicative slack of the modified FDR'
        ),
        delta: Float = typer.Option(
            defaults.APPROX_DELTA,
            '--delta',
            help='Additive slack of the modified FDR'
        ),
        out: OptionalStr = typer.Option(
            None,
            '-o',
            '--out',
            help='Also write the estimate to this JSON file'
        ),
) -> None:
    action = exit_wrapper(results.logger(actions.estimate))
    action(path, alpha, reps, seed, workers, metric, epsilon, delta, out)


def exit_wrapper(func):
    """
    Wrap functions that return :class:`~compoundbh.results.Result` and raise a :class:`~typer.Exit`
    for unsuccessful results so the process exit code is non-zero.
    """
    def wrapper(*args, **kwargs):
        result = func(*args, **kwargs)
        if result.exit_code != 0:
            raise typer.Exit(code=result.exit_code)
        return result
    return wrapper


def run():
    app(prog_name=meta.NAME)


if __name__ == '__main__':
    run()
