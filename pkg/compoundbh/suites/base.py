"""
    compoundbh/suites/base
    ~~~~~~~~~~~~~~~~~~~~~~

    Contains base classes for all verification suite implementations.
"""
import abc
import dataclasses

from .. import defaults, loggers, serde, simulation
from ..config import ApproxParams, ExperimentConfig, Metric
from ..hints import AnyStr, Float, Int, List, OptionalFloat, Str, Type, TypeVar
from ..scenarios import Scenario

LOG = loggers.get_logger()


class Verdict:
    """
    Known row verdicts.
    """
    Pass = 'pass'
    Fail = 'fail'


@dataclasses.dataclass
class SuiteParams(serde.SupportsJSONSerde):
    """
    Represents the knobs shared by every suite.
    """
    reps: Int = defaults.REPS
    seed: Int = defaults.SEED
    workers: Int = defaults.WORKERS
    alpha: Float = defaults.ALPHA
    fuzz_seeds: Int = defaults.SUITE_FUZZ_SEEDS
    fuzz_m: Int = defaults.SUITE_FUZZ_M
    max_atoms: Int = defaults.SUITE_MAX_ATOMS
    chunk: Int = defaults.CHUNK_SIZE
    se_multiplier: Float = defaults.SE_MULTIPLIER


@dataclasses.dataclass(frozen=True)
class Row:
    """
    Represents one scenario checked by a suite.
    """
    suite: Str
    scenario: Str
    alpha: Float
    estimate: Float
    se: Float
    reps: Int
    seed: Int
    reference: OptionalFloat
    bound: OptionalFloat
    verdict: Str
    note: Str = ''

    @property
    def passed(self) -> bool:
        return self.verdict == Verdict.Pass


@dataclasses.dataclass
class SuiteReport(serde.SupportsFileSerde):
    """
    Represents the rows produced by a suite run.
    """
    suite: Str
    rows: List[Row] = dataclasses.field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    @property
    def failures(self) -> List[Row]:
        return [r for r in self.rows if not r.passed]

    @classmethod
    def decode(cls, s: AnyStr) -> 'SuiteReport':
        document = serde.loads(s)
        return cls(document['suite'], [Row(**row) for row in document.get('rows', [])])


class Suite(metaclass=abc.ABCMeta):
    """
    Abstract class that represents a battery of scenarios checked against an FDR bound.
    """
    name: Str = ''

    def __init__(self, params: SuiteParams) -> None:
        self.params = params
        self.report = SuiteReport(self.name)

    @abc.abstractmethod
    def checks(self: 'ST') -> None:
        """
        Run every check of the suite, appending rows to the report.
        """
        raise NotImplementedError('Derived classes must implement this method')

    def run(self: 'ST') -> SuiteReport:
        LOG.debug(f'running suite {self.name} with {self.params.reps} replicates per scenario')
        self.checks()
        LOG.debug(f'suite {self.name} finished: {len(self.report.failures)} of {len(self.report.rows)} rows failed')
        return self.report

    def estimate(self, scenario: Scenario, alpha: Float, metric: Str = Metric.FDR,
                 params: ApproxParams = ApproxParams()) -> simulation.FdrEstimate:
        cfg = ExperimentConfig(scenario=scenario, alpha=alpha, reps=self.params.reps, seed=self.params.seed,
                               metric=metric, params=params, workers=self.params.workers, chunk=self.params.chunk)
        return simulation.estimate_fdr(cfg)

    def add(self, estimate: simulation.FdrEstimate, alpha: Float, ok: bool, reference: OptionalFloat = None,
            bound: OptionalFloat = None, note: Str = '') -> Row:
        row = Row(self.name, estimate.scenario, alpha, estimate.mean, estimate.se, estimate.reps, estimate.seed,
                  reference, bound, Verdict.Pass if ok else Verdict.Fail, note)
        self.report.rows.append(row)
        if not ok:
            LOG.warning(f'{self.name}: {row.scenario} at alpha={alpha} estimate {row.estimate:.6f} '
                        f'(se {row.se:.6f}) violates {note or "its bound"}')
        return row

    def add_invalid(self, scenario: Str, alpha: Float, violation: Float, note: Str) -> Row:
        row = Row(self.name, scenario, alpha, float('nan'), float('nan'), 0, self.params.seed, None, violation,
                  Verdict.Fail, note)
        self.report.rows.append(row)
        LOG.warning(f'{self.name}: {scenario} {note} ({violation!r})')
        return row

    def check_bound(self, scenario: Scenario, alpha: Float, bound: Float, metric: Str = Metric.FDR,
                    params: ApproxParams = ApproxParams(), note: Str = '') -> Row:
        """
        Estimate the metric and require it to be at most ``bound + k se``.
        """
        est = self.estimate(scenario, alpha, metric, params)
        return self.add(est, alpha, est.at_most(bound, self.params.se_multiplier), est.exact, bound, note)

    def check_exact(self, scenario: Scenario, alpha: Float, reference: Float, note: Str = '') -> Row:
        """
        Estimate the FDR and require it to be within ``k se`` of `reference`.
        """
        est = self.estimate(scenario, alpha)
        return self.add(est, alpha, est.within(reference, self.params.se_multiplier), reference, None, note)


ST = TypeVar('ST', bound=Suite)
SuiteClass = Type[Suite]
