"""
    compoundbh/config
    ~~~~~~~~~~~~~~~~~

    Contains configuration objects for experiments and analyses.
"""
import dataclasses
import json
import math

from . import defaults, errors, serde
from .hints import Any, FilePath, Float, Int, Optional, Str, StrAnyDict, Tuple, Type, TypeVar


class Metric:
    """
    Known per-replicate metrics.
    """
    FDR = 'fdr'
    ModifiedFDR = 'modified_fdr'
    AnyRejection = 'any_rejection'


METRICS = (Metric.FDR, Metric.ModifiedFDR, Metric.AnyRejection)


class DigitMode:
    """
    Known rules for deciding whether a headline contains a numerical digit.
    """
    Unicode = 'unicode'
    Ascii = 'ascii'


DIGIT_MODES = (DigitMode.Unicode, DigitMode.Ascii)


@dataclasses.dataclass(frozen=True)
class ApproxParams(serde.SupportsJSONSerde):
    """
    Represents the (epsilon, delta) slack of approximate compound p-values.
    """
    epsilon: Float = defaults.APPROX_EPSILON
    delta: Float = defaults.APPROX_DELTA

    def __post_init__(self):
        for name in ('epsilon', 'delta'):
            value = getattr(self, name)
            if not isinstance(value, (int, float)) or math.isnan(value) or value < 0:
                raise errors.ConfigInvalid(f'{name} must be a nonnegative real, got {value!r}')

    @property
    def exact(self) -> bool:
        return self.epsilon == 0 and self.delta == 0


@dataclasses.dataclass
class ExperimentConfig(serde.SupportsFileSerde):
    """
    Represents a Monte Carlo FDR experiment on a scenario.

    `scenario` is any object implementing :class:`~compoundbh.scenarios.base.Scenario`.
    Atom and uniform scenarios are written inline with their fields and decoded back
    by field names.
    """
    scenario: Any
    alpha: Float = defaults.ALPHA
    reps: Int = defaults.REPS
    seed: Int = defaults.SEED
    metric: Str = defaults.METRIC
    params: ApproxParams = dataclasses.field(default_factory=ApproxParams)
    workers: Int = defaults.WORKERS
    chunk: Int = defaults.CHUNK_SIZE

    def __post_init__(self):
        if not isinstance(self.alpha, (int, float)) or not 0.0 <= self.alpha <= 1.0:
            raise errors.ConfigInvalid(f'alpha must be in [0, 1], got {self.alpha!r}')
        if self.reps < 1:
            raise errors.ConfigInvalid(f'reps must be >= 1, got {self.reps!r}')
        if self.seed < 0:
            raise errors.ConfigInvalid(f'seed must be nonnegative, got {self.seed!r}')
        if self.metric not in METRICS:
            raise errors.ConfigInvalid(f'metric must be one of {METRICS}, got {self.metric!r}')
        if self.metric == Metric.ModifiedFDR and self.params.delta > 0 and self.alpha == 0:
            raise errors.ConfigInvalid('modified FDR with delta > 0 requires alpha > 0')
        if self.workers == 0 or self.chunk < 1:
            raise errors.ConfigInvalid(f'workers must be nonzero and chunk >= 1, got {self.workers}, {self.chunk}')

    @property
    def scenario_id(self) -> Str:
        return getattr(self.scenario, 'name', type(self.scenario).__name__)

    @classmethod
    def decode(cls: Type['ExperimentConfig'], s: Any) -> 'ExperimentConfig':
        """
        Decode string to instance.

        :param s: JSON string to decode
        :return: Instance created from decoded JSON string
        """
        from . import scenarios
        try:
            data = serde.loads(s)
            data['scenario'] = scenarios.decode_scenario(data['scenario'])
            if 'params' in data:
                data['params'] = ApproxParams(**data['params'])
            return cls(**data)
        except (KeyError, TypeError) as ex:
            raise errors.ConfigInvalid(str(ex)) from ex


@dataclasses.dataclass(frozen=True)
class SchemaMap(serde.SupportsJSONSerde):
    """
    Represents the column names of a headline CSV file.
    """
    article_id: Str = defaults.CSV_ARTICLE_COLUMN
    headline: Str = defaults.CSV_HEADLINE_COLUMN
    impressions: Str = defaults.CSV_IMPRESSIONS_COLUMN
    clicks: Str = defaults.CSV_CLICKS_COLUMN

    def columns(self) -> Tuple[Str, ...]:
        return self.article_id, self.headline, self.impressions, self.clicks


@dataclasses.dataclass
class AnalysisConfig(serde.SupportsFileSerde):
    """
    Represents the settings of the headline analysis pipeline.
    """
    alphas: Tuple[Float, ...] = defaults.ANALYZE_ALPHAS
    exact_cap: Int = defaults.EXACT_CAP
    mc_draws: Int = defaults.MC_DRAWS
    seed: Int = defaults.SEED
    min_headlines: Int = defaults.MIN_HEADLINES
    digit_mode: Str = defaults.DIGIT_MODE
    workers: Int = defaults.WORKERS
    schema: SchemaMap = dataclasses.field(default_factory=SchemaMap)

    def __post_init__(self):
        self.alphas = tuple(float(a) for a in self.alphas)
        if not self.alphas or any(not 0.0 <= a <= 1.0 for a in self.alphas):
            raise errors.ConfigInvalid(f'alphas must be a nonempty list in [0, 1], got {self.alphas!r}')
        if self.exact_cap < 1 or self.mc_draws < 1:
            raise errors.ConfigInvalid('exact_cap and mc_draws must be >= 1')
        if self.min_headlines < 0:
            raise errors.ConfigInvalid(f'min_headlines must be nonnegative, got {self.min_headlines!r}')
        if self.digit_mode not in DIGIT_MODES:
            raise errors.ConfigInvalid(f'digit_mode must be one of {DIGIT_MODES}, got {self.digit_mode!r}')

    @classmethod
    def decode(cls: Type['AnalysisConfig'], s: Any) -> 'AnalysisConfig':
        """
        Decode string to instance.

        :param s: JSON string to decode
        :return: Instance created from decoded JSON string
        """
        try:
            data = serde.loads(s)
            if 'schema' in data:
                data['schema'] = SchemaMap(**data['schema'])
            return cls(**data)
        except TypeError as ex:
            raise errors.ConfigInvalid(str(ex)) from ex


C = TypeVar('C', AnalysisConfig, ExperimentConfig)


def read(path: FilePath, cls: Type[C] = AnalysisConfig) -> C:
    """
    Read configuration from the given JSON file.

    :param path: Path to configuration file
    :param cls: Configuration class to decode, :class:`AnalysisConfig` or :class:`ExperimentConfig`
    :return: Configuration
    """
    try:
        return cls.read(path)
    except json.JSONDecodeError as ex:
        raise errors.ConfigInvalid(f'malformed configuration file "{path}"') from ex
    except FileNotFoundError as ex:
        raise errors.IngestFileNotFound(path) from ex


def overrides(base: AnalysisConfig, **kwargs: Optional[Any]) -> AnalysisConfig:
    """
    Return a copy of the config with every non-None keyword applied.

    :param base: Configuration to copy
    :return: Updated configuration
    """
    changes: StrAnyDict = {k: v for k, v in kwargs.items() if v is not None}
    return dataclasses.replace(base, **changes)
