"""
    compoundbh/errors
    ~~~~~~~~~~~~~~~~~

    Contains compoundbh specific exceptions.
"""
from .hints import Any, FilePath, Int, Nothing, Str, StrList


class CompoundBHException(Exception):
    """
    Base exception class for all compoundbh related exceptions.
    """


class DomainError(CompoundBHException, ValueError):
    """
    Exception raised when an input violates the precondition of an operation.
    """
    template = 'Domain error: {}'

    def __init__(self, reason: Str) -> Nothing:
        self.reason = reason
        super().__init__(self.template.format(self.reason))


class ProbabilityOutOfRange(DomainError):
    """
    Exception raised when a value that must lie in [0, 1] does not.
    """
    template = 'Value out of range [0, 1]: {}'


class NotFinite(DomainError):
    """
    Exception raised when a NaN or infinite value is given where a finite one is required.
    """
    template = 'Value must be finite: {}'


class LengthMismatch(DomainError):
    """
    Exception raised when two inputs that must have matching lengths do not.
    """
    template = 'Length mismatch: {}'


class TrialDegenerate(DomainError):
    """
    Exception raised when a trial does not have both a treated and a control group.
    """
    template = 'Trial is degenerate: {}'


class WeightsInvalid(DomainError):
    """
    Exception raised when p-value weights are nonpositive or do not sum to m.
    """
    template = 'Weights invalid: {}'


class ScenarioPreconditionFailed(DomainError):
    """
    Exception raised when a built-in scenario is requested with unsupported parameters.
    """
    template = 'Scenario precondition failed: {}'


class ConfigInvalid(CompoundBHException, ValueError):
    """
    Exception raised when a configuration object fails validation.
    """
    template = 'Invalid configuration: {}'

    def __init__(self, reason: Str) -> Nothing:
        self.reason = reason
        super().__init__(self.template.format(self.reason))


class ConvergenceError(CompoundBHException):
    """
    Exception raised when a numerical routine cannot reach its tolerance within its budget.
    """
    template = 'Failed to converge: {}'

    def __init__(self, reason: Str) -> Nothing:
        self.reason = reason
        super().__init__(self.template.format(self.reason))


class ScenarioException(CompoundBHException):
    """
    Base exception class for all scenario related exceptions.
    """


class ScenarioTypeNotSupported(ScenarioException):
    """
    Exception raised when trying to use a scenario type that is not supported.
    """
    template = 'Scenario type "{}" is not supported'

    def __init__(self, scenario_type: Str) -> Nothing:
        self.scenario_type = scenario_type
        super().__init__(self.template.format(self.scenario_type))


class ScenarioMalformed(ScenarioException):
    """
    Exception raised when a serialized scenario cannot be read.
    """
    template = 'Scenario malformed: {}'

    def __init__(self, reason: Str) -> Nothing:
        self.reason = reason
        super().__init__(self.template.format(self.reason))


class ScenarioInvalid(ScenarioException):
    """
    Exception raised when a scenario violates the compound validity condition.
    """
    template = 'Scenario violates compound validity by {!r}'

    def __init__(self, violation: float) -> Nothing:
        self.violation = violation
        super().__init__(self.template.format(self.violation))


class SamplingFailed(CompoundBHException):
    """
    Exception raised when drawing a replicate from a scenario fails.
    """
    template = 'Sampling failed at replicate {}: {}'

    def __init__(self, replicate: Int, cause: Any) -> Nothing:
        self.replicate = replicate
        self.cause = cause
        super().__init__(self.template.format(self.replicate, self.cause))


class SuiteException(CompoundBHException):
    """
    Base exception class for all verification suite related exceptions.
    """


class SuiteTypeNotSupported(SuiteException):
    """
    Exception raised when trying to run a suite that does not exist.
    """
    template = 'Suite "{}" is not supported'

    def __init__(self, suite: Str) -> Nothing:
        self.suite = suite
        super().__init__(self.template.format(self.suite))


class ConstructionTypeNotSupported(CompoundBHException):
    """
    Exception raised when trying to use a compound p-value construction that does not exist.
    """
    template = 'Construction "{}" is not supported'

    def __init__(self, construction: Str) -> Nothing:
        self.construction = construction
        super().__init__(self.template.format(self.construction))


class IngestException(CompoundBHException):
    """
    Base exception class for all data ingestion related exceptions.
    """


class IngestFileNotFound(IngestException):
    """
    Exception raised when the input file cannot be found.
    """
    template = 'Input file not found at "{}"'

    def __init__(self, path: FilePath) -> Nothing:
        self.path = str(path)
        super().__init__(self.template.format(self.path))


class IngestColumnsMissing(IngestException):
    """
    Exception raised when the input file lacks required columns.
    """
    template = 'Input file missing required columns: {}'

    def __init__(self, columns: StrList) -> Nothing:
        self.columns = list(columns)
        super().__init__(self.template.format(', '.join(self.columns)))


class IngestTooManyBadRows(IngestException):
    """
    Exception raised when too many rows of the input file cannot be parsed.
    """
    template = 'Too many malformed rows: {} of {} (limit {:.2%})'

    def __init__(self, bad: Int, total: Int, limit: float) -> Nothing:
        self.bad = bad
        self.total = total
        self.limit = limit
        super().__init__(self.template.format(self.bad, self.total, self.limit))
