"""
    compoundbh/results
    ~~~~~~~~~~~~~~~~~~

    Contains functionality for encapsulating the result of a call.
"""
import dataclasses
import functools

import typer

from . import defaults, errors, loggers
from .hints import Bool, Error, Int, OptionalError, Str

LOG = loggers.get_logger()


class ExitCode:
    """
    Known process exit codes.
    """
    Success = 0
    Failure = 1
    Usage = 2


@dataclasses.dataclass
class Result:
    """
    Simple type that contains execution results.

    A result without an error that is unsuccessful means a check failed; a result
    carrying an error means the inputs or environment were unusable.
    """
    success: Bool
    stdout: Str = defaults.RESULT_STDOUT
    stderr: Str = defaults.RESULT_STDERR
    error: OptionalError = defaults.RESULT_ERROR

    @property
    def exit_code(self) -> Int:
        if self.success:
            return ExitCode.Success
        return ExitCode.Usage if self.error is not None else ExitCode.Failure

    def __bool__(self) -> Bool:
        return self.success


def success(stdout: Str = defaults.RESULT_STDOUT,
            stderr: Str = defaults.RESULT_STDERR) -> Result:
    """
    Create a successful result with the given stdout/stderr.

    :param stdout: Stdout of the call
    :param stderr: Stderr of the call
    :return: Successful result
    """
    return Result(True, stdout, stderr)


def failure(stdout: Str = defaults.RESULT_STDOUT,
            stderr: Str = defaults.RESULT_STDERR) -> Result:
    """
    Create a failed result with the given stdout/stderr.

    :param stdout: Stdout of the call
    :param stderr: Stderr of the call
    :return: Failed result
    """
    return Result(False, stdout, stderr)


def error(exc: Error,
          stdout: Str = defaults.RESULT_STDOUT,
          stderr: Str = defaults.RESULT_STDERR) -> Result:
    """
    Create an error result with the given stdout/stderr/exception.

    :param exc: Exception raised
    :param stdout: Stdout of the call
    :param stderr: Stderr of the call
    :return: Errored result
    """
    return Result(False, stdout, stderr, exc)


def verdict(passed: Bool, stdout: Str = defaults.RESULT_STDOUT, stderr: Str = defaults.RESULT_STDERR) -> Result:
    """
    Create a successful or failed result from a check outcome.
    """
    return success(stdout, stderr) if passed else failure(stdout, stderr)


def wrapper(func):
    """
    Wrap the retval of the function in a :class:`~compoundbh.results.Result`.

    Known input, configuration and data errors become error results; anything else propagates.
    """
    @functools.wraps(func)
    def decorator(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except errors.IngestFileNotFound as ex:
            return error(ex, stderr=f'Input file not found "{ex.path}"')
        except (errors.CompoundBHException, OSError) as ex:
            return error(ex, stderr=str(ex))
    return decorator


def logger(func):
    """
    Emit the retval of the function that returns a :class:`~compoundbh.results.Result`.

    Stdout is program output and always printed; stderr and errors are logged.
    """
    @functools.wraps(func)
    def decorator(*args, **kwargs):
        result = func(*args, **kwargs)
        if result.stdout:
            typer.echo(result.stdout)
        if result.stderr:
            LOG.error(result.stderr)
        if result.error and not result.stderr:
            LOG.error(str(result.error))
        return result
    return decorator
