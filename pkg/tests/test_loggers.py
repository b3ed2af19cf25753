"""
    test_loggers
    ~~~~~~~~~~~~

    Tests for the :mod:`~compoundbh.loggers` package.
"""
import logging

from compoundbh import loggers, meta
from compoundbh.loggers import stdlib, typer


def test_get_logger_without_terminal(mocker):
    mocker.patch.object(loggers, 'sys').stdout.isatty.return_value = False
    assert isinstance(loggers.get_logger(), stdlib.Logger)


def test_get_logger_with_terminal(mocker):
    mocker.patch.object(loggers, 'sys').stdout.isatty.return_value = True
    assert isinstance(loggers.get_logger(), typer.Logger)


def test_stdlib_logger(caplog):
    with caplog.at_level(logging.DEBUG, logger=meta.NAME):
        stdlib.Logger().warning('dropped %d rows', 3)
    assert caplog.records[-1].getMessage() == 'dropped 3 rows'
    assert caplog.records[-1].levelno == logging.WARNING


def test_typer_logger(mocker):
    secho = mocker.patch('typer.secho')
    mocker.patch.object(typer, 'VERBOSE', False)
    log = typer.Logger()
    log.debug('hidden')
    log.warning('%s of %s failed', 1, 6)
    secho.assert_called_once_with('1 of 6 failed', fg='yellow', err=True)
