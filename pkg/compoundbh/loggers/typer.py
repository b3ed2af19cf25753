"""
    compoundbh/loggers/typer
    ~~~~~~~~~~~~~~~~~~~~~~~~

    Contains logger implementation for `typer`.
"""
import os

import typer

from ..hints import Args, Kwargs, Nothing, Str
from . import base

VERBOSE = bool(os.environ.get('COMPOUNDBH_VERBOSE'))


def _format(msg: Str, args: Args) -> Str:
    return msg % args if args else msg


class Logger(base.Logger):
    """
    Class that represents a logger using the :pkg:`~typer` package.
    """
    def debug(self, msg: Str, *args: Args, **kwargs: Kwargs) -> Nothing:
        """
        Log a debug message. Only shown when `COMPOUNDBH_VERBOSE` is set.

        :param msg: Debug message to log
        :return: Nothing
        """
        if VERBOSE:
            typer.secho(_format(msg, args), dim=True, err=True)

    def info(self, msg: Str, *args: Args, **kwargs: Kwargs) -> Nothing:
        typer.echo(_format(msg, args))

    def warning(self, msg: Str, *args: Args, **kwargs: Kwargs) -> Nothing:
        typer.secho(_format(msg, args), fg='yellow', err=True)

    def error(self, msg: Str, *args: Args, **kwargs: Kwargs) -> Nothing:
        typer.secho(_format(msg, args), fg='red', err=True)
