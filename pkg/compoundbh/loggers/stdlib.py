"""
    compoundbh/loggers/stdlib
    ~~~~~~~~~~~~~~~~~~~~~~~~~

    Contains logger implementation for `logging`.
"""
import logging

from .. import meta
from ..hints import Args, Kwargs, Nothing, Str
from . import base

LOG = logging.getLogger(meta.NAME)


class Logger(base.Logger):
    """
    Class that represents a logger using the python :mod:`~logging` module.
    """
    def debug(self, msg: Str, *args: Args, **kwargs: Kwargs) -> Nothing:
        LOG.debug(msg, *args)

    def info(self, msg: Str, *args: Args, **kwargs: Kwargs) -> Nothing:
        LOG.info(msg, *args)

    def warning(self, msg: Str, *args: Args, **kwargs: Kwargs) -> Nothing:
        LOG.warning(msg, *args)

    def error(self, msg: Str, *args: Args, **kwargs: Kwargs) -> Nothing:
        LOG.error(msg, *args)
