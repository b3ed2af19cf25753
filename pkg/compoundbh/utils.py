"""
    compoundbh/utils
    ~~~~~~~~~~~~~~~~

    Contains utility functions that don't have a better place.
"""
import math
import numbers

import numpy as np

from . import errors
from .hints import Any, Array, Float, FloatSequence, Int, Str


def require_finite(value: Any, name: Str = 'value') -> Float:
    """
    Coerce the given value to a float and reject NaN/infinite values.

    :param value: Value to check
    :param name: Name of the value used in error messages
    :return: Value as a float
    """
    try:
        value = float(value)
    except (TypeError, ValueError) as ex:
        raise errors.DomainError(f'{name}={value!r} is not a real number') from ex
    if not math.isfinite(value):
        raise errors.NotFinite(f'{name}={value!r}')
    return value


def require_probability(value: Any, name: Str = 'value') -> Float:
    """
    Coerce the given value to a float in [0, 1].

    :param value: Value to check
    :param name: Name of the value used in error messages
    :return: Value as a float
    """
    value = require_finite(value, name)
    if not 0.0 <= value <= 1.0:
        raise errors.ProbabilityOutOfRange(f'{name}={value!r}')
    return value


def require_count(value: Any, name: Str = 'value') -> Int:
    """
    Check the given value is a nonnegative integer.

    :param value: Value to check
    :param name: Name of the value used in error messages
    :return: Value as an int
    """
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise errors.DomainError(f'{name}={value!r} is not an integer')
    if value < 0:
        raise errors.DomainError(f'{name}={value!r} is negative')
    return int(value)


def probability_array(values: FloatSequence, name: Str = 'p') -> Array:
    """
    Convert values to a one-dimensional float array with every entry in [0, 1].

    :param values: Values to convert
    :param name: Name of the values used in error messages
    :return: Float array
    """
    arr = finite_array(values, name)
    bad = np.flatnonzero((arr < 0.0) | (arr > 1.0))
    if bad.size:
        raise errors.ProbabilityOutOfRange(f'{name}[{int(bad[0])}]={arr[bad[0]]!r}')
    return arr


def finite_array(values: FloatSequence, name: Str = 'x') -> Array:
    """
    Convert values to a one-dimensional float array and reject NaN/infinite entries.

    :param values: Values to convert
    :param name: Name of the values used in error messages
    :return: Float array
    """
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 1:
        raise errors.DomainError(f'{name} must be one-dimensional, got shape {arr.shape}')
    bad = np.flatnonzero(~np.isfinite(arr))
    if bad.size:
        raise errors.NotFinite(f'{name}[{int(bad[0])}]={arr[bad[0]]!r}')
    return arr


def clamp_unit(arr: Array) -> Array:
    """
    Clamp values to the unit interval.

    :param arr: Values to clamp
    :return: Clamped copy
    """
    return np.clip(arr, 0.0, 1.0)
