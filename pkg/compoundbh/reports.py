"""
    compoundbh/reports
    ~~~~~~~~~~~~~~~~~~

    Contains functionality for writing reports as JSON documents and flat CSV tables.
"""
import dataclasses
import io

import pandas as pd

from . import serde
from .hints import Any, FilePath, Int, Iterable, Str


def write_json(obj: Any, path: FilePath) -> Int:
    """
    Write the object as an indented, key sorted JSON document.

    :param obj: Object to write, dataclasses included
    :param path: Destination file
    :return: Number of characters written
    """
    with io.open(path, mode='w', encoding='utf-8') as f:
        return f.write(serde.dumps(obj))


def records_frame(records: Iterable[Any]) -> pd.DataFrame:
    """
    Flatten dataclass records into a frame with one column per field.
    """
    return pd.DataFrame([dataclasses.asdict(r) for r in records])


def write_csv(frame: pd.DataFrame, path: FilePath) -> None:
    """
    Write the frame as CSV without its index. Floats keep full precision.
    """
    frame.to_csv(path, index=False, float_format='%.17g')


def format_rows(frame: pd.DataFrame) -> Str:
    """
    Render a frame as a plain text table for the terminal.
    """
    if frame.empty:
        return '(no rows)'
    return frame.to_string(index=False)
