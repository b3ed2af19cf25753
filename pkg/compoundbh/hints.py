"""
    compoundbh/hints
    ~~~~~~~~~~~~~~~~

    Contains common type hint definitions.
"""
import os
import typing
from pathlib import Path

import numpy as np

Any = typing.Any
AnyStr = typing.AnyStr
Args = typing.Any
Kwargs = typing.Any
Array = np.ndarray
Bool = bool
Callable = typing.Callable
Error = Exception
FilePath = typing.Union[os.PathLike, str, Path]
Float = float
FloatList = typing.List[float]
FloatSequence = typing.Sequence[float]
Int = int
IntSet = typing.FrozenSet[int]
Iterable = typing.Iterable
List = typing.List
Nothing = None
Optional = typing.Optional
OptionalError = typing.Optional[Exception]
OptionalFloat = typing.Optional[float]
OptionalInt = typing.Optional[int]
OptionalStr = typing.Optional[str]
Sequence = typing.Sequence
Str = str
StrAnyDict = typing.Dict[str, typing.Any]
StrList = typing.List[str]
Tuple = typing.Tuple
Union = typing.Union
Type = typing.Type
TypeVar = typing.TypeVar
