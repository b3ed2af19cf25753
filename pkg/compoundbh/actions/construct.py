"""
    compoundbh/actions/construct
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~~

    Contains functionality for the `construct` action.
"""
import os

import pandas as pd

from .. import constructions, errors, reports, results
from ..hints import FilePath, OptionalStr, Str

#: Column appended to the input table.
OUTPUT_COLUMN = 'p_value'


@results.wrapper
def construct(construction: Str, path: FilePath, out: OptionalStr = None) -> results.Result:
    """
    Responsible for computing p-values of one construction from a CSV table.

    Expected columns: ``x`` (decreasing-density), ``p`` and ``w`` (weighted),
    ``ybar``, ``s2`` and ``n`` (gaussian-means), ``t_obs`` and ``null_*`` (mc-pooled).

    :param construction: Construction name
    :param path: Input CSV
    :param out: Output CSV; printed when omitted
    :return: Result of the construct action
    """
    adapter = constructions.for_type(construction)
    if not os.path.isfile(path):
        raise errors.IngestFileNotFound(path)
    frame = pd.read_csv(path)
    frame[OUTPUT_COLUMN] = adapter(frame)
    if out:
        reports.write_csv(frame, out)
        return results.success(stdout=f'wrote {len(frame)} p-values to {out}')
    return results.success(stdout=frame.to_csv(index=False, float_format='%.17g').rstrip('\n'))
