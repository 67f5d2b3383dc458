"""Contains helpers for reporting that are not themselves verifiers."""
import enum
from typing import Any, List

import numpy as np
import sympy


def _key(key: Any) -> str:
    if isinstance(key, tuple):
        return ",".join(str(part) for part in key)
    return str(key)


def jsonable(value: Any) -> Any:
    """Convert a witness into something ``json.dumps`` accepts.

    Exact numbers that do not fit an integer become strings such as ``"-3/2"`` so nothing is
    rounded. Tuples used as keys become ``"i,j"``.
    """
    if value is None or isinstance(value, (bool, str)):
        return value
    elif isinstance(value, int):
        return value
    elif isinstance(value, float):
        return value
    elif isinstance(value, enum.Enum):
        return value.value
    elif isinstance(value, dict):
        return {_key(k): jsonable(v) for k, v in value.items()}
    elif isinstance(value, (list, tuple, set, frozenset)):
        return [jsonable(v) for v in value]
    elif isinstance(value, np.ndarray):
        return [jsonable(v) for v in value.tolist()]
    elif isinstance(value, np.integer):
        return int(value)
    elif isinstance(value, np.floating):
        return float(value)
    elif isinstance(value, sympy.MatrixBase):
        return [[jsonable(x) for x in value.row(r)] for r in range(value.rows)]
    elif isinstance(value, sympy.Integer):
        return int(value)
    else:
        # rationals, braid words, curves and cohomology classes print themselves
        return str(value)


def list_to_pandas(list: List[List[Any]], names: List[str]):
    """Convert list of lists to pandas DataFrame

    :param list: the data as a list of data rows
    :param names: the column names to be used in the pandas.DataFrame
    :return: a pandas.DataFrame if pandas is present, otherwise None
    """
    try:
        import pandas
    except ImportError:
        return None  # pragma: no mutate

    df = pandas.DataFrame(list)
    return df.rename(columns=lambda old: names[old])
