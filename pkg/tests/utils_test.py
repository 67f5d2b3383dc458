import json

import numpy as np
import pytest
import sympy

import braid_sections.cohomology as cohomology
import braid_sections.utils as utils
from braid_sections.braid_core import BraidWord
from braid_sections.twist_calculus import ProductType


@pytest.mark.parametrize(
    "value,expected",
    [
        (None, None),
        (True, True),
        (3, 3),
        (0.25, 0.25),
        ("x", "x"),
        ((1, 2), [1, 2]),
        ({(1, 2): 4}, {"1,2": 4}),
        ({1: "a"}, {"1": "a"}),
        (ProductType.PARABOLIC, "Parabolic"),
        (np.int64(5), 5),
        (np.float64(0.5), 0.5),
        (np.array([[1, 2], [3, 4]]), [[1, 2], [3, 4]]),
        (sympy.Integer(-7), -7),
        (sympy.Rational(-3, 2), "-3/2"),
        (sympy.Matrix([[1, sympy.Rational(1, 2)], [0, 1]]), [[1, "1/2"], [0, 1]]),
        (BraidWord(3, (1, -2)), "n=3; 1 -2"),
    ],
)
def test_utils_jsonable(value, expected):
    converted = utils.jsonable(value)
    assert converted == expected
    json.dumps(converted)


def test_utils_jsonable_nested():
    witness = {"class": cohomology.omega_class(2, 2, 1), "pairs": [((1, 2), sympy.Integer(2))]}
    assert utils.jsonable(witness) == {"class": "(1)*w^(1)", "pairs": [[[1, 2], 2]]}


@pytest.mark.pandas
def test_utils_list_to_pandas():
    pytest.importorskip("pandas")
    df = utils.list_to_pandas([["a", 1], ["b", 2]], ["name", "value"])
    assert list(df.columns) == ["name", "value"]
    assert df["value"].sum() == 3
