import json

import pytest
import sympy

import braid_sections.cohomology as cohomology
import braid_sections.curves as curves
import braid_sections.parsing as parsing
from braid_sections.braid_core import BraidWord
from braid_sections.curves import Curve
from braid_sections.geometric_sections import PlanarConfig, SphereConfig
from braid_sections.keys import *
from braid_sections.section_algebra import SectionSpec


@pytest.mark.parametrize("value,expected", [(3, 3), ("-12", -12), (" 7 ", 7)])
def test_parsing_integer(value, expected):
    assert parsing.get_integer(value) == expected


@pytest.mark.parametrize("value", [True, 1.5, "1.5", "x", None, [1]])
def test_parsing_integer_fails(value):
    with pytest.raises(ValueError):
        parsing.get_integer(value)


@pytest.mark.parametrize(
    "value,expected",
    [
        ("3/4", sympy.Rational(3, 4)),
        ("-6/4", sympy.Rational(-3, 2)),
        (" 5 ", sympy.Rational(5)),
        (2, sympy.Rational(2)),
    ],
)
def test_parsing_rational(value, expected):
    assert parsing.get_rational(value) == expected


@pytest.mark.parametrize("value", ["3/0", "0.75", False, 0.5, "a/b"])
def test_parsing_rational_fails(value):
    with pytest.raises(ValueError):
        parsing.get_rational(value)


def test_parsing_word():
    assert parsing.get_word("n=3; 1 -2") == BraidWord(3, (1, -2))
    assert parsing.get_word("1 -2", 4) == BraidWord(4, (1, -2))


@pytest.mark.parametrize(
    "curve",
    [
        curves.round_curve_on(4, 1, 3),
        curves.round_curve_on(5, 2, 3, 5),
        curves.act(BraidWord(4, (1, -3, 2)), curves.round_curve_on(4, 2, 3)),
        Curve(4, curves.round_curve_on(4, 2, 4).coords),
    ],
)
def test_parsing_curve_round_trip(curve):
    value = json.loads(json.dumps(parsing.curve_to_json(curve)))
    assert parsing.get_curve(value) == curve


def test_parsing_curve_json_forms():
    assert parsing.curve_to_json(curves.round_curve_on(4, 1, 2)) == {N: 4, TYPE: ROUND, SUBSET: [1, 2]}
    image = parsing.curve_to_json(curves.act(BraidWord(4, (2,)), curves.round_curve_on(4, 1, 2)))
    assert image[TYPE] == IMAGE
    assert image[CONJUGATOR] == "2"
    bare = parsing.curve_to_json(Curve(4, curves.round_curve_on(4, 1, 2).coords))
    assert bare[TYPE] == COORDS
    assert all(isinstance(x, str) for x in bare[COORDS])


@pytest.mark.parametrize(
    "value",
    [
        {N: 4, TYPE: "square", SUBSET: [1, 2]},
        {N: 4, TYPE: ROUND},
        {N: 4, TYPE: ROUND, SUBSET: "1,2"},
        {N: 4, TYPE: ROUND, SUBSET: [1]},
        {N: 4, TYPE: IMAGE, BASE: {N: 5, SUBSET: [1, 2]}, CONJUGATOR: "1"},
        {N: 4, TYPE: COORDS, COORDS: [0, 0, 0, 0]},
        {N: 4, TYPE: COORDS, COORDS: "0"},
        [4, 1, 2],
    ],
)
def test_parsing_bad_curves(value):
    with pytest.raises(ValueError):
        parsing.get_curve(value)


def test_parsing_section_spec():
    value = {N: 3, KIND: NEAR_K, K: 2, WEIGHTS: [{I: 1, J: 3, W: -2}]}
    spec = parsing.get_section_spec(value)
    assert spec == SectionSpec(3, NEAR_K, 2, ((1, 3, -2),))
    assert parsing.section_spec_to_json(spec) == value
    assert parsing.get_section_spec({N: 2, KIND: INFINITY}) == SectionSpec(2, INFINITY)
    with pytest.raises(ValueError):
        parsing.get_section_spec({N: 3, KIND: NEAR_K, K: 1, WEIGHTS: [{I: 1, J: 2}]})


@pytest.mark.parametrize(
    "value",
    [
        {G: 2, N: 3, PRESET: CASE_1B},
        {G: 2, N: 3, FSTAR: CASE_1B},
        {G: 2, N: 3, FSTAR: {PRESET: CASE_1B}},
    ],
)
def test_parsing_obstruction_presets(value):
    g, n, f = parsing.get_obstruction_input(value)
    assert (g, n) == (2, 3)
    assert f == cohomology.preset_pullback(CASE_1B, 2, 3)


def test_parsing_obstruction_matrix():
    matrix = [[1 if c == r else 0 for c in range(8)] for r in range(4)]
    matrix[0][1] = "1/2"
    g, n, f = parsing.get_obstruction_input({G: 2, N: 2, FSTAR: {MATRIX: matrix, OMEGA: [1, "-1/3"]}})
    assert f.matrix[0][1] == sympy.Rational(1, 2)
    assert f.omega == (1, sympy.Rational(-1, 3))
    _, _, f = parsing.get_obstruction_input({G: 2, N: 2, FSTAR: {MATRIX: matrix}})
    assert f.omega is None


@pytest.mark.parametrize(
    "value",
    [
        {G: 2, N: 2},
        {G: 2, N: 2, FSTAR: {MATRIX: "identity"}},
        {G: 2, N: 2, FSTAR: {MATRIX: [[0] * 8] * 3}},
        {G: 2, N: 2, PRESET: "case4"},
    ],
)
def test_parsing_bad_obstruction_input(value):
    with pytest.raises(ValueError):
        parsing.get_obstruction_input(value)


def test_parsing_config_modes():
    exact = parsing.get_config({SPACE: PLANE, POINTS: [[0, "1/2"], [1, 0]]})
    assert isinstance(exact, PlanarConfig) and exact.exact
    assert exact.points[0][1] == sympy.Rational(1, 2)
    approx = parsing.get_config({SPACE: PLANE, POINTS: [[0, 0.5], [1, 0]]})
    assert not approx.exact
    assert parsing.get_config({SPACE: PLANE, POINTS: [[0, 1], [1, 0]]}, exact=False).points[0] == (0.0, 1.0)
    sphere = parsing.get_config({SPACE: SPHERE, POINTS: [[0, 0, 1], [0, 0, -1]]})
    assert isinstance(sphere, SphereConfig)


@pytest.mark.parametrize(
    "cfg",
    [
        PlanarConfig(((0, "1/2"), (1, 0)), exact=True),
        PlanarConfig(((0.25, 0.5), (1.0, 0.0))),
        SphereConfig(((0.0, 0.0, 1.0), (1.0, 0.0, 0.0))),
    ],
)
def test_parsing_config_round_trip(cfg):
    value = json.loads(json.dumps(parsing.config_to_json(cfg)))
    assert parsing.get_config(value, exact=getattr(cfg, "exact", None)) == cfg


def test_parsing_bad_config():
    with pytest.raises(ValueError):
        parsing.get_config({SPACE: "torus", POINTS: [[0, 0]]})
    with pytest.raises(ValueError):
        parsing.get_config({SPACE: PLANE, POINTS: [0, 0]})


def test_parsing_direction():
    assert parsing.get_direction("3/5, 4/5") == [sympy.Rational(3, 5), sympy.Rational(4, 5)]
    assert parsing.get_direction("0.6,0.8") == [0.6, 0.8]
    with pytest.raises(ValueError):
        parsing.get_direction("north")


def test_parsing_loads():
    assert parsing.loads('{"n": 4, "type": "round", "subset": [1, 2]}', parsing.get_curve) == curves.round_curve_on(4, 1, 2)
    with pytest.raises(ValueError):
        parsing.loads("{not json", parsing.get_curve)


def test_parsing_read_json_file(tmp_path):
    good = tmp_path / "curve.json"
    good.write_text('{"n": 4, "type": "round", "subset": [2, 4]}')
    assert parsing.read_json_file(str(good), parsing.get_curve) == curves.round_curve_on(4, 2, 4)
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 4, "type": "round"}')
    with pytest.raises(ValueError, match="bad.json"):
        parsing.read_json_file(str(bad), parsing.get_curve)
