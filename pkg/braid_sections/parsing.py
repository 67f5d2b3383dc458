"""Contains functions for reading the JSON and text inputs of the command line tools.

Each ``get_<thing>`` function takes a decoded JSON value (or a string) and returns the domain
object, raising ``ValueError`` with the offending value in the message when it is malformed.
"""
import json
from typing import Any, Callable, Dict, List, Optional, Tuple, TypeVar

import sympy

from . import cohomology, curves
from .braid_core import BraidWord
from .cohomology import Pullback
from .curves import Curve, RoundCurveSpec
from .geometric_sections import Config, PlanarConfig, SphereConfig
from .keys import *
from .regex import *
from .section_algebra import SectionSpec

T = TypeVar("T")


def _field(value: Dict[str, Any], key: str, kind: str) -> Any:
    if not isinstance(value, dict):
        raise ValueError(f"Expected a JSON object for a {kind}, got {value!r}")
    if key not in value:
        raise ValueError(f"The {kind} has no '{key}' field: {value!r}")
    return value[key]


def get_integer(value: Any) -> int:
    """Read an integer given as a JSON number or a decimal string."""
    if isinstance(value, bool):
        raise ValueError(f"Expected an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str) and INTEGER_PATTERN.fullmatch(value.strip()):
        return int(value)
    raise ValueError(f"Expected an integer, got {value!r}")


def get_rational(value: Any) -> sympy.Rational:
    """Read ``p``, ``-p`` or ``p/q`` as a JSON integer or a string."""
    if isinstance(value, int) and not isinstance(value, bool):
        return sympy.Rational(value)
    if isinstance(value, str) and (m := RATIONAL_PATTERN.fullmatch(value)):
        return sympy.Rational(int(m.group("numerator")), int(m.group("denominator") or 1))
    raise ValueError(f"Expected a rational number, got {value!r}")


def get_word(text: str, strands: int = 0) -> BraidWord:
    """Read a braid word, either ``n=<k>; letters`` or bare letters with ``strands`` given."""
    return BraidWord.fromstring(text, strands)


def get_round_spec(value: Dict[str, Any]) -> RoundCurveSpec:
    n = get_integer(_field(value, N, "round curve"))
    subset = _field(value, SUBSET, "round curve")
    if not isinstance(subset, list):
        raise ValueError(f"The subset of a round curve is a list, got {subset!r}")
    return RoundCurveSpec(n, tuple(get_integer(p) for p in subset))


def get_curve(value: Dict[str, Any]) -> Curve:
    """Read a curve given as a round curve, the image of one, or bare coordinates."""
    kind = _field(value, TYPE, "curve")
    n = get_integer(_field(value, N, "curve"))
    if kind == ROUND:
        return curves.round_curve(get_round_spec(value))
    elif kind == IMAGE:
        base = get_round_spec(_field(value, BASE, "curve image"))
        if base.n != n:
            raise ValueError(f"The base curve is on {base.n} punctures, the image on {n}")
        return curves.act(get_word(_field(value, CONJUGATOR, "curve image"), n), curves.round_curve(base))
    elif kind == COORDS:
        coords = _field(value, COORDS, "curve")
        if not isinstance(coords, list):
            raise ValueError(f"Curve coordinates are a list, got {coords!r}")
        return Curve.fromcoords(n, [get_integer(x) for x in coords])
    else:
        raise ValueError(f"Unknown curve type: {kind!r}")


def curve_to_json(c: Curve) -> Dict[str, Any]:
    """The JSON form read back by :func:`get_curve`; coordinates are written as strings."""
    if c.spec is not None and not c.conjugator:
        return {N: c.n, TYPE: ROUND, SUBSET: list(c.spec.subset)}
    if c.spec is not None:
        return {
            N: c.n,
            TYPE: IMAGE,
            BASE: {N: c.n, SUBSET: list(c.spec.subset)},
            CONJUGATOR: BraidWord(c.n, c.conjugator).letters_string(),
        }
    return {N: c.n, TYPE: COORDS, COORDS: [str(x) for x in c.coords]}


def get_section_spec(value: Dict[str, Any]) -> SectionSpec:
    n = get_integer(_field(value, N, "section spec"))
    kind = _field(value, KIND, "section spec")
    k = get_integer(value.get(K, 0))
    weights = []
    for entry in value.get(WEIGHTS, []):
        weights.append(
            (
                get_integer(_field(entry, I, "weight")),
                get_integer(_field(entry, J, "weight")),
                get_integer(_field(entry, W, "weight")),
            )
        )
    return SectionSpec(n, kind, k, tuple(weights))


def section_spec_to_json(spec: SectionSpec) -> Dict[str, Any]:
    out: Dict[str, Any] = {N: spec.n, KIND: spec.kind}
    if spec.kind == NEAR_K:
        out[K] = spec.k
    out[WEIGHTS] = [{I: i, J: j, W: w} for i, j, w in spec.weights]
    return out


def get_obstruction_input(value: Dict[str, Any]) -> Tuple[int, int, Pullback]:
    """Read ``g``, ``n`` and the candidate pullback, given explicitly or as a named preset."""
    g = get_integer(_field(value, G, "obstruction input"))
    n = get_integer(_field(value, N, "obstruction input"))
    if PRESET in value:
        return g, n, cohomology.preset_pullback(value[PRESET], g, n)
    fstar = _field(value, FSTAR, "obstruction input")
    if isinstance(fstar, str):
        return g, n, cohomology.preset_pullback(fstar, g, n)
    if isinstance(fstar, dict) and PRESET in fstar:
        return g, n, cohomology.preset_pullback(fstar[PRESET], g, n)
    matrix = _field(fstar, MATRIX, "pullback")
    if not isinstance(matrix, list) or not all(isinstance(row, list) for row in matrix):
        raise ValueError(f"The pullback matrix is a list of rows, got {matrix!r}")
    rows = tuple(tuple(get_rational(x) for x in row) for row in matrix)
    omega: Optional[Any] = None
    if OMEGA in fstar and fstar[OMEGA] is not None:
        raw = fstar[OMEGA]
        omega = tuple(get_rational(x) for x in raw) if isinstance(raw, list) else get_rational(raw)
    return g, n, Pullback(g, n, rows, omega)


def _is_exact_number(x: Any) -> bool:
    return (isinstance(x, int) and not isinstance(x, bool)) or (
        isinstance(x, str) and RATIONAL_PATTERN.fullmatch(x) is not None
    )


def get_config(value: Dict[str, Any], exact: Optional[bool] = None) -> Config:
    """Read a planar or sphere configuration.

    :param exact: planar coordinates are kept exact when true; by default they are exact
        exactly when every coordinate is an integer or a rational string
    """
    space = _field(value, SPACE, "configuration")
    points = _field(value, POINTS, "configuration")
    if not isinstance(points, list) or not all(isinstance(p, list) for p in points):
        raise ValueError(f"Configuration points are a list of coordinate lists, got {points!r}")
    if space == SPHERE:
        return SphereConfig(tuple(tuple(float(x) for x in p) for p in points))
    elif space == PLANE:
        if exact is None:
            exact = all(_is_exact_number(x) for p in points for x in p)
        if exact:
            return PlanarConfig(tuple(tuple(get_rational(x) for x in p) for p in points), exact=True)
        return PlanarConfig(tuple(tuple(float(x) for x in p) for p in points))
    else:
        raise ValueError(f"Unknown configuration space: {space!r}")


def config_to_json(cfg: Config) -> Dict[str, Any]:
    """Exact coordinates are written as strings, others as JSON numbers."""
    if isinstance(cfg, SphereConfig):
        return {SPACE: SPHERE, POINTS: [list(p) for p in cfg.points]}
    if cfg.exact:
        return {SPACE: PLANE, POINTS: [[str(x) for x in p] for p in cfg.points]}
    return {SPACE: PLANE, POINTS: [list(p) for p in cfg.points]}


def get_direction(text: str) -> List[float]:
    """Read a direction given as comma-separated coordinates; rationals stay exact."""
    parts = [part.strip() for part in text.split(",")]
    try:
        return [get_rational(part) if RATIONAL_PATTERN.fullmatch(part) else float(part) for part in parts]
    except ValueError:
        raise ValueError(f"Expected comma-separated coordinates, got {text!r}") from None


def loads(text: str, getter: Callable[[Any], T]) -> T:
    """Decode a JSON document and read it with one of the ``get_`` functions."""
    try:
        value = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"Malformed JSON: {e}") from None
    return getter(value)


def read_json_file(filename: str, getter: Callable[[Any], T]) -> T:  # pragma: no mutate
    """Read a JSON file with one of the ``get_`` functions, naming the file in any error."""
    with open(filename, "r", encoding="utf-8") as f:
        contents = f.read()
    try:
        return loads(contents, getter)
    except ValueError as e:
        if filename in str(e):  # pragma: no mutate
            raise
        exc = ValueError(f"Error in {filename}: {e}")  # pragma: no mutate
        exc.__traceback__ = e.__traceback__  # pragma: no mutate
        raise exc from None
