import itertools
import math

from hypothesis import assume, given, settings, strategies as st
import pytest
import sympy

import braid_sections.geometric_sections as geometric_sections
from braid_sections.geometric_sections import PlanarConfig, SphereConfig

NORTH = (0.0, 0.0, 1.0)
SOUTH = (0.0, 0.0, -1.0)


def test_geometric_sections_config_validation():
    with pytest.raises(ValueError):
        PlanarConfig(((0, 0), (0, 0)))
    with pytest.raises(ValueError):
        PlanarConfig(((0, 0, 0),))
    with pytest.raises(TypeError):
        PlanarConfig(((0.5, 0),), exact=True)
    with pytest.raises(ValueError):
        SphereConfig(((1.0, 1.0, 0.0),))
    with pytest.raises(ValueError):
        SphereConfig((NORTH, NORTH))


def test_geometric_sections_exact_config_reads_strings():
    cfg = PlanarConfig((("1/2", 0), (3, "-2")), exact=True)
    assert cfg.points == ((sympy.Rational(1, 2), 0), (3, -2))


@pytest.mark.parametrize(
    "cfg,expected",
    [
        (PlanarConfig(((0, 0), (1, 0)), exact=True), sympy.Rational(1, 2)),
        (PlanarConfig(((0, 0), (1, 0), (0, 3)), exact=True), sympy.Rational(1, 2)),
        (PlanarConfig(((0, 0), (3, 4)), exact=True), sympy.Rational(5, 2)),
    ],
)
def test_geometric_sections_epsilon_exact(cfg, expected):
    assert geometric_sections.epsilon_pairwise(cfg) == expected


def test_geometric_sections_epsilon_float_and_sphere():
    assert geometric_sections.epsilon_pairwise(PlanarConfig(((0, 0), (1, 0), (0, 3)))) == pytest.approx(0.5)
    assert geometric_sections.epsilon_pairwise(SphereConfig((NORTH, SOUTH))) == pytest.approx(math.pi / 2)
    with pytest.raises(ValueError):
        geometric_sections.epsilon_pairwise(PlanarConfig(((0, 0),)))


def test_geometric_sections_epsilon_infinity_of_origin():
    assert geometric_sections.epsilon_infinity(PlanarConfig(((0, 0),), exact=True)) == sympy.pi / 2
    assert geometric_sections.epsilon_infinity(PlanarConfig(((0, 0),))) == pytest.approx(math.pi / 2)


def test_geometric_sections_epsilon_infinity_modes_agree():
    exact = geometric_sections.epsilon_infinity(PlanarConfig(((3, 4), (1, 0)), exact=True))
    approx = geometric_sections.epsilon_infinity(PlanarConfig(((3, 4), (1, 0))))
    assert exact == sympy.acot(5)
    assert float(exact) == pytest.approx(approx)


def test_geometric_sections_add_near_k_exact():
    cfg = PlanarConfig(((0, 0), (1, 0)), exact=True)
    out = geometric_sections.add_near_k(cfg, 1, (1, 0))
    assert out.points[0] == (sympy.Rational(1, 2), 0)
    assert out.exact
    assert geometric_sections.forget_first(out) == cfg


def test_geometric_sections_add_near_k_checks_arguments():
    cfg = PlanarConfig(((0, 0), (1, 0)))
    with pytest.raises(ValueError):
        geometric_sections.add_near_k(cfg, 3, (1, 0))
    with pytest.raises(ValueError):
        geometric_sections.add_near_k(cfg, 1, (1, 1))
    with pytest.raises(ValueError):
        geometric_sections.add_near_k(cfg, 1, (1, 0, 0))


def test_geometric_sections_add_at_infinity_of_origin():
    exact = geometric_sections.add_at_infinity(PlanarConfig(((0, 0),), exact=True), (1, 0))
    assert exact.points[0] == (1, 0)
    approx = geometric_sections.add_at_infinity(PlanarConfig(((0, 0),)), (1, 0))
    assert approx.points[0] == pytest.approx((1.0, 0.0))


def test_geometric_sections_add_at_infinity_modes_agree():
    direction = ("3/5", "4/5")
    exact = geometric_sections.add_at_infinity(PlanarConfig(((3, 4), (-1, 2)), exact=True), direction)
    approx = geometric_sections.add_at_infinity(PlanarConfig(((3, 4), (-1, 2))), (0.6, 0.8))
    scale = 5 + math.sqrt(26)
    assert [float(x) for x in exact.points[0]] == pytest.approx([0.6 * scale, 0.8 * scale])
    assert approx.points[0] == pytest.approx([float(x) for x in exact.points[0]])


def test_geometric_sections_added_point_is_outside():
    cfg = PlanarConfig(((3, 4), (-1, 2), (0, -5)))
    new = geometric_sections.add_at_infinity(cfg, (0, -1)).points[0]
    assert math.hypot(*new) > 5


def _rotate(p, angle):
    c, s = math.cos(angle), math.sin(angle)
    return (c * p[0] - s * p[1], s * p[0] + c * p[1])


@pytest.mark.parametrize("angle", [0.3, 1.0, 2.5])
def test_geometric_sections_rotation_equivariance(angle):
    points = ((0.5, -1.0), (2.0, 0.25), (-1.5, 1.5))
    direction = (math.cos(0.7), math.sin(0.7))
    cfg = PlanarConfig(points)
    rotated = PlanarConfig(tuple(_rotate(p, angle) for p in points))
    for add in (
        lambda c, v: geometric_sections.add_near_k(c, 2, v),
        geometric_sections.add_at_infinity,
    ):
        expected = _rotate(add(cfg, direction).points[0], angle)
        assert add(rotated, _rotate(direction, angle)).points[0] == pytest.approx(expected)


def test_geometric_sections_small_moves_stay_small():
    cfg = PlanarConfig(((0.0, 0.0), (1.0, 0.0), (0.0, 2.0)))
    moved = PlanarConfig(((1e-9, 0.0), (1.0, 0.0), (0.0, 2.0)))
    for k in (1, 2, 3):
        p = geometric_sections.add_near_k(cfg, k, (0.0, 1.0)).points[0]
        q = geometric_sections.add_near_k(moved, k, (0.0, 1.0)).points[0]
        assert math.dist(p, q) < 1e-6
    p = geometric_sections.add_at_infinity(cfg, (1.0, 0.0)).points[0]
    q = geometric_sections.add_at_infinity(moved, (1.0, 0.0)).points[0]
    assert math.dist(p, q) < 1e-6


def test_geometric_sections_stereographic():
    assert geometric_sections.stereographic_lift((0, 0)) == (0, 0, -1)
    lifted = geometric_sections.stereographic_lift((sympy.Rational(3), sympy.Rational(4)))
    assert geometric_sections.stereographic_projection(lifted) == (3, 4)
    with pytest.raises(ValueError):
        geometric_sections.stereographic_projection(NORTH)


def test_geometric_sections_add_near_k_on_sphere():
    cfg = SphereConfig((NORTH, SOUTH))
    out = geometric_sections.add_near_k(cfg, 1, (1.0, 0.0, 0.0))
    assert out.points[0] == pytest.approx((1.0, 0.0, 0.0))
    assert math.isclose(sum(x * x for x in out.points[0]), 1.0)
    assert geometric_sections.forget_first(out) == cfg


def test_geometric_sections_sphere_direction_must_be_tangent():
    cfg = SphereConfig((NORTH, SOUTH))
    with pytest.raises(ValueError):
        geometric_sections.add_near_k(cfg, 1, (0.0, 0.0, 1.0))
    with pytest.raises(ValueError):
        geometric_sections.add_near_k(cfg, 1, (2.0, 0.0, 0.0))


def test_geometric_sections_mobius_image():
    assert geometric_sections.mobius_image(0j, 1 + 0j, None, -1) == -1
    assert geometric_sections.mobius_image(2j, 3 + 0j, 5 + 1j, 0) == pytest.approx(2j)
    assert geometric_sections.mobius_image(2j, 3 + 0j, 5 + 1j, 1) == pytest.approx(3 + 0j)
    assert geometric_sections.mobius_image(None, 3 + 0j, 5 + 1j, 1) == pytest.approx(3 + 0j)
    assert geometric_sections.mobius_image(2j, None, 5 + 1j, 0) == pytest.approx(2j)


def test_geometric_sections_add_mobius():
    cfg = SphereConfig((SOUTH, (1.0, 0.0, 0.0), NORTH))
    out = geometric_sections.add_mobius(cfg)
    assert out.points[0] == pytest.approx((-1.0, 0.0, 0.0))
    assert geometric_sections.forget_first(out) == cfg


def test_geometric_sections_add_mobius_checks_arguments():
    cfg = SphereConfig((SOUTH, (1.0, 0.0, 0.0), NORTH))
    with pytest.raises(ValueError):
        geometric_sections.add_mobius(cfg, 1)
    with pytest.raises(ValueError):
        geometric_sections.add_mobius(cfg, 0)
    with pytest.raises(ValueError):
        geometric_sections.add_mobius(SphereConfig((SOUTH, NORTH)))


def test_geometric_sections_figure_data(tmp_path):
    before = PlanarConfig(((0, 0), (1, 0)))
    after = geometric_sections.add_near_k(before, 1, (1, 0))
    records = geometric_sections.figure_records(before, after)
    assert len(records) == 5
    assert records[0].split()[:2] == ["1", "before"]
    assert records[2].split()[:2] == ["0", "after"]
    assert float(records[2].split()[2]) == pytest.approx(0.5)
    path = tmp_path / "figure.dat"
    geometric_sections.write_figure_data(before, after, str(path))
    assert path.read_text().splitlines() == records


def test_geometric_sections_render_svg():
    before = SphereConfig((NORTH, SOUTH))
    after = geometric_sections.add_near_k(before, 2, (0.0, 1.0, 0.0))
    svg = geometric_sections.render_svg(before, after)
    assert svg.startswith("<svg")
    assert svg.count('fill="black"') == 2
    assert svg.count('fill="red"') == 2


coordinates = st.floats(min_value=-10, max_value=10, allow_nan=False)
points = st.lists(st.tuples(coordinates, coordinates), min_size=2, max_size=8, unique=True)


@settings(max_examples=50, deadline=None)
@given(points, st.floats(min_value=0, max_value=6.28), st.data())
def test_geometric_sections_added_point_is_new(points, angle, data):
    cfg = PlanarConfig(tuple(points))
    assume(geometric_sections.epsilon_pairwise(cfg) > 1e-6)
    k = data.draw(st.integers(min_value=1, max_value=len(cfg)))
    direction = (math.cos(angle), math.sin(angle))
    for out in (geometric_sections.add_near_k(cfg, k, direction), geometric_sections.add_at_infinity(cfg, direction)):
        assert len(out) == len(cfg) + 1
        assert out.points[0] not in cfg.points
        assert geometric_sections.forget_first(out) == cfg


@pytest.mark.parametrize("gap", [1e-6, 1e-9, 1e-12])
def test_geometric_sections_near_collisions(gap):
    cfg = PlanarConfig(((0.0, 0.0), (gap, 0.0), (3.0, 1.0)))
    for k in (1, 2, 3):
        out = geometric_sections.add_near_k(cfg, k, (0.0, 1.0))
        assert out.points[0] not in cfg.points
        assert math.dist(out.points[0], cfg.points[k - 1]) == pytest.approx(gap / 2, rel=1e-3)
        assert geometric_sections.forget_first(out) == cfg
    out = geometric_sections.add_at_infinity(cfg, (1.0, 0.0))
    assert out.points[0] not in cfg.points


def test_geometric_sections_near_collision_exact():
    tiny = sympy.Rational(1, 10**40)
    cfg = PlanarConfig(((0, 0), (tiny, 0)), exact=True)
    out = geometric_sections.add_near_k(cfg, 2, (0, 1))
    assert out.points[0] == (tiny, tiny / 2)
    assert geometric_sections.forget_first(out) == cfg


def _unit(v):
    norm = math.sqrt(sum(x * x for x in v))
    return tuple(x / norm for x in v)


vectors = st.tuples(*[st.floats(min_value=-1, max_value=1, allow_nan=False)] * 3).filter(
    lambda v: sum(x * x for x in v) > 1e-3
)


@settings(max_examples=50, deadline=None)
@given(st.lists(vectors, min_size=2, max_size=6), vectors, st.data())
def test_geometric_sections_sphere_points_stay_distinct(raw, w, data):
    points = tuple(dict.fromkeys(_unit(v) for v in raw))
    assume(len(points) >= 2)
    assume(all(geometric_sections.sphere_distance(p, q) > 1e-6 for p, q in itertools.combinations(points, 2)))
    cfg = SphereConfig(points)
    eps = geometric_sections.epsilon_pairwise(cfg)
    k = data.draw(st.integers(min_value=1, max_value=len(cfg)))
    x = cfg.points[k - 1]
    dot = sum(a * b for a, b in zip(w, x))
    tangent = tuple(a - dot * b for a, b in zip(w, x))
    assume(sum(a * a for a in tangent) > 1e-6)
    out = geometric_sections.add_near_k(cfg, k, _unit(tangent))
    new = out.points[0]
    assert geometric_sections.sphere_distance(new, x) == pytest.approx(eps, abs=1e-9)
    for p in cfg.points:
        assert geometric_sections.sphere_distance(new, p) > 0
    assert geometric_sections.forget_first(out) == cfg


@settings(max_examples=50, deadline=None)
@given(points, st.floats(min_value=0, max_value=6.28), st.data())
def test_geometric_sections_random_moves_stay_small(points, angle, data):
    cfg = PlanarConfig(tuple(points))
    assume(geometric_sections.epsilon_pairwise(cfg) > 1e-3)
    k = data.draw(st.integers(min_value=1, max_value=len(cfg)))
    j = data.draw(st.integers(min_value=1, max_value=len(cfg)))
    moved_points = list(cfg.points)
    moved_points[j - 1] = (moved_points[j - 1][0] + 1e-9, moved_points[j - 1][1] - 1e-9)
    moved = PlanarConfig(tuple(moved_points))
    direction = (math.cos(angle), math.sin(angle))
    for add in (
        lambda c: geometric_sections.add_near_k(c, k, direction),
        lambda c: geometric_sections.add_at_infinity(c, direction),
    ):
        assert math.dist(add(cfg).points[0], add(moved).points[0]) < 1e-6
