import logging
import random

from hypothesis import given, settings, strategies as st
import pytest

import braid_sections.braid_core as braid_core
import braid_sections.curves as curves
import braid_sections.twist_calculus as twist_calculus
from braid_sections.braid_core import BraidWord
from braid_sections.curves import Curve, RoundCurveSpec


@pytest.mark.parametrize(
    "n,subset",
    [
        (4, (1,)),
        (4, (2, 2)),
        (4, (0, 1)),
        (4, (3, 5)),
    ],
)
def test_curves_round_spec_rejects_bad_subsets(n, subset):
    with pytest.raises(ValueError):
        RoundCurveSpec(n, subset)


def test_curves_round_spec_sorts_subset():
    spec = RoundCurveSpec(5, (4, 1, 2))
    assert spec.subset == (1, 2, 4)
    assert not spec.contiguous
    assert spec.block() == (1, 3)


def test_curves_round_curve_on_consecutive_punctures():
    c = curves.round_curve_on(4, 1, 2)
    assert c.coords == (0, 0, 1, 0)
    assert not c.peripheral
    assert c.has_provenance


def test_curves_peripheral_curve():
    c = curves.round_curve_on(4, 1, 2, 3, 4)
    assert c.peripheral
    assert curves.geometric_intersection(c, curves.round_curve_on(4, 1, 3)) == 0


def test_curves_non_contiguous_curves_are_distinct():
    assert curves.round_curve_on(4, 1, 3) != curves.round_curve_on(4, 1, 2)
    assert curves.round_curve_on(4, 1, 3) != curves.round_curve_on(4, 2, 3)
    assert curves.round_curve_on(5, 1, 3, 5) != curves.round_curve_on(5, 1, 2, 3)


def test_curves_wrong_coordinate_count():
    with pytest.raises(ValueError):
        Curve(4, (0, 1))


@pytest.mark.parametrize(
    "coords",
    [
        (0, 0, 0, 0),
        (0, 0, 2, 0),
    ],
)
def test_curves_fromcoords_needs_one_component(coords):
    with pytest.raises(ValueError):
        Curve.fromcoords(4, coords)


def test_curves_fromcoords_accepts_a_curve():
    c = Curve.fromcoords(4, (0, 0, 1, 0))
    assert c == curves.round_curve_on(4, 1, 2)
    assert not c.has_provenance


def test_curves_twist_fixes_its_curve():
    c = curves.round_curve_on(4, 1, 3)
    assert curves.is_isotopic(curves.act(twist_calculus.twist_word(c), c), c)


def test_curves_act_records_the_conjugator():
    c = curves.act(BraidWord(4, (2, -1)), curves.round_curve_on(4, 1, 2))
    assert c.conjugator == (2, -1)
    assert c.spec == RoundCurveSpec(4, (1, 2))


@pytest.mark.parametrize(
    "first,second,expected",
    [
        ((1, 2), (2, 3), 2),
        ((1, 2), (3, 4), 0),
        ((1, 3), (2, 4), 4),
        ((1, 2), (1, 2, 3), 0),
        ((1, 2, 3), (3, 4), 2),
    ],
)
def test_curves_geometric_intersection(first, second, expected):
    c1, c2 = curves.round_curve_on(4, *first), curves.round_curve_on(4, *second)
    assert curves.geometric_intersection(c1, c2) == expected
    assert curves.geometric_intersection(c2, c1) == expected


def test_curves_intersection_is_invariant_under_the_action():
    u = BraidWord(4, (1, -2, 3, 3, -1))
    c1, c2 = curves.round_curve_on(4, 1, 3), curves.round_curve_on(4, 2, 3)
    before = curves.geometric_intersection(c1, c2)
    assert curves.geometric_intersection(curves.act(u, c1), curves.act(u, c2)) == before


@pytest.mark.parametrize("k", [-2, -1, 0, 1, 2, 3])
def test_curves_twisting_grows_intersection(k):
    c, d = curves.round_curve_on(4, 1, 2), curves.round_curve_on(4, 2, 3)
    twisted = curves.act(twist_calculus.twist_word(c) ** k, d)
    assert curves.geometric_intersection(twisted, d) == abs(k) * curves.geometric_intersection(c, d) ** 2


@pytest.mark.parametrize("n", [3, 4, pytest.param(5, marks=pytest.mark.slow)])
def test_curves_disjoint_iff_twists_commute(n):
    specs = curves.round_specs(n)
    for t, s1 in enumerate(specs):
        for s2 in specs[t + 1 :]:
            c1, c2 = curves.round_curve(s1), curves.round_curve(s2)
            disjoint = curves.geometric_intersection(c1, c2) == 0
            assert disjoint == twist_calculus.twists_commute(c1, c2), (s1.subset, s2.subset)


def test_curves_find_carrier_for_bare_coordinates(caplog):
    image = curves.act(BraidWord(4, (2,)), curves.round_curve_on(4, 1, 2))
    bare = Curve(4, image.coords)
    carried = curves.find_carrier(bare)
    assert carried == image
    assert carried.has_provenance
    other = curves.round_curve_on(4, 3, 4)
    with caplog.at_level(logging.WARNING):
        count = curves.geometric_intersection(bare, Curve(4, other.coords))
    assert count == curves.geometric_intersection(image, other)
    assert "searching" in caplog.text


def test_curves_component_count():
    a12, a34 = curves.round_curve_on(4, 1, 2), curves.round_curve_on(4, 3, 4)
    assert curves.component_count(a12) == 1
    assert curves.component_count(curves.disjoint_union(a12, a34)) == 2
    n, coords = curves.disjoint_union(a12, a34)
    assert curves.component_count((n, tuple(x + y for x, y in zip(coords, a12.coords)))) == 3


def test_curves_disjoint_union_needs_disjoint_curves():
    with pytest.raises(ValueError):
        curves.disjoint_union(curves.round_curve_on(4, 1, 2), curves.round_curve_on(4, 2, 3))


def test_curves_round_specs():
    assert len(curves.round_specs(4)) == 10
    assert len(curves.round_specs(4, include_peripheral=True)) == 11
    assert curves.round_specs(4)[0].subset == (1, 2)


@pytest.mark.parametrize(
    "n,coords",
    [
        (5, (0, 1, 0, 0, 0, 0)),
        (5, (0, -1, 0, 0, -1, 1)),
        (6, (1, -2, -2, -8, -2, 0, -5, -7)),
    ],
)
def test_curves_find_carrier_where_no_letter_lowers_complexity(n, coords):
    bare = Curve.fromcoords(n, coords)
    carried = curves.find_carrier(bare)
    assert carried == bare
    (i, j), word = carried.carrier()
    block = curves.round_curve(RoundCurveSpec(n, tuple(range(i, j + 1))))
    assert curves.act(word, block) == bare


def test_curves_find_carrier_needs_a_round_preimage():
    peripheral = Curve(4, (0, 0, 0, 0), peripheral=True)
    with pytest.raises(ValueError):
        curves.find_carrier(peripheral)


def _random_curve(n, rng, length):
    spec = rng.choice(curves.round_specs(n))
    return curves.act(braid_core.random_word(n, length, rng), curves.round_curve(spec))


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=10**6), st.integers(min_value=4, max_value=6))
def test_curves_bare_images_keep_their_intersections(seed, n):
    rng = random.Random(seed)
    image = _random_curve(n, rng, rng.randint(0, 6))
    other = _random_curve(n, rng, rng.randint(0, 4))
    bare = Curve.fromcoords(n, image.coords)
    expected = curves.geometric_intersection(image, other)
    assert curves.geometric_intersection(bare, other) == expected
    assert curves.geometric_intersection(bare, Curve(n, other.coords)) == expected
    assert braid_core.equals(twist_calculus.twist_word(bare), twist_calculus.twist_word(image))


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=10**6), st.integers(min_value=4, max_value=6))
def test_curves_intersection_is_invariant_under_random_braids(seed, n):
    rng = random.Random(seed)
    c1, c2 = _random_curve(n, rng, 3), _random_curve(n, rng, 3)
    u = braid_core.random_word(n, rng.randint(1, 10), rng)
    assert curves.geometric_intersection(curves.act(u, c1), curves.act(u, c2)) == curves.geometric_intersection(c1, c2)


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=10**6), st.integers(min_value=4, max_value=6))
def test_curves_twists_are_natural_under_conjugation(seed, n):
    rng = random.Random(seed)
    c = _random_curve(n, rng, 2)
    u = braid_core.random_word(n, rng.randint(1, 8), rng)
    conjugated = u * twist_calculus.twist_word(c) * ~u
    assert braid_core.equals(twist_calculus.twist_word(curves.act(u, c)), conjugated)
    bare = Curve.fromcoords(n, curves.act(u, c).coords)
    assert braid_core.equals(twist_calculus.twist_word(bare), conjugated)


@pytest.mark.parametrize("first,second", [((1, 3), (2, 4)), ((1, 2, 3), (3, 4)), ((2, 3), (1, 2))])
@pytest.mark.parametrize("k", [-2, 1, 3])
def test_curves_twisting_grows_by_the_square_of_the_intersection(first, second, k):
    c, d = curves.round_curve_on(4, *first), curves.round_curve_on(4, *second)
    twisted = curves.act(twist_calculus.twist_word(c) ** k, d)
    assert curves.geometric_intersection(twisted, d) == abs(k) * curves.geometric_intersection(c, d) ** 2


def test_curves_generators_on_five_strands_are_distinct():
    generators = [a for _, _, a in braid_core.artin_generators(5)]
    for t, first in enumerate(generators):
        for second in generators[t + 1 :]:
            assert not braid_core.equals(first, second)
    twists = [twist_calculus.twist_word(curves.round_curve_on(5, i, j)) for i, j, _ in braid_core.artin_generators(5)]
    assert len(twists) == 10
    for t, first in enumerate(twists):
        for second in twists[t + 1 :]:
            assert not braid_core.equals(first, second)
