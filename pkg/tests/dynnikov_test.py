import random

import pytest
from hypothesis import given, settings, strategies as st

import braid_sections.dynnikov as dynnikov


@pytest.mark.parametrize(
    "n,i,j,expected",
    [
        (3, 1, 2, (0, 1)),
        (3, 2, 3, (0, -1)),
        (4, 2, 3, (0, 0, -1, 1)),
        (4, 1, 3, (0, 0, 0, 1)),
    ],
)
def test_dynnikov_round_block(n, i, j, expected):
    assert dynnikov.round_block(n, i, j) == expected


def test_dynnikov_half_betas_of_round_block():
    a, b = dynnikov.split(dynnikov.round_block(4, 2, 3))
    assert dynnikov.half_betas(a, b) == [0, 1, 0]


def test_dynnikov_split_join():
    coords = (1, -2, 3, 4)
    assert dynnikov.join(*dynnikov.split(coords)) == coords


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=0, max_value=10**6), st.integers(min_value=3, max_value=7))
def test_dynnikov_letter_then_inverse_is_identity(seed, n):
    rng = random.Random(seed)
    i = rng.randint(1, n - 2)
    coords = dynnikov.round_block(n, i, rng.randint(i + 1, n - 1))
    for _ in range(rng.randint(0, 10)):
        coords = dynnikov.act_letter(n, coords, rng.choice([1, -1]) * rng.randint(1, n - 1))
    letter = rng.choice([1, -1]) * rng.randint(1, n - 1)
    assert dynnikov.act_letter(n, dynnikov.act_letter(n, coords, letter), -letter) == coords


def test_dynnikov_act_letters_uses_functional_order():
    n = 4
    coords = dynnikov.round_block(n, 1, 2)
    expected = dynnikov.act_letter(n, dynnikov.act_letter(n, coords, 3), 2)
    assert dynnikov.act_letters(n, (2, 3), coords) == expected


def test_dynnikov_braid_relation_acts_trivially():
    n = 4
    coords = dynnikov.round_block(n, 2, 3)
    assert dynnikov.act_letters(n, (1, 2, 1, -2, -1, -2), coords) == coords
    assert dynnikov.act_letters(n, (1, 3, -1, -3), coords) == coords


def test_dynnikov_twist_fixes_its_own_curve():
    n = 4
    coords = dynnikov.round_block(n, 2, 3)
    assert dynnikov.act_letters(n, (2, 2), coords) == coords
    assert dynnikov.act_letters(n, (1, 1), coords) != coords


@pytest.mark.parametrize(
    "n,i,j,k,expected",
    [
        (4, 2, 3, 2, 2),
        (4, 3, 4, 2, 0),
        (4, 1, 2, 2, 0),
        (4, 2, 3, 3, 0),
        (5, 3, 4, 3, 2),
    ],
)
def test_dynnikov_left_block_intersection(n, i, j, k, expected):
    assert dynnikov.left_block_intersection(n, dynnikov.round_block(n, i, j), k) == expected


def test_dynnikov_component_count():
    n = 4
    single = dynnikov.round_block(n, 2, 3)
    assert dynnikov.component_count(n, single) == 1
    assert dynnikov.component_count(n, tuple(2 * x for x in single)) == 2
    assert dynnikov.component_count(n, (0, 0, 0, 0)) == 0


def test_dynnikov_component_count_of_nested_and_separate_curves():
    parts = [dynnikov.round_block(5, 1, 2), dynnikov.round_block(5, 1, 3), dynnikov.round_block(5, 4, 5)]
    total = tuple(sum(xs) for xs in zip(*parts))
    assert total == (0, 0, 0, 1, 1, -1)
    assert dynnikov.component_count(5, total) == 3


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10**6), st.integers(min_value=4, max_value=6))
def test_dynnikov_braids_preserve_component_count(seed, n):
    rng = random.Random(seed)
    coords = tuple(x + y for x, y in zip(dynnikov.round_block(n, 1, 2), dynnikov.round_block(n, n - 1, n)))
    expected = dynnikov.component_count(n, coords)
    assert expected == 2
    letters = [rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(rng.randint(0, 8))]
    assert dynnikov.component_count(n, dynnikov.act_letters(n, letters, coords)) == expected


def test_dynnikov_complexity():
    assert dynnikov.complexity(dynnikov.round_block(4, 2, 3)) == 2
    assert dynnikov.complexity((0, 0, 0, 0)) == 0
