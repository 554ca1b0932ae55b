import pytest
from hypothesis import given, strategies as st

from classification.orbits import classify
from models.errors import BudgetExceeded, EvenSegment, OutOfRange, ShapeMismatch, ZeroInteriorY
from models.group import conjugate, inverse, make_element
from models.lie_algebra import (
    AdjointPoint,
    adjoint_act,
    coadjoint_act,
    enumerate_coadjoint_points,
    make_adjoint,
    make_coadjoint,
    segment_invariant,
)


def elements(n, q):
    coords = st.lists(st.integers(0, q - 1), min_size=2 * n - 1, max_size=2 * n - 1)
    return coords.map(lambda c: make_element(c[:n], c[n:], q))


def points(n, q):
    coords = st.lists(st.integers(0, q - 1), min_size=2 * n - 1, max_size=2 * n - 1)
    return coords.map(lambda c: make_coadjoint(c[:n], c[n:], q))


def test_coadjoint_rule():
    F = make_coadjoint([1, 2, 3], [1, 2], 5)
    g = make_element([1, 1, 1], [4, 4], 5)
    # x1 - a2 y1, x2 + a1 y1 - a3 y2, x3 + a2 y2
    assert coadjoint_act(g, F) == make_coadjoint([0, 1, 0], [1, 2], 5)


@given(elements(4, 3), elements(4, 3), points(4, 3))
def test_coadjoint_is_an_action(g, h, F):
    assert coadjoint_act(g * h, F) == coadjoint_act(g, coadjoint_act(h, F))
    assert coadjoint_act(g * inverse(g), F) == F


@given(elements(5, 3), points(5, 3))
def test_classify_is_constant_on_orbits(g, F):
    assert classify(coadjoint_act(g, F)) == classify(F)


@given(elements(4, 5), points(4, 5))
def test_pairing_is_linear_in_the_point(g, F):
    doubled = make_coadjoint([2 * v.value for v in F.x], [2 * v.value for v in F.y], 5)
    assert doubled.pairing(g) == F.pairing(g) * 2


@given(elements(4, 3), st.lists(st.integers(0, 2), min_size=7, max_size=7))
def test_adjoint_action_matches_conjugation(by, coords):
    x = make_element(coords[:4], coords[4:], 3)
    A = make_adjoint(coords[:4], coords[4:], 3)
    moved = conjugate(x, inverse(by))
    assert adjoint_act(by, A) == AdjointPoint(moved.alpha, moved.beta)


def test_segment_invariant_of_length_three():
    F = make_coadjoint([2, 0, 3], [1, 4], 5)
    # x1 y2 + x3 y1
    assert segment_invariant(F, 0, 3).value == (2 * 4 + 3 * 1) % 5


def test_segment_invariant_rejections():
    F = make_coadjoint([1, 1, 1, 1], [1, 0, 1], 3)
    with pytest.raises(EvenSegment):
        segment_invariant(F, 0, 2)
    with pytest.raises(ZeroInteriorY):
        segment_invariant(F, 0, 3)
    with pytest.raises(OutOfRange):
        segment_invariant(F, 2, 6)


def test_point_enumeration_and_budget():
    assert len(list(enumerate_coadjoint_points(2, 2))) == 8
    with pytest.raises(BudgetExceeded):
        next(enumerate_coadjoint_points(6, 3, budget=100))


def test_shape_checks():
    with pytest.raises(ShapeMismatch):
        make_coadjoint([1, 2], [1, 2], 3)
    with pytest.raises(ShapeMismatch):
        coadjoint_act(make_element([1], [], 3), make_coadjoint([1, 2], [1], 3))
