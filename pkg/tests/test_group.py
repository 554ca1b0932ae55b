import pytest
from hypothesis import given, strategies as st

from models.errors import BudgetExceeded, ShapeMismatch
from models.field import PrimeField
from models.group import (
    GroupElement,
    conjugate,
    enumerate_group,
    from_matrix,
    group_order,
    identity,
    inverse,
    make_element,
    multiply,
    to_matrix,
)


def elements(n, q):
    coords = st.lists(st.integers(0, q - 1), min_size=2 * n - 1, max_size=2 * n - 1)
    return coords.map(lambda c: make_element(c[:n], c[n:], q))


def test_multiplication_rule():
    g = make_element([1, 2, 0], [1, 0], 3)
    h = make_element([2, 1, 1], [0, 2], 3)
    assert multiply(g, h) == make_element([0, 0, 1], [2, 1], 3)


@given(st.data())
def test_group_axioms(data):
    n = data.draw(st.integers(1, 5))
    q = data.draw(st.sampled_from([2, 3, 5]))
    g, h, k = (data.draw(elements(n, q)) for _ in range(3))
    e = identity(n, q)
    assert (g * h) * k == g * (h * k)
    assert g * e == g == e * g
    assert g * inverse(g) == e == inverse(g) * g


@given(elements(4, 3), elements(4, 3))
def test_conjugation_closed_form(x, by):
    assert conjugate(x, by) == inverse(by) * x * by
    assert conjugate(x, by).alpha == x.alpha


def _matmul(left, right, field):
    size = len(left)
    return tuple(
        tuple(sum((left[i][k] * right[k][j] for k in range(size)), field.zero()) for j in range(size))
        for i in range(size)
    )


@given(elements(3, 5), elements(3, 5))
def test_matrix_quotient_is_a_homomorphism(g, h):
    product = _matmul(to_matrix(g), to_matrix(h), PrimeField(5))
    assert from_matrix(product) == g * h
    assert from_matrix(to_matrix(g)) == g


def test_enumeration_covers_the_group():
    elements_ = list(enumerate_group(2, 3))
    assert len(elements_) == group_order(2, 3) == 27
    assert len(set(elements_)) == 27
    assert elements_[0].is_identity()


def test_enumeration_respects_budget():
    with pytest.raises(BudgetExceeded):
        next(enumerate_group(5, 5, budget=1000))


def test_shape_checks():
    f = PrimeField(3)
    with pytest.raises(ShapeMismatch):
        GroupElement(f.vector([1, 2]), f.vector([1, 2]))
    with pytest.raises(ShapeMismatch):
        multiply(identity(2, 3), identity(3, 3))
    with pytest.raises(ShapeMismatch):
        GroupElement(f.vector([1]) + PrimeField(5).vector([1]), f.vector([0]))


def test_element_rendering():
    g = make_element([1, 0], [2], 3)
    assert str(g) == "g(1,0;2)"
    assert g.to_dict() == {"alpha": [1, 0], "beta": [2]}
