import pytest
from hypothesis import given, strategies as st

from models.errors import DimensionMismatch, DivisionByZero, ModulusMismatch, NotPrime
from models.field import FqMatrix, PrimeField, add, div, image_and_coset, inv, is_prime, mul, neg, require_prime, sub
from classification.classes import shift_matrix

PRIMES = [2, 3, 5, 7, 11]


def test_is_prime():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]


@pytest.mark.parametrize("bad", [0, 1, 4, 9, 15])
def test_require_prime_rejects_composites(bad):
    with pytest.raises(NotPrime):
        require_prime(bad)


def test_basic_arithmetic_in_f7():
    f = PrimeField(7)
    assert f.element(3) + f.element(5) == f.element(1)
    assert f.element(3).inverse() == f.element(5)
    assert f.element(2) / f.element(4) == f.element(4)
    assert -f.element(3) == f.element(4)
    assert f.element(3) ** -1 == f.element(5)
    assert f.element(10).value == 3


def test_zero_has_no_inverse():
    with pytest.raises(DivisionByZero):
        PrimeField(5).zero().inverse()


def test_mixed_moduli_rejected():
    with pytest.raises(ModulusMismatch):
        PrimeField(3).one() + PrimeField(5).one()


def test_field_arith_functions_in_f5():
    f = PrimeField(5)
    a, b = f.element(3), f.element(4)
    assert add(a, b) == f.element(2)
    assert sub(a, b) == f.element(4)
    assert mul(a, b) == f.element(2)
    assert neg(a) == f.element(2)
    assert inv(a) == f.element(2)
    assert div(a, b) == f.element(2)
    with pytest.raises(DivisionByZero):
        div(a, f.zero())
    with pytest.raises(ModulusMismatch):
        add(a, PrimeField(3).one())


@given(st.sampled_from(PRIMES), st.integers(), st.integers(), st.integers())
def test_field_axioms(p, x, y, z):
    f = PrimeField(p)
    a, b, c = f.element(x), f.element(y), f.element(z)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == f.zero()
    if a:
        assert a * a.inverse() == f.one()


def test_rank_and_rref():
    m = FqMatrix(2, 2, [[1, 2], [2, 4]], 5)
    assert m.rank() == 1
    reduced, pivots = m.rref()
    assert pivots == [0]
    assert reduced == FqMatrix(2, 2, [[1, 2], [0, 0]], 5)


def test_matrix_shape_checks():
    with pytest.raises(DimensionMismatch):
        FqMatrix(2, 2, [[1, 2], [3]], 3)
    with pytest.raises(DimensionMismatch):
        FqMatrix.identity(2, 3) @ FqMatrix.identity(3, 3)


def test_apply_and_transpose():
    m = FqMatrix(2, 3, [[1, 0, 2], [0, 1, 1]], 3)
    v = PrimeField(3).vector([1, 1, 1])
    assert [x.value for x in m.apply(v)] == [0, 2]
    assert m.transpose().transpose() == m


vectors = st.lists(st.integers(0, 2), min_size=4, max_size=4)


@given(vectors, st.lists(st.integers(0, 2), min_size=3, max_size=3), vectors)
def test_coset_representative_is_canonical(a, b, t):
    f = PrimeField(3)
    a, b, t = f.vector(a), f.vector(b), f.vector(t)
    matrix = shift_matrix(a)
    moved = tuple(x + y for x, y in zip(b, matrix.apply(t)))
    _, rep = image_and_coset(matrix, b)
    _, rep_moved = image_and_coset(matrix, moved)
    assert rep == rep_moved


def test_coset_representative_vanishes_on_pivots():
    f = PrimeField(5)
    matrix = FqMatrix(3, 1, [[1], [2], [0]], 5)
    basis, rep = image_and_coset(matrix, f.vector([3, 1, 4]))
    assert [[x.value for x in row] for row in basis] == [[1, 2, 0]]
    assert [x.value for x in rep] == [0, 0, 4]
