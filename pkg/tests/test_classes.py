import pytest
from hypothesis import given, strategies as st

from classification.classes import (
    ClassCountTable,
    DotString,
    b_invariants,
    class_of,
    class_rank,
    class_representative,
    class_size,
    count_classes_by_strings,
    count_classes_recursive,
    enumerate_classes,
    free_coordinates,
    named_invariants,
    shift_matrix,
)
from classification.orbits import total_orbits
from models.errors import BudgetExceeded, OutOfRange
from models.field import PrimeField
from models.group import conjugate, group_order, make_element


def elements(n, q):
    coords = st.lists(st.integers(0, q - 1), min_size=2 * n - 1, max_size=2 * n - 1)
    return coords.map(lambda c: make_element(c[:n], c[n:], q))


@pytest.mark.parametrize("n, q", [(1, 3), (2, 3), (3, 2), (3, 3), (4, 2), (4, 3)])
def test_classes_partition_the_group(n, q):
    classes = list(enumerate_classes(n, q))
    assert len(classes) == len(set(classes)) == total_orbits(n, q)
    assert sum(class_size(c) for c in classes) == group_order(n, q)
    for c in classes:
        assert class_of(class_representative(c)) == c


@given(elements(4, 3), elements(4, 3))
def test_class_of_is_conjugation_invariant(g, by):
    assert class_of(conjugate(g, by)) == class_of(g)
    assert named_invariants(conjugate(g, by)) == named_invariants(g)


@given(elements(5, 2))
def test_invariant_count_matches_rank(g):
    assert len(b_invariants(g)) == g.n - 1 - class_rank(g.alpha)


def test_shift_matrix_rows():
    a = PrimeField(5).vector([1, 2, 3])
    assert shift_matrix(a).as_array().tolist() == [[2, 4, 0], [0, 3, 3]]


def test_isolated_zero_invariant():
    g = make_element([1, 0, 1], [1, 1], 3)
    [inv] = b_invariants(g)
    assert (inv.index, inv.label, inv.value.value) == (1, "b1*a3+b2*a1", 2)


def test_zero_run_invariants():
    g = make_element([0, 0, 0], [2, 1], 3)
    assert [(inv.label, inv.value.value) for inv in b_invariants(g)] == [("b1", 2), ("b2", 1)]
    g = make_element([0, 0, 1, 0], [1, 2, 0], 3)
    assert [inv.label for inv in b_invariants(g)] == ["b1"]


def test_free_coordinates():
    f = PrimeField(3)
    assert free_coordinates(f.vector([0, 0, 0])) == [0, 1]
    assert free_coordinates(f.vector([1, 1, 1])) == []
    assert free_coordinates(f.vector([2])) == []


def test_class_descriptor_rendering():
    c = class_of(make_element([1, 0], [2], 3))
    assert c.support == (1,)
    assert c.to_dict() == {"a": [1, 0], "b": [0]}
    assert c.label() == "a=(1,0) b=(0)"


def test_dot_strings():
    dots = DotString((True, False, True))
    assert str(dots) == "•∘•"
    assert (dots.n, dots.m, dots.ell(), dots.k()) == (3, 2, 1, 1)


def test_class_counts_for_g3_over_f2():
    table = count_classes_by_strings(3, 2)
    assert table.totals() == {0: 4, 1: 6, 2: 4}
    assert table.class_count() == 14


@pytest.mark.parametrize("n, q", [(n, q) for n in range(1, 10) for q in (2, 3, 5)])
def test_dot_strings_count_all_classes(n, q):
    assert count_classes_by_strings(n, q).class_count() == total_orbits(n, q)


@pytest.mark.parametrize("n, q", [(3, 3), (4, 2), (4, 3)])
def test_dot_strings_match_enumeration(n, q):
    table = count_classes_by_strings(n, q)
    found = {}
    for c in enumerate_classes(n, q):
        k = class_rank(c.a)
        found[k] = found.get(k, 0) + 1
    assert all(found.get(k, 0) == table.total(k) for k in range(n))


@pytest.mark.parametrize("n, q", [(n, q) for n in range(2, 11) for q in (2, 3, 5)])
def test_recursion_matches_dot_strings(n, q):
    assert count_classes_recursive(n, q) == count_classes_by_strings(n, q)


def test_table_equality_ignores_missing_zero_entries():
    assert ClassCountTable(2, 3, {0: 3}, {1: 8}) == ClassCountTable(2, 3, {0: 3, 1: 0}, {0: 0, 1: 8})
    assert ClassCountTable(2, 3, {0: 3}) != ClassCountTable(2, 3, {0: 4})


def test_budgets_and_ranges():
    with pytest.raises(BudgetExceeded):
        count_classes_by_strings(12, 2, budget=1024)
    with pytest.raises(OutOfRange):
        count_classes_recursive(1, 2)
    with pytest.raises(BudgetExceeded):
        list(enumerate_classes(6, 5, budget=1000))


@pytest.mark.parametrize("q", [2, 3, 5, 7])
def test_n3_table(q):
    table = count_classes_by_strings(3, q)
    assert [table.empty_first.get(k, 0) for k in range(3)] == [q * q, q * (q - 1), q * (q - 1)]
    assert [table.heavy_first.get(k, 0) for k in range(3)] == [0, q * q * (q - 1), q * (q - 1) ** 2]
