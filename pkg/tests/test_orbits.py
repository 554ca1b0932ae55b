import pytest

from classification.orbits import (
    OrbitDescriptor,
    classify,
    count_by_dimension,
    dimension,
    count_for_partition,
    count_partitions_even_odd,
    count_partitions_even_odd_direct,
    counts_by_dimension,
    enumerate_descriptors,
    enumerated_counts_by_dimension,
    orbit_size,
    partition_of_y,
    representative,
    total_orbits,
)
from classification.partitions import Composition
from models.errors import BudgetExceeded, OutOfRange, ParityViolation
from models.field import PrimeField
from models.group import group_order
from models.lie_algebra import make_coadjoint

SMALL_GROUPS = [(1, 2), (1, 5), (2, 3), (3, 2), (3, 3), (4, 2), (5, 2)]


def test_counts_for_g3_over_f2():
    assert counts_by_dimension(3, 2) == {0: 8, 2: 6}
    assert total_orbits(3, 2) == 14


def test_counts_for_g2_over_f3():
    assert counts_by_dimension(2, 3) == {0: 9, 2: 2}


@pytest.mark.parametrize("n, q", SMALL_GROUPS)
def test_closed_form_matches_enumeration(n, q):
    assert enumerated_counts_by_dimension(n, q) == counts_by_dimension(n, q)


@pytest.mark.parametrize("n, q", [(n, q) for n in range(1, 9) for q in (2, 3, 5, 7)])
def test_orbit_sizes_fill_the_dual_space(n, q):
    census = counts_by_dimension(n, q)
    assert sum(count * q ** dim for dim, count in census.items()) == group_order(n, q)


@pytest.mark.parametrize("n, q", [(3, 3), (4, 2)])
def test_representative_round_trip(n, q):
    for descriptor in enumerate_descriptors(n, q):
        F = representative(descriptor)
        assert classify(F) == descriptor
        assert F.y == descriptor.y_values


def test_enumeration_has_no_duplicates():
    descriptors = list(enumerate_descriptors(4, 3))
    assert len(descriptors) == len(set(descriptors)) == total_orbits(4, 3)


def test_classify_reads_partition_from_zero_y():
    F = make_coadjoint([1, 2, 3, 4], [1, 0, 2], 5)
    d = classify(F)
    assert d.partition == Composition((2, 2))
    assert d.odd_invariants == ()
    assert (d.k, d.dimension, orbit_size(d)) == (2, 4, 5 ** 4)
    assert dimension(d) == 4
    assert partition_of_y(F.y) == Composition((2, 2))


def test_classify_single_odd_segment():
    F = make_coadjoint([2, 0, 3], [1, 4], 5)
    d = classify(F)
    assert d.partition == Composition((3,))
    assert d.invariant_map() == {0: PrimeField(5).element(1)}
    assert dimension(d) == 2
    assert representative(d) == make_coadjoint([4, 0, 0], [1, 4], 5)


def test_descriptor_rendering():
    d = classify(make_coadjoint([1, 2], [0], 3))
    assert d.to_dict() == {"partition": [1, 1], "y": [0], "invariants": [[0, 1], [1, 2]], "dimension": 0}
    assert d.label() == "[1+1] y=(0) v0=1,v1=2"


def test_count_for_partition():
    assert count_for_partition(Composition((2, 1)), 3) == 6
    assert count_for_partition(Composition((1, 1, 1)), 5) == 125


@pytest.mark.parametrize("n", range(1, 11))
def test_even_odd_part_counts(n):
    for mu in range(n // 2 + 1):
        for nu in range(n - 2 * mu, -1, -2):
            if mu + nu:
                assert count_partitions_even_odd(n, mu, nu) == count_partitions_even_odd_direct(n, mu, nu)


def test_even_odd_part_count_n5_one_even_one_odd():
    assert count_partitions_even_odd(5, 1, 1) == 4


def test_even_odd_parity_violation():
    with pytest.raises(ParityViolation):
        count_partitions_even_odd(5, 1, 2)
    with pytest.raises(ParityViolation):
        count_partitions_even_odd(3, 2, 1)


def test_dimension_range():
    with pytest.raises(OutOfRange):
        count_by_dimension(4, 3, 3)


def test_enumeration_budget():
    with pytest.raises(BudgetExceeded):
        list(enumerate_descriptors(6, 5, budget=10_000))


def test_descriptors_are_ordered():
    d = list(enumerate_descriptors(2, 2))
    assert d == sorted(d)
    assert isinstance(d[0], OrbitDescriptor)
