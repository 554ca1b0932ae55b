import pytest

from classification.classes import class_of, class_representative, class_size, enumerate_classes
from classification.orbits import classify, counts_by_dimension, enumerate_descriptors
from models.cyclotomic import CycInt
from models.errors import BudgetExceeded
from models.group import enumerate_group
from oracle.brute_force import (
    alpha_generators,
    brute_coadjoint_orbits,
    brute_conjugacy_classes,
    brute_induce,
    brute_orbit_character,
    trace_character,
)
from oracle.union_find import PartitionOfSet, UnionFind, find_orbits
from representations.orbit_method import irreducible_rep_matrix, irreducible_value


ORACLE_GROUPS = [
    (1, 3),
    (2, 2),
    (2, 3),
    (3, 2),
    (3, 3),
    pytest.param(4, 2, marks=pytest.mark.slow),
    pytest.param(4, 3, marks=pytest.mark.slow),
    pytest.param(5, 2, marks=pytest.mark.slow),
]


def test_union_find():
    uf = UnionFind(range(6))
    assert uf.union(0, 1)
    assert uf.union(2, 1)
    assert not uf.union(0, 2)
    assert uf.find(2) == uf.find(0)
    assert len(uf) == 4
    assert uf.size[uf.find(0)] == 3


def test_partition_blocks_are_named_by_minimum():
    uf = UnionFind("abcde")
    uf.union("e", "b")
    uf.union("c", "d")
    partition = PartitionOfSet.from_union_find(uf)
    assert partition.blocks() == {"a": ["a"], "b": ["b", "e"], "c": ["c", "d"]}
    assert partition.block_sizes() == [1, 2, 2]
    assert partition.same_block("e", "b") and not partition.same_block("a", "b")
    assert len(partition) == 3


def test_find_orbits_of_a_rotation():
    orbits = find_orbits([1], range(12), lambda g, x: (x + 4 * g) % 12)
    assert orbits.block_count() == 4


def test_alpha_generators():
    gens = alpha_generators(2, 3)
    assert len(gens) == 9
    assert all(not any(g.beta) for g in gens)


@pytest.mark.parametrize("n, q", ORACLE_GROUPS)
def test_orbit_labels_against_closure(n, q):
    orbits = brute_coadjoint_orbits(n, q)
    blocks = orbits.blocks()
    labels = []
    for block in blocks.values():
        found = {classify(F) for F in block}
        assert len(found) == 1
        label = found.pop()
        assert len(block) == q ** label.dimension
        labels.append(label)
    assert len(set(labels)) == len(labels)
    assert sorted(labels) == list(enumerate_descriptors(n, q))
    census = {}
    for label in labels:
        census[label.dimension] = census.get(label.dimension, 0) + 1
    assert census == counts_by_dimension(n, q)


@pytest.mark.parametrize("n, q", ORACLE_GROUPS)
def test_class_labels_against_closure(n, q):
    classes = brute_conjugacy_classes(n, q)
    labels = []
    for block in classes.blocks().values():
        found = {class_of(g) for g in block}
        assert len(found) == 1
        label = found.pop()
        assert class_size(label) == len(block)
        labels.append(label)
    assert sorted(labels) == sorted(enumerate_classes(n, q))


@pytest.mark.parametrize("n, q", [(2, 3), (3, 2)])
def test_orbit_sums_give_the_characters(n, q):
    reps = [class_representative(c) for c in enumerate_classes(n, q)]
    for block in brute_coadjoint_orbits(n, q).blocks().values():
        descriptor = classify(block[0])
        values = brute_orbit_character(block, reps)
        assert all(values[g] == irreducible_value(descriptor, g) for g in reps)


def test_trace_character():
    d = list(enumerate_descriptors(3, 3))[-1]
    reps = [class_representative(c) for c in enumerate_classes(3, 3)]
    traces = trace_character(lambda g: irreducible_rep_matrix(d, g), reps)
    assert all(traces[g] == irreducible_value(d, g) for g in reps)


def test_oracle_budget():
    with pytest.raises(BudgetExceeded):
        brute_coadjoint_orbits(4, 3, budget=1000)
    with pytest.raises(BudgetExceeded):
        brute_conjugacy_classes(4, 3, budget=1000)


def test_induction_from_the_whole_group_and_the_identity():
    elements = list(enumerate_group(2, 2))
    one = lambda g: CycInt.one(2)
    trivial = brute_induce(2, 2, lambda g: True, one, elements)
    assert all(v == CycInt.one(2) for v in trivial.values())
    regular = brute_induce(2, 2, lambda g: g.is_identity(), one, elements)
    assert regular[elements[0]] == CycInt.integer(2, 8)
    assert all(regular[g].is_zero() for g in elements[1:])
