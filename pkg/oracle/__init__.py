"""
Independent brute-force ground truth for orbits, classes and induced characters
"""

from .union_find import PartitionOfSet, UnionFind, find_orbits
from .brute_force import (
    brute_conjugacy_classes,
    brute_coadjoint_orbits,
    brute_induce,
    brute_orbit_character,
    trace_character,
)

__all__ = [
    "PartitionOfSet",
    "UnionFind",
    "find_orbits",
    "brute_conjugacy_classes",
    "brute_coadjoint_orbits",
    "brute_induce",
    "brute_orbit_character",
    "trace_character",
]
