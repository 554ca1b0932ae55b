"""
Combinatorial classification of coadjoint orbits and conjugacy classes
"""

from .partitions import Composition, Flock, PartitionType, SparseSequence, all_compositions, flock_of
from .orbits import OrbitDescriptor, classify, count_by_dimension, enumerate_descriptors
from .classes import ClassDescriptor, class_of, count_classes_by_strings, count_classes_recursive

__all__ = [
    "Composition",
    "Flock",
    "PartitionType",
    "SparseSequence",
    "all_compositions",
    "flock_of",
    "OrbitDescriptor",
    "classify",
    "count_by_dimension",
    "enumerate_descriptors",
    "ClassDescriptor",
    "class_of",
    "count_classes_by_strings",
    "count_classes_recursive",
]
