"""
Coadjoint orbits of G_n: canonical labels, enumeration and counting
"""
import itertools
import logging
import math
from dataclasses import dataclass
from typing import Dict, Iterator, Optional, Tuple

from classification.partitions import Composition, all_compositions
from models.errors import BudgetExceeded, OutOfRange, ParityViolation
from models.field import FieldElement, PrimeField, require_prime
from models.group import DEFAULT_MAX_GROUP_ORDER, group_order
from models.lie_algebra import CoadjointPoint, segment_invariant

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class OrbitDescriptor:
    """Partition read off the zeros of y, the y values, and one invariant per odd part"""
    n: int
    q: int
    partition: Composition
    y_values: Tuple[FieldElement, ...]
    odd_invariants: Tuple[Tuple[int, FieldElement], ...]

    @property
    def nu(self) -> int:
        return self.partition.nu

    @property
    def k(self) -> int:
        return (self.n - self.nu) // 2

    @property
    def dimension(self) -> int:
        return self.n - self.nu

    def invariant_map(self) -> Dict[int, FieldElement]:
        return dict(self.odd_invariants)

    def label(self) -> str:
        y = ",".join(str(v) for v in self.y_values)
        inv = ",".join(f"v{r}={v}" for r, v in self.odd_invariants)
        return f"[{self.partition}] y=({y}) {inv}".rstrip()

    def to_dict(self) -> dict:
        return {
            "partition": list(self.partition.parts),
            "y": [v.value for v in self.y_values],
            "invariants": [[r, v.value] for r, v in self.odd_invariants],
            "dimension": self.dimension,
        }


def partition_of_y(y: Tuple[FieldElement, ...]) -> Composition:
    n = len(y) + 1
    return Composition.from_dividers(n, [j for j in range(1, n) if not y[j - 1]])


def classify(point: CoadjointPoint) -> OrbitDescriptor:
    partition = partition_of_y(point.y)
    invariants = []
    for r, (lo, hi) in enumerate(partition.segments()):
        if (hi - lo) % 2 == 1:
            invariants.append((r, segment_invariant(point, lo, hi)))
    return OrbitDescriptor(point.n, point.q, partition, point.y, tuple(invariants))


def dimension(descriptor: OrbitDescriptor) -> int:
    return descriptor.dimension


def orbit_size(descriptor: OrbitDescriptor) -> int:
    return descriptor.q ** descriptor.dimension


def representative(descriptor: OrbitDescriptor) -> CoadjointPoint:
    """x zero except the leading coordinate of each odd segment, x_{lo+1} = v / (y_{lo+2} y_{lo+4} ...)"""
    field = PrimeField(descriptor.q)
    y = descriptor.y_values
    x = list(field.zeros(descriptor.n))
    values = descriptor.invariant_map()
    for r, (lo, hi) in enumerate(descriptor.partition.segments()):
        if r not in values:
            continue
        scale = field.one()
        for j in range(2, hi - lo, 2):
            scale = scale * y[lo + j - 1]
        x[lo] = values[r] / scale
    return CoadjointPoint(tuple(x), y)


def _descriptors_for(partition: Composition, field: PrimeField) -> Iterator[OrbitDescriptor]:
    n = partition.n
    breaks = partition.dividers
    zero = field.zero()
    nonzero = tuple(field.nonzero())
    choices = [(zero,) if j in breaks else nonzero for j in range(1, n)]
    odd_parts = [r for r, j in enumerate(partition.parts) if j % 2 == 1]
    values = tuple(field.elements())
    for y in itertools.product(*choices):
        for vs in itertools.product(values, repeat=len(odd_parts)):
            yield OrbitDescriptor(n, field.p, partition, tuple(y), tuple(zip(odd_parts, vs)))


def enumerate_descriptors(n: int, q: int, budget: Optional[int] = None) -> Iterator[OrbitDescriptor]:
    """Each orbit exactly once: partitions in lexicographic order, then y, then invariants"""
    field = PrimeField(q)
    budget = DEFAULT_MAX_GROUP_ORDER if budget is None else budget
    if group_order(n, q) > budget:
        raise BudgetExceeded(f"orbits of G_{n}(F_{q})", group_order(n, q), budget)
    for partition in sorted(all_compositions(n)):
        logger.debug("enumerating orbits with partition %s", partition)
        yield from _descriptors_for(partition, field)


def count_for_partition(partition: Composition, q: int) -> int:
    """(q-1)^(n-1-m) q^nu"""
    return (q - 1) ** (partition.n - 1 - partition.m) * q ** partition.nu


def binomial(a: int, b: int) -> int:
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def count_by_dimension(n: int, q: int, k: int) -> int:
    """Number of orbits of dimension 2k"""
    require_prime(q)
    if not 0 <= k <= n // 2:
        raise OutOfRange(f"k={k} outside 0..{n // 2}")
    return q ** (n - k - 1) * (q - 1) ** k * (
        binomial(n - k - 1, k) * q + binomial(n - k - 1, k - 1)
    )


def counts_by_dimension(n: int, q: int) -> Dict[int, int]:
    """Closed-form census keyed by orbit dimension 2k"""
    return {2 * k: count_by_dimension(n, q, k) for k in range(n // 2 + 1)}


def enumerated_counts_by_dimension(n: int, q: int, budget: Optional[int] = None) -> Dict[int, int]:
    census: Dict[int, int] = {}
    for descriptor in enumerate_descriptors(n, q, budget):
        census[descriptor.dimension] = census.get(descriptor.dimension, 0) + 1
    return census


def count_partitions_even_odd(n: int, mu: int, nu: int) -> int:
    """Compositions of n with mu even and nu odd parts"""
    if mu < 0 or nu < 0 or n < 2 * mu + nu or (n - nu) % 2 != 0:
        raise ParityViolation(f"no composition of {n} has {mu} even and {nu} odd parts")
    if mu + nu == 0:
        return 1 if n == 0 else 0
    return binomial(mu + nu, mu) * binomial((n + nu) // 2 - 1, mu + nu - 1)


def count_partitions_even_odd_direct(n: int, mu: int, nu: int) -> int:
    return sum(1 for c in all_compositions(n) if c.mu == mu and c.nu == nu)


def total_orbits(n: int, q: int) -> int:
    return sum(counts_by_dimension(n, q).values())
