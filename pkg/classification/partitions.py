"""
Ordered partitions (compositions), their types, flocks and sparse sequences
"""
import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Callable, FrozenSet, Iterable, Iterator, List, Sequence, Tuple, Union

from models.errors import NotComparable, OutOfRange, ShapeMismatch, TypeMismatch


class PartitionType(Enum):
    EVEN = "even"
    ODD = "odd"
    BOTH = "both"


@dataclass(frozen=True, order=True)
class Composition:
    """Ordered partition n = j_0 + j_1 + ... + j_m"""
    parts: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(j) for j in self.parts))
        if not self.parts or any(j < 1 for j in self.parts):
            raise OutOfRange(f"composition parts must be positive: {self.parts}")

    @classmethod
    def from_dividers(cls, n: int, dividers: Iterable[int]) -> "Composition":
        cuts = [0] + sorted(dividers) + [n]
        return cls(tuple(b - a for a, b in zip(cuts, cuts[1:])))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def m(self) -> int:
        """Number of breaks"""
        return len(self.parts) - 1

    @property
    def mu(self) -> int:
        return sum(1 for j in self.parts if j % 2 == 0)

    @property
    def nu(self) -> int:
        return sum(1 for j in self.parts if j % 2 == 1)

    @property
    def k(self) -> int:
        """Half the dimension of the orbits with this partition"""
        return (self.n - self.nu) // 2

    @property
    def dividers(self) -> FrozenSet[int]:
        """Positions j (1 <= j < n) with a break between coordinate j and j+1"""
        return frozenset(itertools.accumulate(self.parts[:-1]))

    def segments(self) -> List[Tuple[int, int]]:
        """(lo, hi) per part: the part covers coordinates lo+1..hi"""
        bounds = [0] + list(itertools.accumulate(self.parts))
        return list(zip(bounds, bounds[1:]))

    def is_all_ones(self) -> bool:
        return all(j == 1 for j in self.parts)

    def __str__(self) -> str:
        return "+".join(str(j) for j in self.parts)


def all_compositions(n: int) -> List[Composition]:
    """The 2^(n-1) compositions of n, in divider-mask order (mask 0 is the single part n)"""
    if n < 1:
        raise OutOfRange(f"n must be positive, got {n}")
    result = []
    for mask in range(2 ** (n - 1)):
        dividers = [j for j in range(1, n) if mask >> (j - 1) & 1]
        result.append(Composition.from_dividers(n, dividers))
    return result


def preceq(first: Composition, second: Composition) -> bool:
    """first is coarser than (or equal to) second"""
    if first.n != second.n:
        raise ShapeMismatch(f"compositions of {first.n} and {second.n}")
    return first.dividers <= second.dividers


def interval(head: Composition, tail: Composition) -> List[Composition]:
    if not preceq(head, tail):
        raise NotComparable(f"{head} is not below {tail}")
    base = head.dividers
    extra = sorted(tail.dividers - base)
    members = []
    for mask in range(2 ** len(extra)):
        chosen = [d for i, d in enumerate(extra) if mask >> i & 1]
        members.append(Composition.from_dividers(head.n, base.union(chosen)))
    return members


def type_of(partition: Composition) -> PartitionType:
    """Decided by the parity of the first part different from 1"""
    for j in partition.parts:
        if j != 1:
            return PartitionType.EVEN if j % 2 == 0 else PartitionType.ODD
    return PartitionType.BOTH


def has_type(partition: Composition, kind: PartitionType) -> bool:
    found = type_of(partition)
    return found is PartitionType.BOTH or found is kind


def q_even(n: int) -> int:
    if n < 1:
        raise OutOfRange(f"n must be positive, got {n}")
    return (2 ** n + 2) // 3 if n % 2 == 0 else (2 ** n + 1) // 3


def q_odd(n: int) -> int:
    if n < 1:
        raise OutOfRange(f"n must be positive, got {n}")
    return (2 ** (n - 1) + 1) // 3 if n % 2 == 0 else (2 ** (n - 1) + 2) // 3


def fibonacci(n: int) -> int:
    if n < 0:
        raise OutOfRange(f"Fibonacci index must be non-negative, got {n}")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def compositions_with_parts(n: int, allowed: Callable[[int], bool]) -> Iterator[Tuple[int, ...]]:
    """Compositions of n whose parts all satisfy allowed, generated recursively"""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        if allowed(first):
            for rest in compositions_with_parts(n - first, allowed):
                yield (first,) + rest


def count_ones_twos(n: int) -> int:
    """Compositions of n into 1's and 2's"""
    return fibonacci(n + 1)


def count_all_odd(n: int) -> int:
    """Compositions of n into odd parts"""
    return fibonacci(n)


# Flocks

@dataclass(frozen=True)
class Flock:
    """Interval [head, tail] of compositions of one type sharing nu"""
    head: Composition
    tail: Composition
    kind: PartitionType
    dotted_dividers: FrozenSet[int]

    @property
    def n(self) -> int:
        return self.head.n

    @property
    def k(self) -> int:
        return self.head.k

    def members(self) -> List[Composition]:
        return interval(self.head, self.tail)

    def __str__(self) -> str:
        return f"{self.kind.value} flock [{self.head}, {self.tail}]"


@dataclass(frozen=True)
class FlockLayout:
    """Slot picture of a flock: alpha positions carrying x's and the three kinds of beta slots"""
    overlined_alpha: Tuple[int, ...]
    solid: Tuple[int, ...]
    underlined: Tuple[int, ...]
    plain: Tuple[int, ...]


def _is_head_shape(head: Composition, kind: PartitionType) -> bool:
    if head.is_all_ones():
        return True
    parts = list(head.parts)
    if kind is PartitionType.ODD:
        return all(j % 2 == 1 for j in parts)
    while parts and parts[0] == 1:
        parts.pop(0)
    return bool(parts) and parts[0] % 2 == 0 and all(j % 2 == 1 for j in parts[1:])


def flock_tail(head: Composition, kind: PartitionType) -> Composition:
    if kind is PartitionType.BOTH or not _is_head_shape(head, kind):
        raise TypeMismatch(f"{head} is not the head of an {kind.value} flock")
    tail: List[int] = []
    first_big = True
    for j in head.parts:
        if j % 2 == 0:
            tail.extend([2] * (j // 2))
        elif kind is PartitionType.ODD and first_big and j >= 3:
            tail.append(3)
            tail.extend([2] * ((j - 3) // 2))
            first_big = False
        else:
            tail.append(1)
            tail.extend([2] * ((j - 1) // 2))
    return Composition(tuple(tail))


def _make_flock(head: Composition, kind: PartitionType) -> Flock:
    tail = flock_tail(head, kind)
    return Flock(head, tail, kind, frozenset(tail.dividers - head.dividers))


def flock_of(partition: Composition, kind: PartitionType) -> Flock:
    """Merge every odd part with the even parts after it; even parts right after the
    leading 1's form one part of their own."""
    if kind is PartitionType.BOTH or not has_type(partition, kind):
        raise TypeMismatch(f"{partition} is not of the {kind.value} type")
    groups: List[int] = []
    seen_non_one = False
    for j in partition.parts:
        if j % 2 == 1:
            groups.append(j)
            seen_non_one = seen_non_one or j > 1
        elif not seen_non_one:
            groups.append(j)
            seen_non_one = True
        else:
            groups[-1] += j
    return _make_flock(Composition(tuple(groups)), kind)


def all_flocks(n: int, kind: PartitionType) -> List[Flock]:
    """Every flock of one type, the all-ones flock included, ordered by first member in divider-mask order"""
    seen = {}
    for partition in all_compositions(n):
        if has_type(partition, kind):
            flock = flock_of(partition, kind)
            seen.setdefault(flock.head, flock)
    return list(seen.values())


def flock_members(flock: Flock) -> List[Composition]:
    return flock.members()


def flock_layout(flock: Flock) -> FlockLayout:
    head, tail = flock.head, flock.tail
    overlined = tuple(lo + 1 for (lo, hi), j in zip(head.segments(), head.parts) if j % 2 == 1)
    plain = tuple(j for j in range(1, flock.n) if j not in tail.dividers)
    return FlockLayout(
        overlined_alpha=overlined,
        solid=tuple(sorted(head.dividers)),
        underlined=tuple(sorted(flock.dotted_dividers)),
        plain=plain,
    )


# Sparse sequences

@dataclass(frozen=True, order=True)
class SparseSequence:
    """Index set I in [1, n] with consecutive gaps of at least 2"""
    n: int
    indices: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(self.indices))
        if any(not 1 <= i <= self.n for i in self.indices):
            raise OutOfRange(f"{self.indices} not inside 1..{self.n}")
        if any(b - a < 2 for a, b in zip(self.indices, self.indices[1:])):
            raise OutOfRange(f"{self.indices} is not sparse")

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __contains__(self, i: int) -> bool:
        return i in self.indices

    def label(self) -> str:
        return "C(" + ",".join(str(i) for i in self.indices) + ")"

    def __str__(self) -> str:
        return self.label()


def sparse_sequences(n: int) -> List[SparseSequence]:
    """All sparse sequences of [1, n], by size and then lexicographically"""
    result = []
    for size in range(0, (n + 1) // 2 + 1):
        for combo in itertools.combinations(range(1, n + 1), size):
            if all(b - a >= 2 for a, b in zip(combo, combo[1:])):
                result.append(SparseSequence(n, combo))
    return result


def iminus_iplus(indices: Union[SparseSequence, Sequence[int]], n: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """I^- = neighbours of I inside [1, n]; I^+ = its complement"""
    chosen = set(indices)
    minus = sorted({j for i in chosen for j in (i - 1, i + 1) if 1 <= j <= n} - chosen)
    plus = [j for j in range(1, n + 1) if j not in minus]
    return tuple(minus), tuple(plus)


def container_of_flock(flock: Flock) -> SparseSequence:
    n = flock.n
    if flock.head.is_all_ones():
        return SparseSequence(n, (1,) if flock.kind is PartitionType.ODD else ())
    tail = flock.tail.parts
    if flock.kind is PartitionType.EVEN:
        twos = [i for i, j in enumerate(tail, start=1) if j == 2]
        return SparseSequence(n, tuple(i + s for s, i in enumerate(twos, start=1)))
    three = next(i for i, j in enumerate(tail, start=1) if j == 3)
    twos = [i for i, j in enumerate(tail, start=1) if j == 2]
    indices = [1, three + 2] + [i + s for s, i in enumerate(twos, start=3)]
    return SparseSequence(n, tuple(indices))
