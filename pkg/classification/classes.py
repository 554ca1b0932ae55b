"""
Conjugacy classes of G_n: a-invariants, b-invariants and class counts by dot strings
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from models.errors import BudgetExceeded, OutOfRange
from models.field import FieldElement, FqMatrix, PrimeField, image_and_coset
from models.group import DEFAULT_MAX_GROUP_ORDER, GroupElement, group_order

logger = logging.getLogger(__name__)

DEFAULT_MAX_DOT_STRINGS = 2 ** 16


def shift_matrix(a: Tuple[FieldElement, ...]) -> FqMatrix:
    """Matrix of alpha -> (alpha_i a_{i+1} - alpha_{i+1} a_i)_i, the shifts b can undergo under conjugation"""
    n = len(a)
    q = a[0].modulus
    rows = []
    for i in range(n - 1):
        row = [0] * n
        row[i] = a[i + 1].value
        row[i + 1] = -a[i].value
        rows.append(row)
    return FqMatrix(n - 1, n, rows, q)


@dataclass(frozen=True, order=True)
class ClassDescriptor:
    """a and the canonical representative of b modulo the shift image"""
    n: int
    q: int
    a: Tuple[FieldElement, ...]
    b_coset: Tuple[FieldElement, ...]

    @property
    def support(self) -> Tuple[int, ...]:
        """1-based positions with a_i != 0"""
        return tuple(i for i, x in enumerate(self.a, start=1) if x)

    def label(self) -> str:
        a = ",".join(str(x) for x in self.a)
        b = ",".join(str(x) for x in self.b_coset)
        return f"a=({a}) b=({b})"

    def to_dict(self) -> dict:
        return {"a": [x.value for x in self.a], "b": [x.value for x in self.b_coset]}


def class_of(g: GroupElement) -> ClassDescriptor:
    if g.n == 1:
        return ClassDescriptor(1, g.q, g.alpha, ())
    _, rep = image_and_coset(shift_matrix(g.alpha), g.beta)
    return ClassDescriptor(g.n, g.q, g.alpha, rep)


def class_rank(a: Tuple[FieldElement, ...]) -> int:
    if len(a) == 1:
        return 0
    return shift_matrix(a).rank()


def class_size(descriptor: ClassDescriptor) -> int:
    return descriptor.q ** class_rank(descriptor.a)


def class_representative(descriptor: ClassDescriptor) -> GroupElement:
    return GroupElement(descriptor.a, descriptor.b_coset)


def free_coordinates(a: Tuple[FieldElement, ...]) -> List[int]:
    """0-based b coordinates left free by the canonical coset representative"""
    n = len(a)
    if n == 1:
        return []
    zeros = PrimeField(a[0].modulus).zeros(n - 1)
    basis, _ = image_and_coset(shift_matrix(a), zeros)
    pivots = {next(j for j, x in enumerate(row) if x) for row in basis}
    return [j for j in range(n - 1) if j not in pivots]


def enumerate_classes(n: int, q: int, budget: Optional[int] = None) -> Iterator[ClassDescriptor]:
    """Every class once: a in lexicographic order, then canonical b representatives"""
    budget = DEFAULT_MAX_GROUP_ORDER if budget is None else budget
    if group_order(n, q) > budget:
        raise BudgetExceeded(f"classes of G_{n}(F_{q})", group_order(n, q), budget)
    f = PrimeField(q)
    elements = tuple(f.elements())
    zero = f.zero()
    for a in itertools.product(elements, repeat=n):
        free = free_coordinates(a)
        for values in itertools.product(elements, repeat=len(free)):
            b = [zero] * (n - 1)
            for j, v in zip(free, values):
                b[j] = v
            yield ClassDescriptor(n, q, tuple(a), tuple(b))


# Named b-invariants

@dataclass(frozen=True)
class BInvariant:
    """Linear functional on b that is constant on a conjugacy class; index is its leading b-index"""
    index: int
    label: str
    value: FieldElement


def _zero_runs(a: Tuple[FieldElement, ...]) -> List[Tuple[int, int]]:
    """Maximal runs [s, e] (1-based) of zero a's"""
    runs = []
    start = None
    for i, x in enumerate(a, start=1):
        if not x and start is None:
            start = i
        elif x and start is not None:
            runs.append((start, i - 1))
            start = None
    if start is not None:
        runs.append((start, len(a)))
    return runs


def b_invariants(g: GroupElement) -> List[BInvariant]:
    """An isolated interior zero a_i gives b_{i-1} a_{i+1} + b_i a_{i-1};
    any other zero run a_s..a_e gives b_s..b_{e-1}."""
    n = g.n
    a, b = g.alpha, g.beta
    found: List[BInvariant] = []
    for s, e in _zero_runs(a):
        if s == e and 1 < s < n:
            i = s
            value = b[i - 2] * a[i] + b[i - 1] * a[i - 2]
            found.append(BInvariant(i - 1, f"b{i - 1}*a{i + 1}+b{i}*a{i - 1}", value))
        else:
            for j in range(s, e):
                found.append(BInvariant(j, f"b{j}", b[j - 1]))
    return sorted(found, key=lambda inv: inv.index)


def named_invariants(g: GroupElement) -> List[Tuple[str, FieldElement]]:
    return [(inv.label, inv.value) for inv in b_invariants(g)]


# Dot strings

@dataclass(frozen=True, order=True)
class DotString:
    """Zero pattern of a: True marks a heavy dot (a_i != 0)"""
    pattern: Tuple[bool, ...]

    @property
    def n(self) -> int:
        return len(self.pattern)

    @property
    def m(self) -> int:
        return sum(self.pattern)

    def ell(self, q: int = 2) -> int:
        """Number of b-invariants, n - 1 - rank of the shift matrix"""
        f = PrimeField(q)
        a = tuple(f.one() if heavy else f.zero() for heavy in self.pattern)
        return self.n - 1 - class_rank(a)

    def k(self, q: int = 2) -> int:
        return self.n - 1 - self.ell(q)

    def __str__(self) -> str:
        return "".join("•" if heavy else "∘" for heavy in self.pattern)


@dataclass
class ClassCountTable:
    """d_n^o(k) (a_1 = 0), d_n^*(k) (a_1 != 0) and their sum d_n(k)"""
    n: int
    q: int
    empty_first: Dict[int, int] = field(default_factory=dict)
    heavy_first: Dict[int, int] = field(default_factory=dict)

    def total(self, k: int) -> int:
        return self.empty_first.get(k, 0) + self.heavy_first.get(k, 0)

    def totals(self) -> Dict[int, int]:
        return {k: self.total(k) for k in range(self.n)}

    def class_count(self) -> int:
        return sum(self.totals().values())

    def get_table_summary(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "empty_first": {str(k): self.empty_first.get(k, 0) for k in range(self.n)},
            "heavy_first": {str(k): self.heavy_first.get(k, 0) for k in range(self.n)},
            "total": {str(k): v for k, v in self.totals().items()},
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassCountTable):
            return NotImplemented
        keys = range(max(self.n, other.n))
        return (
            self.n == other.n
            and self.q == other.q
            and all(self.empty_first.get(k, 0) == other.empty_first.get(k, 0) for k in keys)
            and all(self.heavy_first.get(k, 0) == other.heavy_first.get(k, 0) for k in keys)
        )


def count_classes_by_strings(n: int, q: int, budget: Optional[int] = None) -> ClassCountTable:
    """Each dot string contributes (q-1)^m q^ell classes of dimension k = n - 1 - ell"""
    PrimeField(q)
    if n < 1:
        raise OutOfRange(f"n must be positive, got {n}")
    budget = DEFAULT_MAX_DOT_STRINGS if budget is None else budget
    if 2 ** n > budget:
        raise BudgetExceeded(f"dot strings of length {n}", 2 ** n, budget)
    table = ClassCountTable(n, q)
    for pattern in itertools.product((False, True), repeat=n):
        dots = DotString(pattern)
        ell = dots.ell(q)
        k = n - 1 - ell
        target = table.heavy_first if pattern[0] else table.empty_first
        target[k] = target.get(k, 0) + (q - 1) ** dots.m * q ** ell
    return table


def count_classes_recursive(n: int, q: int) -> ClassCountTable:
    """Recursion over the first one or two dots, seeded by direct counts at n = 2, 3"""
    if n < 2:
        raise OutOfRange(f"the recursion starts at n = 2, got {n}")
    tables = {2: count_classes_by_strings(2, q), 3: count_classes_by_strings(3, q)}
    for size in range(4, n + 1):
        prev, prev2 = tables[size - 1], tables[size - 2]
        table = ClassCountTable(size, q)
        for k in range(size):
            table.empty_first[k] = prev.heavy_first.get(k - 1, 0) + q * prev.empty_first.get(k, 0)
            table.heavy_first[k] = (q - 1) * prev.heavy_first.get(k - 1, 0) + q * (q - 1) * prev2.total(k - 1)
        tables[size] = table
        logger.debug("class counts for n=%d: %s", size, table.totals())
    return tables[n]
