"""
Irreducible representations of G_n from coadjoint orbits: basic representations, characters, tables
"""
import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache, partial
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from classification.classes import ClassDescriptor, class_of, class_representative, class_size, enumerate_classes
from classification.orbits import OrbitDescriptor, binomial, count_by_dimension, enumerate_descriptors, representative
from classification.partitions import Composition
from models.cyclotomic import CycInt, ExactRational, cyc_sum, hermitian_inner
from models.errors import DimensionMismatch, NotBasicOrbit, ShapeMismatch
from models.field import PrimeField
from models.group import GroupElement, group_order

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _zeta(p: int, exponent: int) -> CycInt:
    return CycInt.zeta_power(p, exponent)


@dataclass(frozen=True)
class MonomialMatrix:
    """Square matrix with one nonzero per row: row t has coefficient rows[t][1] in column rows[t][0]"""
    p: int
    rows: Tuple[Tuple[int, CycInt], ...]

    @property
    def dim(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, p: int, dim: int) -> "MonomialMatrix":
        one = CycInt.one(p)
        return cls(p, tuple((t, one) for t in range(dim)))

    def __matmul__(self, other: "MonomialMatrix") -> "MonomialMatrix":
        if self.dim != other.dim:
            raise DimensionMismatch(f"{self.dim} vs {other.dim}")
        out = []
        for target, coeff in self.rows:
            final, coeff2 = other.rows[target]
            out.append((final, coeff * coeff2))
        return MonomialMatrix(self.p, tuple(out))

    def tensor(self, other: "MonomialMatrix") -> "MonomialMatrix":
        """Kronecker product; row (i, j) maps to index i * other.dim + j"""
        out = []
        for ti, ci in self.rows:
            for tj, cj in other.rows:
                out.append((ti * other.dim + tj, ci * cj))
        return MonomialMatrix(self.p, tuple(out))

    def trace(self) -> CycInt:
        return cyc_sum([c for t, (target, c) in enumerate(self.rows) if target == t], self.p)

    def entry(self, row: int, col: int) -> CycInt:
        target, coeff = self.rows[row]
        return coeff if target == col else CycInt.zero(self.p)

    def is_identity(self) -> bool:
        one = CycInt.one(self.p)
        return all(target == t and coeff == one for t, (target, coeff) in enumerate(self.rows))

    def is_monomial(self) -> bool:
        targets = [target for target, _ in self.rows]
        return sorted(targets) == list(range(self.dim)) and all(not c.is_zero() for _, c in self.rows)


@dataclass(frozen=True)
class BasicRepresentation:
    """Representation attached to an orbit whose y's are all nonzero.

    Polarization H = {alpha_2 = alpha_4 = ... = 0}, transversal s(t) with alpha at even
    positions equal to t, so the space is functions of t in F_q^floor(n/2).
    """
    orbit: OrbitDescriptor

    def __post_init__(self):
        if len(self.orbit.partition.parts) != 1:
            raise NotBasicOrbit(f"partition {self.orbit.partition} has more than one part")

    @property
    def n(self) -> int:
        return self.orbit.n

    @property
    def q(self) -> int:
        return self.orbit.q

    @property
    def t_positions(self) -> Tuple[int, ...]:
        """0-based indices of the even 1-based alpha coordinates"""
        return tuple(range(1, self.n, 2))

    @property
    def dim(self) -> int:
        return self.q ** (self.n // 2)

    @property
    def invariant(self) -> Optional[int]:
        values = self.orbit.invariant_map()
        return values[0].value if values else None

    @cached_property
    def point(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        """Integer coordinates (x, y) of the canonical orbit representative"""
        F = representative(self.orbit)
        return tuple(v.value for v in F.x), tuple(v.value for v in F.y)

    @cached_property
    def t_index(self) -> Dict[Tuple[int, ...], int]:
        return {t: i for i, t in enumerate(itertools.product(range(self.q), repeat=len(self.t_positions)))}


def _basic_rows(rep: BasicRepresentation, g: GroupElement) -> Tuple[Tuple[int, CycInt], ...]:
    n, p = rep.n, rep.q
    if g.n != n or g.q != p:
        raise ShapeMismatch(f"G_{g.n}(F_{g.q}) element for a representation of G_{n}(F_{p})")
    x, y = rep.point
    alpha = [v.value for v in g.alpha]
    beta = [v.value for v in g.beta]
    positions = rep.t_positions
    index = rep.t_index
    odd_part = sum(x[i] * alpha[i] for i in range(0, n, 2))
    rows = []
    for t_values in index:
        t = [0] * (n + 1)
        t2 = [0] * (n + 1)
        for pos, value in zip(positions, t_values):
            t[pos] = value
            t2[pos] = (value + alpha[pos]) % p
        # h' = s(t) g s(t')^-1 lies in H; rho(h') = e(F(h'))
        exponent = odd_part
        for i in range(n - 1):
            if i % 2 == 0:
                exponent += y[i] * (beta[i] - alpha[i] * t2[i + 1])
            else:
                exponent += y[i] * (beta[i] + t[i] * alpha[i + 1])
        target = index[tuple(t2[pos] for pos in positions)]
        rows.append((target, _zeta(p, exponent % p)))
    return tuple(rows)


def basic_rep_matrix(rep: BasicRepresentation, g: GroupElement) -> MonomialMatrix:
    return MonomialMatrix(rep.q, _basic_rows(rep, g))


def basic_character(rep: BasicRepresentation, g: GroupElement) -> CycInt:
    """q^#t e(F(g)) where every alpha_even vanishes and every
    gamma_j = y_j alpha_{j+1} - y_{j-1} alpha_{j-1} (j even) vanishes; 0 elsewhere."""
    n, p = rep.n, rep.q
    if g.n != n or g.q != p:
        raise ShapeMismatch(f"G_{g.n}(F_{g.q}) element for a representation of G_{n}(F_{p})")
    alpha = [v.value for v in g.alpha] + [0]
    beta = [v.value for v in g.beta]
    if any(alpha[i] for i in rep.t_positions):
        return CycInt.zero(p)
    x, y = rep.point
    y = list(y) + [0]
    for i in rep.t_positions:
        if (y[i] * alpha[i + 1] - y[i - 1] * alpha[i - 1]) % p:
            return CycInt.zero(p)
    exponent = sum(xi * ai for xi, ai in zip(x, alpha)) + sum(yi * bi for yi, bi in zip(y, beta))
    return _zeta(p, exponent % p) * rep.dim


def project(g: GroupElement, partition: Composition) -> List[GroupElement]:
    """Component r keeps alpha and beta strictly inside part r; beta at the breaks is dropped"""
    if partition.n != g.n:
        raise ShapeMismatch(f"composition of {partition.n} applied to G_{g.n}")
    return [GroupElement(g.alpha[lo:hi], g.beta[lo:hi - 1]) for lo, hi in partition.segments()]


def component_orbits(descriptor: OrbitDescriptor) -> List[OrbitDescriptor]:
    values = descriptor.invariant_map()
    parts = []
    for r, ((lo, hi), j) in enumerate(zip(descriptor.partition.segments(), descriptor.partition.parts)):
        invariants = ((0, values[r]),) if r in values else ()
        parts.append(OrbitDescriptor(j, descriptor.q, Composition((j,)), descriptor.y_values[lo:hi - 1], invariants))
    return parts


def component_representations(descriptor: OrbitDescriptor) -> List[BasicRepresentation]:
    return [BasicRepresentation(d) for d in component_orbits(descriptor)]


def irreducible_value(descriptor: OrbitDescriptor, g: GroupElement) -> CycInt:
    value = CycInt.one(descriptor.q)
    for rep, part in zip(component_representations(descriptor), project(g, descriptor.partition)):
        value = value * basic_character(rep, part)
        if value.is_zero():
            break
    return value


def irreducible_rep_matrix(descriptor: OrbitDescriptor, g: GroupElement) -> MonomialMatrix:
    """Tensor product, in segment order, of the basic representations of the components"""
    result = MonomialMatrix.identity(descriptor.q, 1)
    for rep, part in zip(component_representations(descriptor), project(g, descriptor.partition)):
        result = result.tensor(basic_rep_matrix(rep, part))
    return result


@dataclass
class Character:
    """Class function stored on class descriptors"""
    n: int
    q: int
    dim: int
    values: Dict[ClassDescriptor, CycInt]
    label: str = ""

    def __call__(self, g: GroupElement) -> CycInt:
        return self.values[class_of(g)]

    def to_dict(self) -> dict:
        return {"label": self.label, "dim": self.dim, "values": [v.to_dict() for v in self.values.values()]}


def class_function(
    n: int,
    q: int,
    fn: Callable[[GroupElement], CycInt],
    classes: Sequence[ClassDescriptor],
    label: str = "",
) -> Character:
    values = {c: fn(class_representative(c)) for c in classes}
    identity = next(c for c in classes if not any(c.a) and not any(c.b_coset))
    return Character(n, q, values[identity].rational_part(), values, label)


def irreducible_character(
    descriptor: OrbitDescriptor,
    classes: Optional[Sequence[ClassDescriptor]] = None,
    budget: Optional[int] = None,
) -> Character:
    if classes is None:
        classes = list(enumerate_classes(descriptor.n, descriptor.q, budget))
    return class_function(
        descriptor.n,
        descriptor.q,
        lambda g: irreducible_value(descriptor, g),
        classes,
        descriptor.label(),
    )


def irreducible_dimension(descriptor: OrbitDescriptor) -> int:
    return descriptor.q ** descriptor.k


@dataclass
class CharacterTable:
    """Rows are irreducibles in descriptor order, columns are classes in canonical order"""
    n: int
    q: int
    descriptors: List[OrbitDescriptor]
    classes: List[ClassDescriptor]
    class_sizes: List[int]
    rows: List[List[CycInt]]

    @property
    def order(self) -> int:
        return group_order(self.n, self.q)

    def character(self, i: int) -> Character:
        values = dict(zip(self.classes, self.rows[i]))
        dim = self.rows[i][self._identity_column()].rational_part()
        return Character(self.n, self.q, dim, values, self.descriptors[i].label())

    def characters(self) -> List[Character]:
        return [self.character(i) for i in range(len(self.rows))]

    def _identity_column(self) -> int:
        return next(j for j, c in enumerate(self.classes) if not any(c.a) and not any(c.b_coset))

    def dimensions(self) -> List[int]:
        column = self._identity_column()
        return [row[column].rational_part() for row in self.rows]

    def get_table_summary(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "irreducibles": len(self.rows),
            "classes": len(self.classes),
            "dimension_square_sum": sum(d * d for d in self.dimensions()),
            "group_order": self.order,
        }

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "classes": [dict(c.to_dict(), size=s) for c, s in zip(self.classes, self.class_sizes)],
            "rows": [
                {"orbit": d.to_dict(), "values": [list(v.coeffs) for v in row]}
                for d, row in zip(self.descriptors, self.rows)
            ],
        }


def _character_row(descriptor: OrbitDescriptor, reps: Sequence[GroupElement]) -> List[CycInt]:
    return [irreducible_value(descriptor, g) for g in reps]


def character_table(n: int, q: int, jobs: int = 1, budget: Optional[int] = None) -> CharacterTable:
    classes = list(enumerate_classes(n, q, budget))
    sizes = [class_size(c) for c in classes]
    reps = [class_representative(c) for c in classes]
    descriptors = list(enumerate_descriptors(n, q, budget))
    logger.info("character table of G_%d(F_%d): %d irreducibles x %d classes", n, q, len(descriptors), len(classes))

    row = partial(_character_row, reps=reps)
    if jobs <= 1:
        rows = [row(d) for d in descriptors]
    else:
        chunksize = max(1, len(descriptors) // (4 * jobs))
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            rows = list(executor.map(row, descriptors, chunksize=chunksize))
    return CharacterTable(n, q, descriptors, classes, sizes, rows)


@dataclass
class OrthogonalityReport:
    row_failures: List[Tuple[int, int, ExactRational]] = field(default_factory=list)
    column_failures: List[Tuple[int, int, str]] = field(default_factory=list)
    rows_checked: int = 0
    columns_checked: int = 0

    @property
    def passed(self) -> bool:
        return not self.row_failures and not self.column_failures

    def get_report_summary(self) -> dict:
        return {
            "passed": self.passed,
            "rows_checked": self.rows_checked,
            "columns_checked": self.columns_checked,
            "row_failures": [[i, j, str(v)] for i, j, v in self.row_failures],
            "column_failures": [list(f) for f in self.column_failures],
        }


def orthogonality_report(table: CharacterTable) -> OrthogonalityReport:
    report = OrthogonalityReport()
    order = table.order
    rows = table.rows
    for i in range(len(rows)):
        for j in range(i, len(rows)):
            value = hermitian_inner(rows[i], rows[j], order, table.class_sizes)
            report.rows_checked += 1
            if value != (1 if i == j else 0):
                report.row_failures.append((i, j, value))

    p = table.q
    for c in range(len(table.classes)):
        for c2 in range(c, len(table.classes)):
            total = cyc_sum([row[c] * row[c2].conj() for row in rows], p)
            expected = order // table.class_sizes[c] if c == c2 else 0
            report.columns_checked += 1
            if not total.is_rational() or total.rational_part() != expected:
                report.column_failures.append((c, c2, str(total)))
    return report


def completeness_polynomial(i: int, q: int) -> int:
    """P_i = sum_k q^(i+k) (q-1)^k C(i-k-1, k), with P_0 = 0"""
    if i <= 0:
        return 0
    total = 0
    for k in range(i):
        if i - k - 1 >= k:
            total += q ** (i + k) * (q - 1) ** k * binomial(i - k - 1, k)
    return total


@dataclass
class CompletenessReport:
    n: int
    q: int
    dimension_square_sum: int
    group_order: int
    recursion_holds: bool
    polynomial_sum: int

    @property
    def passed(self) -> bool:
        return (
            self.dimension_square_sum == self.group_order
            and self.recursion_holds
            and self.polynomial_sum == self.group_order
        )

    def get_report_summary(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "dimension_square_sum": self.dimension_square_sum,
            "group_order": self.group_order,
            "recursion_holds": self.recursion_holds,
            "polynomial_sum": self.polynomial_sum,
            "passed": self.passed,
        }


def completeness_check(n: int, q: int) -> CompletenessReport:
    """Sum over orbit dimensions of (count * q^2k) against q^(2n-1), plus the P_i recursion"""
    PrimeField(q)
    square_sum = sum(count_by_dimension(n, q, k) * q ** (2 * k) for k in range(n // 2 + 1))
    values = [completeness_polynomial(i, q) for i in range(n + 1)]
    recursion = all(
        values[i] == q * values[i - 1] + q ** 3 * (q - 1) * values[i - 2] for i in range(3, n + 1)
    ) and values[1] == q and (n < 2 or values[2] == q * q)
    polynomial_sum = values[n] + q * (q - 1) * values[n - 1]
    return CompletenessReport(n, q, square_sum, group_order(n, q), recursion, polynomial_sum)


def inner_product(first: Character, second: Character) -> Fraction:
    classes = list(first.values)
    sizes = [class_size(c) for c in classes]
    return hermitian_inner(
        [first.values[c] for c in classes],
        [second.values[c] for c in classes],
        group_order(first.n, first.q),
        sizes,
    )
