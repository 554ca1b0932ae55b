"""
Gelfand model of G_n: containers, stabilizer characters, induction and the flock assignment
"""
import itertools
import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from classification.classes import (
    BInvariant,
    ClassDescriptor,
    free_coordinates,
    b_invariants,
    class_representative,
    enumerate_classes,
)
from classification.partitions import (
    Flock,
    PartitionType,
    SparseSequence,
    all_flocks,
    container_of_flock,
    flock_layout,
    iminus_iplus,
    sparse_sequences,
)
from models.cyclotomic import CycInt
from models.errors import BudgetExceeded, InvalidStabCharacter, ShapeMismatch, SlotCountMismatch
from models.field import FieldElement, PrimeField
from models.group import DEFAULT_MAX_GROUP_ORDER, GroupElement, group_order
from representations.orbit_method import (
    Character,
    CharacterTable,
    character_table,
    inner_product,
)

logger = logging.getLogger(__name__)


@dataclass
class Container:
    """All classes whose a-support is exactly the sparse sequence I; they share Stab(I)"""
    indices: SparseSequence
    iminus: Tuple[int, ...]
    iplus: Tuple[int, ...]
    q: int
    classes: List[ClassDescriptor] = field(default_factory=list)

    @property
    def n(self) -> int:
        return self.indices.n

    @property
    def label(self) -> str:
        return self.indices.label()

    def stabilizer_order(self) -> int:
        return self.q ** (self.n - 1 + len(self.iplus))

    def class_size(self) -> int:
        return self.q ** len(self.iminus)

    def expected_class_count(self) -> int:
        return (self.q - 1) ** len(self.indices) * self.q ** (len(self.iplus) - 1)

    def in_stabilizer(self, g: GroupElement) -> bool:
        return not any(g.alpha[j - 1] for j in self.iminus)

    def get_container_summary(self) -> dict:
        return {
            "container": self.label,
            "I-": list(self.iminus),
            "I+": list(self.iplus),
            "classes": len(self.classes),
            "class_size": self.class_size(),
            "stabilizer_order": self.stabilizer_order(),
        }


def _container_classes(indices: SparseSequence, q: int) -> List[ClassDescriptor]:
    n = indices.n
    f = PrimeField(q)
    zero = f.zero()
    choices = [tuple(f.nonzero()) if i in indices else (zero,) for i in range(1, n + 1)]
    elements = tuple(f.elements())
    found = []
    for a in itertools.product(*choices):
        free = free_coordinates(a)
        for values in itertools.product(elements, repeat=len(free)):
            b = [zero] * (n - 1)
            for j, v in zip(free, values):
                b[j] = v
            found.append(ClassDescriptor(n, q, tuple(a), tuple(b)))
    return found


def containers(n: int, q: int, budget: Optional[int] = None) -> List[Container]:
    budget = DEFAULT_MAX_GROUP_ORDER if budget is None else budget
    if group_order(n, q) > budget:
        raise BudgetExceeded(f"M-classes of G_{n}(F_{q})", group_order(n, q), budget)
    result = []
    for indices in sparse_sequences(n):
        minus, plus = iminus_iplus(indices, n)
        result.append(Container(indices, minus, plus, q, _container_classes(indices, q)))
    logger.debug("built %d containers for n=%d q=%d", len(result), n, q)
    return result


def m_classes(n: int, q: int, budget: Optional[int] = None) -> List[Tuple[Container, ClassDescriptor]]:
    """Classes with a_i a_{i+1} = 0 for all i, grouped by container"""
    return [(c, d) for c in containers(n, q, budget) for d in c.classes]


@dataclass(frozen=True)
class StabCharacter:
    """s = g(a; b) in Stab(I) maps to e(sum A_i a_i + sum B_j b_j)"""
    indices: SparseSequence
    A: Tuple[FieldElement, ...]
    B: Tuple[FieldElement, ...]

    def __post_init__(self):
        n = self.indices.n
        if len(self.A) != n or len(self.B) != n - 1:
            raise ShapeMismatch(f"A, B of lengths {len(self.A)}, {len(self.B)} for n={n}")
        minus, plus = iminus_iplus(self.indices, n)
        bad_a = [i for i in minus if self.A[i - 1]]
        if bad_a:
            raise InvalidStabCharacter(f"A nonzero at {bad_a} inside I- of {self.indices}")
        plus_set = set(plus)
        bad_b = [j for j in range(1, n) if j in plus_set and j + 1 in plus_set and self.B[j - 1]]
        if bad_b:
            raise InvalidStabCharacter(f"B nonzero at {bad_b} where Stab({self.indices}) is not abelian")

    @classmethod
    def trivial(cls, indices: SparseSequence, q: int) -> "StabCharacter":
        f = PrimeField(q)
        return cls(indices, f.zeros(indices.n), f.zeros(indices.n - 1))

    @property
    def q(self) -> int:
        return (self.A + self.B)[0].modulus

    def value(self, g: GroupElement) -> CycInt:
        exponent = sum(x.value * a.value for x, a in zip(self.A, g.alpha))
        exponent += sum(y.value * b.value for y, b in zip(self.B, g.beta))
        return CycInt.zeta_power(self.q, exponent)

    def to_dict(self) -> dict:
        return {"A": [v.value for v in self.A], "B": [v.value for v in self.B]}


def induced_value(chi: StabCharacter, g: GroupElement) -> CycInt:
    """q^|I-| chi(g) if a_j = 0 and B_{j-1} a_{j-1} = B_j a_{j+1} for every j in I-; 0 otherwise"""
    n = chi.indices.n
    if g.n != n:
        raise ShapeMismatch(f"G_{g.n} element for a character induced to G_{n}")
    q = chi.q
    a = [0] + [v.value for v in g.alpha] + [0]
    B = [0] + [v.value for v in chi.B] + [0]
    minus, _ = iminus_iplus(chi.indices, n)
    for j in minus:
        if a[j] or (B[j - 1] * a[j - 1] - B[j] * a[j + 1]) % q:
            return CycInt.zero(q)
    return chi.value(g) * q ** len(minus)


def induced_character(
    indices: SparseSequence,
    chi: StabCharacter,
    classes: Optional[Sequence[ClassDescriptor]] = None,
) -> Character:
    if chi.indices != indices:
        raise InvalidStabCharacter(f"character of Stab({chi.indices}) induced from Stab({indices})")
    n, q = indices.n, chi.q
    if classes is None:
        classes = list(enumerate_classes(n, q))
    values = {c: induced_value(chi, class_representative(c)) for c in classes}
    minus, _ = iminus_iplus(indices, n)
    return Character(n, q, q ** len(minus), values, f"Ind {indices.label()}")


# Flock-driven assignment

def flocks_by_container(n: int) -> Dict[SparseSequence, Flock]:
    mapping = {}
    for kind in (PartitionType.ODD, PartitionType.EVEN):
        for flock in all_flocks(n, kind):
            mapping[container_of_flock(flock)] = flock
    return mapping


def _all_ones_character(flock: Flock, container: Container, g: GroupElement) -> StabCharacter:
    n, q = container.n, container.q
    zero = PrimeField(q).zero()
    A = [zero] * n
    invariants = b_invariants(g)
    if flock.kind is PartitionType.ODD:
        A[0] = g.alpha[0]
        slots = list(range(3, n + 1))
    else:
        slots = list(range(2, n + 1))
    if len(invariants) != len(slots):
        raise SlotCountMismatch(
            f"{len(invariants)} b-invariants for {len(slots)} A slots in {container.label}"
        )
    for slot, inv in zip(slots, invariants):
        A[slot - 1] = inv.value
    return StabCharacter(container.indices, tuple(A), (zero,) * (n - 1))


def character_for_class(flock: Flock, container: Container, descriptor: ClassDescriptor) -> StabCharacter:
    """Plain beta slots take the a's on I; underlined slots take the b-invariant with that
    leading index; the remaining b-invariants fill the free A slots in ascending order."""
    g = class_representative(descriptor)
    if flock.head.is_all_ones():
        return _all_ones_character(flock, container, g)
    n, q = container.n, container.q
    zero = PrimeField(q).zero()
    layout = flock_layout(flock)
    I = container.indices

    B = [zero] * (n - 1)
    if len(layout.plain) != len(I):
        raise SlotCountMismatch(f"{len(layout.plain)} plain slots for {len(I)} a-invariants in {I}")
    for slot, i in zip(layout.plain, I):
        B[slot - 1] = g.alpha[i - 1]

    remaining: List[BInvariant] = []
    by_index = {inv.index: inv for inv in b_invariants(g)}
    for slot in layout.underlined:
        if slot not in by_index:
            raise SlotCountMismatch(f"no b-invariant leads at underlined slot {slot} of {I}")
    underlined = set(layout.underlined)
    for index in sorted(by_index):
        if index in underlined:
            B[index - 1] = by_index[index].value
        else:
            remaining.append(by_index[index])

    positions = sorted(set(container.iplus) - set(I))
    if flock.kind is PartitionType.ODD:
        positions = sorted(set(positions) | {1})
    if len(positions) != len(remaining):
        raise SlotCountMismatch(f"{len(remaining)} b-invariants for {len(positions)} A slots in {I}")
    A = [zero] * n
    for slot, inv in zip(positions, remaining):
        A[slot - 1] = inv.value
    return StabCharacter(I, tuple(A), tuple(B))


AssignmentKey = Tuple[SparseSequence, ClassDescriptor]


@dataclass
class ModelAssignment:
    n: int
    q: int
    containers: List[Container]
    flocks: Dict[SparseSequence, Flock]
    characters: Dict[AssignmentKey, StabCharacter]

    def keys(self) -> List[AssignmentKey]:
        return list(self.characters)


def assign_characters(n: int, q: int, budget: Optional[int] = None) -> ModelAssignment:
    flocks = flocks_by_container(n)
    built = containers(n, q, budget)
    characters: Dict[AssignmentKey, StabCharacter] = {}
    for container in built:
        flock = flocks[container.indices]
        for descriptor in container.classes:
            characters[(container.indices, descriptor)] = character_for_class(flock, container, descriptor)
    logger.info("assigned %d stabilizer characters over %d containers", len(characters), len(built))
    return ModelAssignment(n, q, built, flocks, characters)


def mutate_assignment(assignment: ModelAssignment, key: AssignmentKey) -> ModelAssignment:
    """Copy with one stabilizer character replaced by the trivial one"""
    characters = dict(assignment.characters)
    characters[key] = StabCharacter.trivial(key[0], assignment.q)
    return replace(assignment, characters=characters)


def _flock_label(flock: Flock) -> str:
    return f"{flock.kind.value} [{flock.head}, {flock.tail}]"


def assignment_listing(assignment: ModelAssignment) -> List[dict]:
    rows = []
    for (indices, descriptor), chi in assignment.characters.items():
        flock = assignment.flocks[indices]
        rows.append({
            "container": indices.label(),
            "flock": _flock_label(flock),
            "class": descriptor.label(),
            "A": [v.value for v in chi.A],
            "B": [v.value for v in chi.B],
        })
    return rows


def build_model(
    assignment: ModelAssignment,
    classes: Optional[Sequence[ClassDescriptor]] = None,
) -> Character:
    """Sum over M-classes of the characters induced from their stabilizer characters"""
    n, q = assignment.n, assignment.q
    if classes is None:
        classes = list(enumerate_classes(n, q))
    values = {}
    for c in classes:
        g = class_representative(c)
        values[c] = sum((induced_value(chi, g) for chi in assignment.characters.values()), CycInt.zero(q))
    return Character(n, q, model_dimension(assignment), values, "model")


def model_dimension(assignment: ModelAssignment) -> int:
    return sum(container.class_size() * len(container.classes) for container in assignment.containers)


@dataclass(frozen=True)
class Contribution:
    """An M-class whose induced character contains a given irreducible"""
    container: str
    flock: str
    class_label: str
    multiplicity: Fraction

    def to_dict(self) -> dict:
        return {
            "container": self.container,
            "flock": self.flock,
            "class": self.class_label,
            "multiplicity": str(self.multiplicity),
        }


@dataclass
class ModelReport:
    n: int
    q: int
    model_dimension: int
    irreducible_dimension_sum: int
    multiplicities: List[Tuple[str, Fraction]]
    contributions: Dict[str, List[Contribution]] = field(default_factory=dict)

    @property
    def deviations(self) -> List[Tuple[str, Fraction]]:
        return [(label, m) for label, m in self.multiplicities if m != 1]

    @property
    def passed(self) -> bool:
        return not self.deviations and self.model_dimension == self.irreducible_dimension_sum

    def offending_containers(self) -> List[str]:
        found = {c.container for label, _ in self.deviations for c in self.contributions.get(label, [])}
        return sorted(found)

    def get_report_summary(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "model_dimension": self.model_dimension,
            "irreducible_dimension_sum": self.irreducible_dimension_sum,
            "irreducibles": len(self.multiplicities),
            "deviations": [
                {
                    "irreducible": label,
                    "multiplicity": str(m),
                    "contributors": [c.to_dict() for c in self.contributions.get(label, [])],
                }
                for label, m in self.deviations
            ],
            "offending_containers": self.offending_containers(),
            "passed": self.passed,
        }


def contributions_to(
    assignment: ModelAssignment,
    chi: Character,
    classes: Sequence[ClassDescriptor],
) -> List[Contribution]:
    """Every M-class with <Ind chi_class, chi> != 0, in assignment order"""
    found = []
    for (indices, descriptor), stab in assignment.characters.items():
        m = inner_product(induced_character(indices, stab, classes), chi)
        if m:
            found.append(Contribution(indices.label(), _flock_label(assignment.flocks[indices]),
                                      descriptor.label(), m))
    return found


def verify_model(
    n: int,
    q: int,
    assignment: Optional[ModelAssignment] = None,
    table: Optional[CharacterTable] = None,
    jobs: int = 1,
    budget: Optional[int] = None,
) -> ModelReport:
    """<model, chi> for every irreducible chi; each must be exactly 1.
    Deviating irreducibles are traced back to the M-classes inducing them."""
    table = table or character_table(n, q, jobs, budget)
    assignment = assignment or assign_characters(n, q, budget)
    model = build_model(assignment, table.classes)
    multiplicities = []
    contributions = {}
    for chi in table.characters():
        m = inner_product(model, chi)
        multiplicities.append((chi.label, m))
        if m != 1:
            contributions[chi.label] = contributions_to(assignment, chi, table.classes)
    report = ModelReport(n, q, model.dim, sum(table.dimensions()), multiplicities, contributions)
    for label, m in report.deviations:
        sources = ", ".join(f"{c.container} {c.flock}" for c in contributions[label]) or "no M-class"
        logger.warning("irreducible %s occurs %s times in the model (from %s)", label, m, sources)
    return report
