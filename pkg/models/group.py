"""
The two-diagonal group G_n = TD_n(F_p) in (alpha; beta) coordinates
"""
import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Tuple

from models.errors import BudgetExceeded, ShapeMismatch
from models.field import FieldElement, PrimeField, require_prime

DEFAULT_MAX_GROUP_ORDER = 200_000


@dataclass(frozen=True, order=True)
class GroupElement:
    """g(alpha; beta): alpha on the first superdiagonal, beta on the second"""
    alpha: Tuple[FieldElement, ...]
    beta: Tuple[FieldElement, ...]

    def __post_init__(self):
        n = len(self.alpha)
        if n < 1:
            raise ShapeMismatch("G_n needs n >= 1")
        if len(self.beta) != n - 1:
            raise ShapeMismatch(f"alpha has length {n}, beta must have length {n - 1}, got {len(self.beta)}")
        p = self.alpha[0].modulus
        for x in itertools.chain(self.alpha, self.beta):
            if x.modulus != p:
                raise ShapeMismatch(f"mixed moduli {p} and {x.modulus} in one element")

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def q(self) -> int:
        return self.alpha[0].modulus

    def is_identity(self) -> bool:
        return not any(self.alpha) and not any(self.beta)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return multiply(self, other)

    def inverse(self) -> "GroupElement":
        return inverse(self)

    def to_dict(self) -> dict:
        return {"alpha": [x.value for x in self.alpha], "beta": [x.value for x in self.beta]}

    def __str__(self) -> str:
        a = ",".join(str(x) for x in self.alpha)
        b = ",".join(str(x) for x in self.beta)
        return f"g({a};{b})"


def make_element(alpha: Sequence[int], beta: Sequence[int], q: int) -> GroupElement:
    field = PrimeField(q)
    return GroupElement(field.vector(alpha), field.vector(beta))


def identity(n: int, q: int) -> GroupElement:
    field = PrimeField(q)
    return GroupElement(field.zeros(n), field.zeros(n - 1))


def group_order(n: int, q: int) -> int:
    return q ** (2 * n - 1)


def _check_compatible(g: GroupElement, h: GroupElement):
    if g.n != h.n or g.q != h.q:
        raise ShapeMismatch(f"G_{g.n}(F_{g.q}) vs G_{h.n}(F_{h.q})")


def multiply(g: GroupElement, h: GroupElement) -> GroupElement:
    """beta''_i = beta_i + beta'_i + alpha_i * alpha'_{i+1}"""
    _check_compatible(g, h)
    a, b = g.alpha, g.beta
    a2, b2 = h.alpha, h.beta
    alpha = tuple(x + y for x, y in zip(a, a2))
    beta = tuple(b[i] + b2[i] + a[i] * a2[i + 1] for i in range(len(b)))
    return GroupElement(alpha, beta)


def inverse(g: GroupElement) -> GroupElement:
    a = g.alpha
    alpha = tuple(-x for x in a)
    beta = tuple(-g.beta[i] + a[i] * a[i + 1] for i in range(len(g.beta)))
    return GroupElement(alpha, beta)


def conjugate(x: GroupElement, by: GroupElement) -> GroupElement:
    """by^-1 * x * by, computed in closed form: alpha is fixed, beta_i shifts by
    a_i * alpha'_{i+1} - a_{i+1} * alpha'_i."""
    _check_compatible(x, by)
    a, t = x.alpha, by.alpha
    beta = tuple(x.beta[i] + a[i] * t[i + 1] - a[i + 1] * t[i] for i in range(len(x.beta)))
    return GroupElement(a, beta)


def enumerate_group(n: int, q: int, budget: Optional[int] = None) -> Iterator[GroupElement]:
    """All q^(2n-1) elements in lexicographic (alpha, beta) order"""
    require_prime(q)
    budget = DEFAULT_MAX_GROUP_ORDER if budget is None else budget
    order = group_order(n, q)
    if order > budget:
        raise BudgetExceeded(f"|G_{n}(F_{q})|", order, budget)
    field = PrimeField(q)
    elements = tuple(field.elements())
    for coords in itertools.product(elements, repeat=2 * n - 1):
        yield GroupElement(coords[:n], coords[n:])


def to_matrix(g: GroupElement) -> Tuple[Tuple[FieldElement, ...], ...]:
    """The (n+1)x(n+1) unitriangular matrix carrying alpha and beta on two superdiagonals"""
    field = PrimeField(g.q)
    size = g.n + 1
    rows = [[field.zero() for _ in range(size)] for _ in range(size)]
    for i in range(size):
        rows[i][i] = field.one()
    for i, x in enumerate(g.alpha):
        rows[i][i + 1] = x
    for i, x in enumerate(g.beta):
        rows[i][i + 2] = x
    return tuple(tuple(r) for r in rows)


def from_matrix(rows: Sequence[Sequence[FieldElement]]) -> GroupElement:
    """Truncate an upper unitriangular matrix to its two-diagonal quotient"""
    n = len(rows) - 1
    return GroupElement(
        tuple(rows[i][i + 1] for i in range(n)),
        tuple(rows[i][i + 2] for i in range(n - 1)),
    )
