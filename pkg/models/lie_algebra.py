"""
Adjoint and coadjoint spaces of G_n and the G_n-actions on them
"""
import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Tuple

from models.errors import BudgetExceeded, EvenSegment, OutOfRange, ShapeMismatch, ZeroInteriorY
from models.field import FieldElement, PrimeField, require_prime
from models.group import DEFAULT_MAX_GROUP_ORDER, GroupElement


def _check_shape(first: Tuple[FieldElement, ...], second: Tuple[FieldElement, ...], names: str):
    n = len(first)
    if n < 1 or len(second) != n - 1:
        raise ShapeMismatch(f"{names}: lengths {len(first)} and {len(second)}")
    p = first[0].modulus
    for x in itertools.chain(first, second):
        if x.modulus != p:
            raise ShapeMismatch(f"{names}: mixed moduli {p} and {x.modulus}")


@dataclass(frozen=True, order=True)
class AdjointPoint:
    """A in g_n with coordinates a_1..a_n, b_1..b_{n-1}"""
    a: Tuple[FieldElement, ...]
    b: Tuple[FieldElement, ...]

    def __post_init__(self):
        _check_shape(self.a, self.b, "AdjointPoint")

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def q(self) -> int:
        return self.a[0].modulus


@dataclass(frozen=True, order=True)
class CoadjointPoint:
    """F in g_n* with coordinates x_1..x_n, y_1..y_{n-1}"""
    x: Tuple[FieldElement, ...]
    y: Tuple[FieldElement, ...]

    def __post_init__(self):
        _check_shape(self.x, self.y, "CoadjointPoint")

    @property
    def n(self) -> int:
        return len(self.x)

    @property
    def q(self) -> int:
        return self.x[0].modulus

    def pairing(self, g: GroupElement) -> FieldElement:
        """tr(F (g - 1)) = sum x_i alpha_i + sum y_j beta_j"""
        total = sum((x * a for x, a in zip(self.x, g.alpha)), PrimeField(self.q).zero())
        return sum((y * b for y, b in zip(self.y, g.beta)), total)

    def to_dict(self) -> dict:
        return {"x": [v.value for v in self.x], "y": [v.value for v in self.y]}


def make_coadjoint(x: Sequence[int], y: Sequence[int], q: int) -> CoadjointPoint:
    field = PrimeField(q)
    return CoadjointPoint(field.vector(x), field.vector(y))


def make_adjoint(a: Sequence[int], b: Sequence[int], q: int) -> AdjointPoint:
    field = PrimeField(q)
    return AdjointPoint(field.vector(a), field.vector(b))


def coadjoint_act(g: GroupElement, point: CoadjointPoint) -> CoadjointPoint:
    """x'_i = x_i + alpha_{i-1} y_{i-1} - alpha_{i+1} y_i, y unchanged.

    Depends on alpha only and is additive in it, so act(gh) = act(g) o act(h) = act(h) o act(g).
    """
    if g.n != point.n or g.q != point.q:
        raise ShapeMismatch(f"G_{g.n}(F_{g.q}) acting on g*_{point.n}(F_{point.q})")
    n = point.n
    alpha, x, y = g.alpha, point.x, point.y
    new_x = []
    for i in range(n):
        value = x[i]
        if i >= 1:
            value = value + alpha[i - 1] * y[i - 1]
        if i <= n - 2:
            value = value - alpha[i + 1] * y[i]
        new_x.append(value)
    return CoadjointPoint(tuple(new_x), y)


def adjoint_act(g: GroupElement, point: AdjointPoint) -> AdjointPoint:
    """b'_i = b_i + alpha_i a_{i+1} - alpha_{i+1} a_i, a unchanged"""
    if g.n != point.n or g.q != point.q:
        raise ShapeMismatch(f"G_{g.n}(F_{g.q}) acting on g_{point.n}(F_{point.q})")
    alpha, a, b = g.alpha, point.a, point.b
    new_b = tuple(b[i] + alpha[i] * a[i + 1] - alpha[i + 1] * a[i] for i in range(len(b)))
    return AdjointPoint(a, new_b)


def segment_invariant(point: CoadjointPoint, lo: int, hi: int) -> FieldElement:
    """Invariant of the segment of coordinates lo+1..hi (1-based) between two breaks.

    Sum over odd offsets s of x_{lo+s} times the y's at odd offsets before s and the
    y's at even offsets after s.
    """
    n = point.n
    if not 0 <= lo < hi <= n:
        raise OutOfRange(f"segment ({lo}, {hi}] outside 1..{n}")
    length = hi - lo
    if length % 2 == 0:
        raise EvenSegment(f"segment ({lo}, {hi}] has even length {length}")
    # local y_j, 1 <= j < length, is global y_{lo+j}
    ys = point.y[lo:hi - 1]
    if any(not v for v in ys):
        raise ZeroInteriorY(f"segment ({lo}, {hi}] crosses a zero y")

    total = PrimeField(point.q).zero()
    for s in range(1, length + 1, 2):
        term = point.x[lo + s - 1]
        for j in range(1, length):
            if (j < s and j % 2 == 1) or (j > s and j % 2 == 0):
                term = term * ys[j - 1]
        total = total + term
    return total


def enumerate_coadjoint_points(n: int, q: int, budget: Optional[int] = None) -> Iterator[CoadjointPoint]:
    """All q^(2n-1) points of g*_n in lexicographic (x, y) order"""
    require_prime(q)
    budget = DEFAULT_MAX_GROUP_ORDER if budget is None else budget
    size = q ** (2 * n - 1)
    if size > budget:
        raise BudgetExceeded(f"|g*_{n}(F_{q})|", size, budget)
    elements = tuple(PrimeField(q).elements())
    for coords in itertools.product(elements, repeat=2 * n - 1):
        yield CoadjointPoint(coords[:n], coords[n:])
