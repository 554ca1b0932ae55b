"""
Exact arithmetic in Z[zeta_p] and the additive character e(x) = zeta_p^x
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from models.errors import LengthMismatch, ModulusMismatch, RationalityViolation
from models.field import FieldElement, require_prime

ExactRational = Fraction


def _reduce(full: Sequence[int], p: int) -> Tuple[int, ...]:
    """Fold a length-p exponent vector onto the basis 1, zeta, ..., zeta^(p-2)"""
    top = full[p - 1]
    return tuple(full[j] - top for j in range(p - 1))


@dataclass(frozen=True)
class CycInt:
    """Element sum_j coeffs[j] * zeta_p^j of Z[zeta_p], j < p - 1"""
    p: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        require_prime(self.p)
        if len(self.coeffs) != self.p - 1:
            raise LengthMismatch(f"Z[zeta_{self.p}] needs {self.p - 1} coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def _raw(cls, p: int, coeffs: Tuple[int, ...]) -> "CycInt":
        obj = object.__new__(cls)
        object.__setattr__(obj, "p", p)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    @classmethod
    def integer(cls, p: int, value: int) -> "CycInt":
        require_prime(p)
        return cls._raw(p, (value,) + (0,) * (p - 2))

    @classmethod
    def zero(cls, p: int) -> "CycInt":
        return cls.integer(p, 0)

    @classmethod
    def one(cls, p: int) -> "CycInt":
        return cls.integer(p, 1)

    @classmethod
    def zeta_power(cls, p: int, exponent: int) -> "CycInt":
        require_prime(p)
        full = [0] * p
        full[exponent % p] = 1
        return cls._raw(p, _reduce(full, p))

    def _check(self, other: "CycInt"):
        if other.p != self.p:
            raise ModulusMismatch(f"Z[zeta_{self.p}] vs Z[zeta_{other.p}]")

    def __add__(self, other):
        if isinstance(other, int):
            other = CycInt.integer(self.p, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        self._check(other)
        return CycInt._raw(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CycInt":
        return CycInt._raw(self.p, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = CycInt.integer(self.p, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        self._check(other)
        return CycInt._raw(self.p, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt._raw(self.p, tuple(a * other for a in self.coeffs))
        if not isinstance(other, CycInt):
            return NotImplemented
        self._check(other)
        p = self.p
        full = [0] * p
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        full[(i + j) % p] += a * b
        return CycInt._raw(p, _reduce(full, p))

    __rmul__ = __mul__

    def conj(self) -> "CycInt":
        """Complex conjugation zeta^j -> zeta^(p-j)"""
        p = self.p
        full = [0] * p
        for j, a in enumerate(self.coeffs):
            full[(p - j) % p] += a
        return CycInt._raw(p, _reduce(full, p))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_part(self) -> int:
        if not self.is_rational():
            raise RationalityViolation(f"{self} is not a rational integer")
        return self.coeffs[0]

    def to_dict(self) -> dict:
        return {"p": self.p, "coeffs": list(self.coeffs)}

    def __repr__(self) -> str:
        return f"CycInt(p={self.p}, {list(self.coeffs)})"

    def __str__(self) -> str:
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            if j == 0:
                terms.append(str(c))
            else:
                power = "z" if j == 1 else f"z^{j}"
                terms.append(power if c == 1 else f"{c}*{power}")
        return " + ".join(terms) if terms else "0"


def e_char(x: FieldElement) -> CycInt:
    """Additive character e(x) = zeta_p^x"""
    return CycInt.zeta_power(x.modulus, x.value)


def cyc_sum(values: Sequence[CycInt], p: int) -> CycInt:
    total = [0] * (p - 1)
    for v in values:
        if v.p != p:
            raise ModulusMismatch(f"Z[zeta_{v.p}] term in Z[zeta_{p}] sum")
        for j, c in enumerate(v.coeffs):
            total[j] += c
    return CycInt._raw(p, tuple(total))


def hermitian_inner(
    vals1: Sequence[CycInt],
    vals2: Sequence[CycInt],
    group_order: int,
    weights: Optional[Sequence[int]] = None,
) -> ExactRational:
    """(1/|G|) sum_g chi1(g) * conj(chi2(g)).

    With ``weights`` the lists are indexed by conjugacy classes and each term is multiplied by the
    class size; without them the lists must enumerate the whole group.
    """
    if len(vals1) != len(vals2):
        raise LengthMismatch(f"{len(vals1)} vs {len(vals2)} values")
    if weights is None:
        if len(vals1) != group_order:
            raise LengthMismatch(f"{len(vals1)} values for a group of order {group_order}")
        weights = [1] * len(vals1)
    elif len(weights) != len(vals1):
        raise LengthMismatch(f"{len(weights)} weights for {len(vals1)} values")
    if not vals1:
        return ExactRational(0)

    p = vals1[0].p
    acc: List[int] = [0] * (p - 1)
    for a, b, w in zip(vals1, vals2, weights):
        term = a * b.conj()
        for j, c in enumerate(term.coeffs):
            acc[j] += w * c
    total = CycInt._raw(p, tuple(acc))
    if not total.is_rational():
        raise RationalityViolation(f"inner product accumulated to {total}")
    return ExactRational(total.coeffs[0], group_order)
