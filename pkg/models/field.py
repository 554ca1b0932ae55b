"""
Prime field arithmetic and exact linear algebra over F_p
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

import numpy as np

from models.errors import DimensionMismatch, DivisionByZero, ModulusMismatch, NotPrime


@lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    """Trial division; moduli stay tiny at desk scale"""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def require_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrime(f"{p!r} is not a prime modulus")
    return p


@dataclass(frozen=True, order=True)
class FieldElement:
    """Residue class in F_p, always stored reduced"""
    value: int
    modulus: int

    def __post_init__(self):
        require_prime(self.modulus)
        object.__setattr__(self, "value", int(self.value) % self.modulus)

    @classmethod
    def _raw(cls, value: int, modulus: int) -> "FieldElement":
        # value already reduced, modulus already checked
        obj = object.__new__(cls)
        object.__setattr__(obj, "value", value)
        object.__setattr__(obj, "modulus", modulus)
        return obj

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.modulus != self.modulus:
                raise ModulusMismatch(f"F_{self.modulus} vs F_{other.modulus}")
            return other.value
        if isinstance(other, int):
            return other % self.modulus
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement._raw((self.value + v) % self.modulus, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement._raw((self.value - v) % self.modulus, self.modulus)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement._raw((v - self.value) % self.modulus, self.modulus)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement._raw((self.value * v) % self.modulus, self.modulus)

    __rmul__ = __mul__

    def __neg__(self) -> "FieldElement":
        return FieldElement._raw((-self.value) % self.modulus, self.modulus)

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise DivisionByZero(f"0 has no inverse in F_{self.modulus}")
        return FieldElement._raw(pow(self.value, self.modulus - 2, self.modulus), self.modulus)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return self * FieldElement._raw(v, self.modulus).inverse()

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement._raw(v, self.modulus) * self.inverse()

    def __pow__(self, exponent: int) -> "FieldElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return FieldElement._raw(pow(self.value, exponent, self.modulus), self.modulus)

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def is_zero(self) -> bool:
        return self.value == 0

    def __repr__(self) -> str:
        return f"F{self.modulus}({self.value})"

    def __str__(self) -> str:
        return str(self.value)


# The field_arith family as plain functions
def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def div(a: FieldElement, b: FieldElement) -> FieldElement:
    return a / b


class PrimeField:
    """Factory for elements of one fixed F_p"""

    def __init__(self, p: int):
        self.p = require_prime(p)

    def element(self, value: int) -> FieldElement:
        return FieldElement._raw(int(value) % self.p, self.p)

    def zero(self) -> FieldElement:
        return FieldElement._raw(0, self.p)

    def one(self) -> FieldElement:
        return FieldElement._raw(1, self.p)

    def elements(self) -> Iterator[FieldElement]:
        for v in range(self.p):
            yield FieldElement._raw(v, self.p)

    def nonzero(self) -> Iterator[FieldElement]:
        for v in range(1, self.p):
            yield FieldElement._raw(v, self.p)

    def vector(self, values: Iterable[int]) -> Tuple[FieldElement, ...]:
        return tuple(self.element(v) for v in values)

    def zeros(self, length: int) -> Tuple[FieldElement, ...]:
        zero = self.zero()
        return (zero,) * length

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


Scalar = Union[int, FieldElement]


def _rref_array(data: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    m = np.array(data, dtype=np.int64) % p
    rows, cols = m.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        candidates = np.nonzero(m[r:, c])[0]
        if candidates.size == 0:
            continue
        k = r + int(candidates[0])
        if k != r:
            m[[r, k]] = m[[k, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        factors = m[:, c].copy()
        factors[r] = 0
        m = (m - np.outer(factors, m[r])) % p
        pivots.append(c)
        r += 1
    return m, pivots


class FqMatrix:
    """Dense matrix over F_p backed by an int64 array of reduced residues"""

    def __init__(self, rows: int, cols: int, entries: Sequence[Sequence[Scalar]], modulus: int):
        self.modulus = require_prime(modulus)
        self.rows = rows
        self.cols = cols
        data = np.zeros((rows, cols), dtype=np.int64)
        if len(entries) != rows:
            raise DimensionMismatch(f"expected {rows} rows, got {len(entries)}")
        for i, row in enumerate(entries):
            if len(row) != cols:
                raise DimensionMismatch(f"row {i} has {len(row)} entries, expected {cols}")
            for j, x in enumerate(row):
                if isinstance(x, FieldElement):
                    if x.modulus != modulus:
                        raise ModulusMismatch(f"F_{x.modulus} entry in F_{modulus} matrix")
                    data[i, j] = x.value
                else:
                    data[i, j] = int(x) % modulus
        self._data = data

    @classmethod
    def _from_array(cls, data: np.ndarray, modulus: int) -> "FqMatrix":
        obj = cls.__new__(cls)
        obj.modulus = modulus
        obj.rows, obj.cols = data.shape
        obj._data = np.array(data, dtype=np.int64) % modulus
        return obj

    @classmethod
    def zeros(cls, rows: int, cols: int, modulus: int) -> "FqMatrix":
        require_prime(modulus)
        return cls._from_array(np.zeros((rows, cols), dtype=np.int64), modulus)

    @classmethod
    def identity(cls, size: int, modulus: int) -> "FqMatrix":
        require_prime(modulus)
        return cls._from_array(np.eye(size, dtype=np.int64), modulus)

    @property
    def entries(self) -> Tuple[Tuple[FieldElement, ...], ...]:
        p = self.modulus
        return tuple(
            tuple(FieldElement._raw(int(x), p) for x in row) for row in self._data
        )

    def as_array(self) -> np.ndarray:
        return self._data.copy()

    def transpose(self) -> "FqMatrix":
        return FqMatrix._from_array(self._data.T, self.modulus)

    def rref(self) -> Tuple["FqMatrix", List[int]]:
        reduced, pivots = _rref_array(self._data, self.modulus)
        return FqMatrix._from_array(reduced, self.modulus), pivots

    def rank(self) -> int:
        return len(_rref_array(self._data, self.modulus)[1])

    def __matmul__(self, other: "FqMatrix") -> "FqMatrix":
        if self.modulus != other.modulus:
            raise ModulusMismatch(f"F_{self.modulus} vs F_{other.modulus}")
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        return FqMatrix._from_array((self._data @ other._data) % self.modulus, self.modulus)

    def apply(self, vector: Sequence[FieldElement]) -> Tuple[FieldElement, ...]:
        if len(vector) != self.cols:
            raise DimensionMismatch(f"vector of length {len(vector)} for {self.cols} columns")
        v = np.array([int(x) for x in vector], dtype=np.int64)
        out = (self._data @ v) % self.modulus if self.cols else np.zeros(self.rows, dtype=np.int64)
        return tuple(FieldElement._raw(int(x), self.modulus) for x in out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FqMatrix)
            and self.modulus == other.modulus
            and self._data.shape == other._data.shape
            and bool(np.array_equal(self._data, other._data))
        )

    def __repr__(self) -> str:
        return f"FqMatrix({self.rows}x{self.cols} over F_{self.modulus}, {self._data.tolist()})"


def image_and_coset(
    matrix: FqMatrix, vector: Sequence[FieldElement]
) -> Tuple[List[Tuple[FieldElement, ...]], Tuple[FieldElement, ...]]:
    """Echelon basis of the column space and the canonical representative of vector modulo it.

    The representative has zeros at every pivot coordinate of the echelon basis, so two vectors
    share a representative exactly when they differ by an element of the column space.
    """
    if len(vector) != matrix.rows:
        raise DimensionMismatch(f"vector of length {len(vector)} for {matrix.rows} rows")
    p = matrix.modulus
    for x in vector:
        if x.modulus != p:
            raise ModulusMismatch(f"F_{x.modulus} vector for F_{p} matrix")

    reduced, pivots = _rref_array(matrix.as_array().T, p)
    basis_rows = reduced[: len(pivots)]
    rep = np.array([x.value for x in vector], dtype=np.int64)
    for row, col in zip(basis_rows, pivots):
        if rep[col]:
            rep = (rep - rep[col] * row) % p

    basis = [tuple(FieldElement._raw(int(x), p) for x in row) for row in basis_rows]
    return basis, tuple(FieldElement._raw(int(x), p) for x in rep)
