"""
Exception hierarchy shared by every tdorbit module
"""


class TDOrbitError(Exception):
    """Base class for all library errors"""


class NotPrime(TDOrbitError, ValueError):
    """Modulus is not a prime number"""


class ModulusMismatch(TDOrbitError, ValueError):
    """Operands live over different prime fields"""


class DivisionByZero(TDOrbitError, ZeroDivisionError):
    """Inverse of the zero field element was requested"""


class DimensionMismatch(TDOrbitError, ValueError):
    """Matrix and vector sizes do not fit together"""


class LengthMismatch(TDOrbitError, ValueError):
    """Aligned value lists have different lengths"""


class RationalityViolation(TDOrbitError, ArithmeticError):
    """A cyclotomic sum expected to be rational is not"""


class ShapeMismatch(TDOrbitError, ValueError):
    """Objects of different rank n (or different q) were combined"""


class BudgetExceeded(TDOrbitError):
    """An enumeration would exceed the configured size budget"""

    def __init__(self, what: str, size: int, budget: int):
        super().__init__(f"{what}: {size} exceeds budget {budget}")
        self.what = what
        self.size = size
        self.budget = budget


class EvenSegment(TDOrbitError, ValueError):
    """Segment invariant requested on a segment of even length"""


class ZeroInteriorY(TDOrbitError, ValueError):
    """Segment invariant requested across a zero y coordinate"""


class OutOfRange(TDOrbitError, ValueError):
    """Argument outside the admissible range"""


class ParityViolation(TDOrbitError, ValueError):
    """Counting arguments with incompatible parity or size"""


class NotComparable(TDOrbitError, ValueError):
    """Compositions are not ordered by refinement"""


class TypeMismatch(TDOrbitError, ValueError):
    """Composition does not have the requested even/odd type"""


class NotBasicOrbit(TDOrbitError, ValueError):
    """Orbit descriptor has more than one part"""


class InvalidStabCharacter(TDOrbitError, ValueError):
    """Stabilizer character violates its well-definedness constraints"""


class SlotCountMismatch(TDOrbitError):
    """Invariant counts do not fill the flock slots of a container"""
