"""
Brute-force ground truth built on the primitives only: orbits and classes by closure, raw induction
"""
import itertools
import logging
from typing import Callable, Dict, Iterable, List, Optional, Sequence

from models.cyclotomic import CycInt, cyc_sum, e_char
from models.errors import BudgetExceeded, RationalityViolation
from models.field import PrimeField
from models.group import GroupElement, conjugate, enumerate_group, group_order, inverse, multiply
from models.lie_algebra import CoadjointPoint, coadjoint_act, enumerate_coadjoint_points
from oracle.union_find import PartitionOfSet, find_orbits

logger = logging.getLogger(__name__)

DEFAULT_MAX_ORACLE_OPERATIONS = 2_000_000


def _check(what: str, operations: int, budget: Optional[int]):
    budget = DEFAULT_MAX_ORACLE_OPERATIONS if budget is None else budget
    if operations > budget:
        raise BudgetExceeded(what, operations, budget)


def alpha_generators(n: int, q: int) -> List[GroupElement]:
    """g(alpha; 0) for every alpha; both actions only see alpha"""
    field = PrimeField(q)
    elements = tuple(field.elements())
    zeros = field.zeros(n - 1)
    return [GroupElement(alpha, zeros) for alpha in itertools.product(elements, repeat=n)]


def brute_coadjoint_orbits(n: int, q: int, budget: Optional[int] = None) -> PartitionOfSet:
    _check(f"coadjoint closure of G_{n}(F_{q})", q ** (3 * n - 1), budget)
    points = list(enumerate_coadjoint_points(n, q, q ** (2 * n - 1)))
    orbits = find_orbits(alpha_generators(n, q), points, coadjoint_act)
    logger.info("G_%d(F_%d): %d coadjoint orbits by closure", n, q, orbits.block_count())
    return orbits


def brute_conjugacy_classes(n: int, q: int, budget: Optional[int] = None) -> PartitionOfSet:
    _check(f"conjugation closure of G_{n}(F_{q})", q ** (3 * n - 1), budget)
    elements = list(enumerate_group(n, q, group_order(n, q)))
    classes = find_orbits(alpha_generators(n, q), elements, lambda by, x: conjugate(x, by))
    logger.info("G_%d(F_%d): %d conjugacy classes by closure", n, q, classes.block_count())
    return classes


def _divide(total: CycInt, divisor: int) -> CycInt:
    if any(c % divisor for c in total.coeffs):
        raise RationalityViolation(f"{total} is not divisible by {divisor}")
    return CycInt(total.p, tuple(c // divisor for c in total.coeffs))


def brute_induce(
    n: int,
    q: int,
    in_subgroup: Callable[[GroupElement], bool],
    chi: Callable[[GroupElement], CycInt],
    at: Iterable[GroupElement],
    budget: Optional[int] = None,
) -> Dict[GroupElement, CycInt]:
    """Frobenius: (1/|H|) sum over t in G with t^-1 s t in H of chi(t^-1 s t)"""
    at = list(at)
    order = group_order(n, q)
    _check(f"induction to G_{n}(F_{q})", order * (len(at) + 1), budget)
    group = list(enumerate_group(n, q, order))
    subgroup_order = sum(1 for t in group if in_subgroup(t))
    values = {}
    for s in at:
        terms = []
        for t in group:
            u = multiply(multiply(inverse(t), s), t)
            if in_subgroup(u):
                terms.append(chi(u))
        values[s] = _divide(cyc_sum(terms, q), subgroup_order)
    return values


def brute_orbit_character(
    orbit: Sequence[CoadjointPoint],
    at: Iterable[GroupElement],
) -> Dict[GroupElement, CycInt]:
    """q^-k sum over F in the orbit of e(F(g)), |orbit| = q^2k"""
    size = len(orbit)
    q = orbit[0].q
    root = 1
    while root * root < size:
        root *= q
    if root * root != size:
        raise RationalityViolation(f"orbit of size {size} is not an even power of {q}")
    return {g: _divide(cyc_sum([e_char(F.pairing(g)) for F in orbit], q), root) for g in at}


def trace_character(
    matrix_of: Callable[[GroupElement], object],
    at: Iterable[GroupElement],
) -> Dict[GroupElement, CycInt]:
    """Character read off traces of explicit representation matrices"""
    return {g: matrix_of(g).trace() for g in at}
