"""
Exact primitives: prime field, cyclotomic integers, the group G_n and its (co)adjoint spaces
"""

from .field import FieldElement, FqMatrix, PrimeField, image_and_coset
from .cyclotomic import CycInt, ExactRational, e_char, hermitian_inner
from .group import GroupElement, conjugate, enumerate_group, inverse, multiply
from .lie_algebra import AdjointPoint, CoadjointPoint, adjoint_act, coadjoint_act, segment_invariant

__all__ = [
    "FieldElement",
    "FqMatrix",
    "PrimeField",
    "image_and_coset",
    "CycInt",
    "ExactRational",
    "e_char",
    "hermitian_inner",
    "GroupElement",
    "conjugate",
    "enumerate_group",
    "inverse",
    "multiply",
    "AdjointPoint",
    "CoadjointPoint",
    "adjoint_act",
    "coadjoint_act",
    "segment_invariant",
]
