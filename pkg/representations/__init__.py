"""
Irreducible representations by the orbit method and the Gelfand model
"""

from .orbit_method import (
    BasicRepresentation,
    Character,
    CharacterTable,
    MonomialMatrix,
    basic_character,
    basic_rep_matrix,
    character_table,
    completeness_check,
    irreducible_character,
    irreducible_rep_matrix,
    orthogonality_report,
    project,
)
from .gelfand_model import (
    Container,
    StabCharacter,
    assign_characters,
    build_model,
    induced_character,
    m_classes,
    verify_model,
)

__all__ = [
    "BasicRepresentation",
    "Character",
    "CharacterTable",
    "MonomialMatrix",
    "basic_character",
    "basic_rep_matrix",
    "character_table",
    "completeness_check",
    "irreducible_character",
    "irreducible_rep_matrix",
    "orthogonality_report",
    "project",
    "Container",
    "StabCharacter",
    "assign_characters",
    "build_model",
    "induced_character",
    "m_classes",
    "verify_model",
]
