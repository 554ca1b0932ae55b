"""
tdorbit: exact orbits, classes and representations of two-diagonal unitriangular groups
"""

# Version info
__version__ = "1.0.0"
__author__ = "tdorbit developers"
__description__ = "Exact coadjoint orbits, conjugacy classes, characters and Gelfand model of TD_n(F_p)"

# Import main classes for easy access
from classification.orbits import OrbitDescriptor, enumerate_descriptors
from classification.classes import ClassDescriptor, enumerate_classes
from representations.orbit_method import character_table
from representations.gelfand_model import assign_characters, verify_model
from verification.verification_manager import VerificationManager

__all__ = [
    "OrbitDescriptor",
    "enumerate_descriptors",
    "ClassDescriptor",
    "enumerate_classes",
    "character_table",
    "assign_characters",
    "verify_model",
    "VerificationManager",
]
