"""
Acceptance suites checking the closed forms against enumeration and brute force
"""

from .verification_manager import CONTAINER_DIAGRAMS, CheckResult, VerificationManager

__all__ = [
    "CONTAINER_DIAGRAMS",
    "CheckResult",
    "VerificationManager",
]
