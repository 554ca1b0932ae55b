"""
Configuration package for tdorbit runs
"""

from .run_config import RunConfig, ConfigPresets

__all__ = ["RunConfig", "ConfigPresets"]
