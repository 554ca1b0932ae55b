"""
Run configuration for tdorbit commands
"""
from dataclasses import dataclass, field
from typing import Any, Dict, Optional
import json
import os

from models.field import is_prime

FORMATS = ("table", "json", "csv")
SUITES = ("orbits", "classes", "chars", "model", "combinatorics", "all")
COMMANDS = ("counts", "orbits", "classes", "partitions", "irreps", "model", "verify")


def _default_jobs() -> int:
    raw = os.environ.get("TDORBIT_JOBS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


@dataclass
class RunConfig:
    """Parameters shared by every command"""

    # Problem
    n: int = 3
    q: int = 2
    command: str = "counts"

    # Output
    format: str = "table"
    output: Optional[str] = None
    plot: Optional[str] = None

    # Verification
    suite: str = "all"
    homomorphism_samples: int = 10_000
    seed: int = 0

    # Budgets
    max_group_order: int = 200_000
    max_oracle_operations: int = 2_000_000
    max_dot_strings: int = 2 ** 16

    # Workers
    jobs: int = field(default_factory=_default_jobs)

    def to_dict(self) -> Dict[str, Any]:
        """Convert config to dictionary"""
        return {
            name: getattr(self, name)
            for name in self.__dataclass_fields__
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'RunConfig':
        """Create config from dictionary, ignoring unknown keys"""
        valid_fields = set(cls.__dataclass_fields__)
        return cls(**{k: v for k, v in data.items() if k in valid_fields})

    def save_to_file(self, filename: str):
        with open(filename, 'w') as f:
            json.dump(self.to_dict(), f, indent=2)

    @classmethod
    def load_from_file(cls, filename: str) -> 'RunConfig':
        with open(filename, 'r') as f:
            data = json.load(f)
        return cls.from_dict(data)

    def validate(self) -> list:
        """Validate configuration parameters and return list of issues"""
        issues = []

        if not isinstance(self.n, int) or self.n < 1:
            issues.append("n must be a positive integer")

        if not isinstance(self.q, int) or not is_prime(self.q):
            issues.append(f"q must be prime, got {self.q!r}")

        if self.command not in COMMANDS:
            issues.append(f"Unknown command {self.command!r}")

        if self.format not in FORMATS:
            issues.append(f"Format must be one of {', '.join(FORMATS)}")

        if self.suite not in SUITES:
            issues.append(f"Suite must be one of {', '.join(SUITES)}")

        for name in ("max_group_order", "max_oracle_operations", "max_dot_strings", "homomorphism_samples"):
            if getattr(self, name) <= 0:
                issues.append(f"{name} must be positive")

        if self.jobs < 1:
            issues.append("jobs must be at least 1")

        return issues

    def __str__(self) -> str:
        return f"RunConfig(command={self.command}, n={self.n}, q={self.q}, format={self.format})"


class ConfigPresets:
    """Predefined budget presets"""

    @staticmethod
    def quick() -> RunConfig:
        """Small budgets for smoke runs"""
        return RunConfig(
            max_group_order=5_000,
            max_oracle_operations=200_000,
            max_dot_strings=2 ** 10,
            homomorphism_samples=500,
        )

    @staticmethod
    def desk() -> RunConfig:
        return RunConfig()

    @staticmethod
    def acceptance() -> RunConfig:
        """Budgets sized for the largest exhaustive checks: G_5(F_2), G_4(F_3), dot strings up to n = 15"""
        return RunConfig(
            max_group_order=200_000,
            max_oracle_operations=5_000_000,
            max_dot_strings=2 ** 15,
            homomorphism_samples=20_000,
        )

    @staticmethod
    def by_name(name: str) -> RunConfig:
        presets = {"quick": ConfigPresets.quick, "desk": ConfigPresets.desk, "acceptance": ConfigPresets.acceptance}
        return presets[name]()
