"""Run configuration for the verification harness."""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path

from .errors import UsageError

SUITES = ("arith", "symfun", "nilhecke", "grassmannian", "udot")
CONFIG_ENV = "THICKSL2_CONFIG"

RANK_CAP = 6
WEIGHT_CAP = 12


@dataclass
class SuiteConfig:
    """Parameter ranges for ``run_suite``.

    ``rank_max`` bounds the strand count of nilHecke relations, ``weight_cutoff``
    the degree of symmetric-function truncations.  The remaining bounds are for
    the quantum group checks.
    """

    suite: str = "all"
    rank_max: int = 4
    weight_cutoff: int = 8
    n_range: int = 6
    power_max: int = 3
    hom_degree: int = 20
    hom_n_range: int = 4
    decomposition_pairs: list[tuple[int, int]] = field(
        default_factory=lambda: [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (2, 3)]
    )
    format: str = "json"
    seed: int = 0
    jobs: int = 1
    timings: bool = True

    def __post_init__(self) -> None:
        self.decomposition_pairs = [tuple(p) for p in self.decomposition_pairs]

    def suites(self) -> tuple[str, ...]:
        return SUITES if self.suite == "all" else (self.suite,)

    def validate(self) -> "SuiteConfig":
        if self.suite != "all" and self.suite not in SUITES:
            raise UsageError(f"unknown suite {self.suite!r}; choose from all, {', '.join(SUITES)}")
        if not 1 <= self.rank_max <= RANK_CAP:
            raise UsageError(f"rank-max must be in 1..{RANK_CAP}")
        if not 0 <= self.weight_cutoff <= WEIGHT_CAP:
            raise UsageError(f"weight-cutoff must be in 0..{WEIGHT_CAP}")
        for name in ("n_range", "power_max", "hom_degree", "hom_n_range"):
            if getattr(self, name) < 0:
                raise UsageError(f"{name} must be nonnegative")
        if self.format not in ("json", "text"):
            raise UsageError(f"unknown format {self.format!r}")
        if self.jobs < 1:
            raise UsageError("jobs must be positive")
        for a, b in self.decomposition_pairs:
            if a < 1 or b < 1 or a + b > RANK_CAP:
                raise UsageError(f"decomposition pair {(a, b)} out of range")
        return self

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "SuiteConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
        return cls(**data)

    @classmethod
    def from_file(cls, path: str | os.PathLike) -> "SuiteConfig":
        try:
            data = json.loads(Path(path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {path}: {exc}") from None
        if not isinstance(data, dict):
            raise UsageError("config file must hold a JSON object")
        return cls.from_dict(data)

    @classmethod
    def default(cls) -> "SuiteConfig":
        """Defaults, overridden by the JSON file named in $THICKSL2_CONFIG if set."""
        path = os.environ.get(CONFIG_ENV)
        return cls.from_file(path) if path else cls()
