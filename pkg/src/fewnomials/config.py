"""Tunable numerical parameters shared by the isolators and solvers."""
from __future__ import annotations

import enum
from dataclasses import dataclass, replace


class ConfigError(ValueError):
    pass


class PrecisionPolicy(enum.Enum):
    AUTO = "auto"          # double, escalating to extended where double stalls
    DOUBLE = "double"      # never escalate
    EXTENDED = "extended"  # every interval test in extended precision


@dataclass(frozen=True)
class IsolationConfig:
    """Knobs for root isolation.

    ``min_width`` is measured in the isolator's working coordinate and is
    relative to the magnitude of that coordinate when it exceeds one.
    ``tau_rank`` is the relative singular-value threshold used by all rank
    tests.  ``backmap_refinements`` bounds how many times a univariate root
    is re-isolated more tightly when its image box fails the Jacobian test.
    """

    min_width: float = 1e-12
    max_subdivisions: int = 10**6
    precision_policy: PrecisionPolicy = PrecisionPolicy.AUTO
    tau_rank: float = 1e-9
    threads: int = 1
    extended_prec: int = 113
    refine_width: float = 1e-10
    backmap_refinements: int = 8
    backmap_inflation: float = 1e-9

    def __post_init__(self):
        if isinstance(self.precision_policy, str):
            object.__setattr__(self, "precision_policy", PrecisionPolicy(self.precision_policy))
        if not self.min_width > 0:
            raise ConfigError(f"min_width must be positive, got {self.min_width}")
        if not (isinstance(self.max_subdivisions, int) and self.max_subdivisions > 0):
            raise ConfigError(f"max_subdivisions must be a positive integer, got {self.max_subdivisions}")
        if not self.tau_rank > 0:
            raise ConfigError(f"tau_rank must be positive, got {self.tau_rank}")
        if not (isinstance(self.threads, int) and self.threads >= 1):
            raise ConfigError(f"threads must be a positive integer, got {self.threads}")
        if self.extended_prec < 64:
            raise ConfigError("extended_prec must be at least 64 bits")
        if not self.refine_width > 0 or self.backmap_refinements < 0 or self.backmap_inflation < 0:
            raise ConfigError("refinement parameters must be positive")

    def with_(self, **changes) -> "IsolationConfig":
        return replace(self, **changes)


DEFAULT_CONFIG = IsolationConfig()
