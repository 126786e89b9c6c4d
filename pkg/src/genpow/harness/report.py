"""Per-theorem tallies."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

PASS, SKIP, FAIL = "pass", "skip", "fail"

REPORT_KEYS = (
    "theorem_id",
    "trials",
    "passes",
    "skips",
    "failures",
    "worst_residual",
    "failing_seed",
)


@dataclass
class TheoremReport:
    """Outcome of one verifier run.

    ``worst_residual`` is the largest relative residual seen over all
    equality-type checks; ``failing_seed`` is the trial seed of the first
    failing trial.  ``gating`` is False for exploratory runs whose
    failures are evidence rather than defects.
    """

    theorem_id: str
    trials: int = 0
    passes: int = 0
    skips: int = 0
    failures: int = 0
    worst_residual: float = 0.0
    failing_seed: Optional[int] = None
    gating: bool = True

    @property
    def ok(self) -> bool:
        return self.failures == 0

    @property
    def skip_fraction(self) -> float:
        return self.skips / self.trials if self.trials else 0.0

    def to_dict(self) -> dict:
        return {key: getattr(self, key) for key in REPORT_KEYS}

    def merge(self, other: "TheoremReport") -> "TheoremReport":
        """Combine tallies of two runs of the same theorem."""
        seed = self.failing_seed if self.failing_seed is not None else other.failing_seed
        return TheoremReport(
            self.theorem_id,
            self.trials + other.trials,
            self.passes + other.passes,
            self.skips + other.skips,
            self.failures + other.failures,
            max(self.worst_residual, other.worst_residual),
            seed,
            self.gating and other.gating,
        )

    def record(self, outcome: str, residual: float, seed: int) -> None:
        self.trials += 1
        if outcome == PASS:
            self.passes += 1
        elif outcome == SKIP:
            self.skips += 1
        else:
            self.failures += 1
            if self.failing_seed is None:
                self.failing_seed = seed
        if not math.isnan(residual):
            self.worst_residual = max(self.worst_residual, residual)


@dataclass
class Checks:
    """Collects the individual assertions made inside one trial."""

    failed: list = field(default_factory=list)
    skipped: list = field(default_factory=list)
    worst: float = 0.0

    def close(self, label: str, residual: float, limit: float) -> bool:
        """Equality-type check: pass iff ``residual <= limit``."""
        residual = float(residual)
        self.worst = max(self.worst, residual) if not math.isnan(residual) else math.inf
        ok = residual <= limit
        if not ok:
            self.failed.append(f"{label}: residual {residual:.3e} > {limit:.1e}")
        return ok

    def holds(self, label: str, flag: bool, residual: float = 0.0) -> bool:
        self.worst = max(self.worst, float(residual))
        if not flag:
            self.failed.append(f"{label}: does not hold (residual {residual:.3e})")
        return bool(flag)

    def separated(self, label: str, value: float, reject: float, accept: float) -> None:
        """Negative check: ``value`` must clear ``accept``; ``<= reject`` is a failure.

        Values in between are the ambiguous band and count as a skip.
        """
        if value > accept:
            return
        if value <= reject:
            self.failed.append(f"{label}: {value:.3e} <= {reject:.1e}")
        else:
            self.skipped.append(f"{label}: {value:.3e} in ambiguous band")

    def skip(self, label: str) -> None:
        self.skipped.append(label)

    @property
    def outcome(self) -> str:
        if self.failed:
            return FAIL
        if self.skipped:
            return SKIP
        return PASS
