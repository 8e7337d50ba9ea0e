"""Run configuration and structured reports for the verification suite.

Reports are plain data: tool version, an echo of the configuration, one
record per check with a formula anchor naming the property it exercises,
and numeric evidence.  Nothing time- or host-dependent goes in, so two runs
with the same (version, config, seed) serialize to identical bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .errors import UsageError

#: Hard ceiling on Loewner-matrix order in CLI checks; desk-scale contract.
DEFAULT_ORDER_CAP = 8


@dataclass(frozen=True)
class RunConfig:
    """Seed and knobs shared by every randomized check.

    trials overrides the per-criterion verification loop sizes (smoke runs
    use trials=1); fixed search budgets and enumerations keep their
    defaults.  tol, when set, replaces the relative PSD tolerance in the
    checks that expose one.  The seed is mandatory: there is no wall-clock
    fallback anywhere.
    """

    seed: int
    trials: int | None = None
    tol: float | None = None
    order_cap: int = DEFAULT_ORDER_CAP

    def __post_init__(self):
        try:
            seed = int(self.seed)
        except (TypeError, ValueError):
            raise UsageError(f"seed must be an integer, got {self.seed!r}") from None
        if not -(2**63) <= seed < 2**64:
            raise UsageError(f"seed must fit in 64 bits, got {seed}")
        object.__setattr__(self, "seed", seed)
        if self.trials is not None and int(self.trials) < 1:
            raise UsageError(f"trials must be >= 1, got {self.trials}")
        if self.tol is not None and not self.tol > 0.0:
            raise UsageError(f"tol must be positive, got {self.tol}")
        if int(self.order_cap) < 2:
            raise UsageError(f"order cap must be >= 2, got {self.order_cap}")

    def loop(self, default: int) -> int:
        """Size of a verification loop: the override, else the default."""
        return default if self.trials is None else int(self.trials)

    def echo(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "tol": self.tol,
            "order_cap": self.order_cap,
        }


def _clean(obj):
    """Recursively coerce numpy scalars/arrays so json.dumps accepts them."""
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [_clean(v) for v in obj.tolist()]
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    if isinstance(obj, float) and not np.isfinite(obj):
        return repr(obj)  # keep reports strict-JSON even if an inf leaks in
    return obj


@dataclass(frozen=True)
class CheckRecord:
    """One verified property: outcome plus re-checkable numeric evidence."""

    name: str
    anchor: str
    outcome: str  # "pass" | "fail"
    evidence: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.outcome == "pass"

    def to_obj(self) -> dict:
        return {
            "name": self.name,
            "anchor": self.anchor,
            "outcome": self.outcome,
            "evidence": _clean(self.evidence),
        }


@dataclass(frozen=True)
class Report:
    version: str
    config: dict
    records: tuple

    @property
    def overall(self) -> str:
        return "pass" if all(r.passed for r in self.records) else "fail"

    @property
    def passed(self) -> bool:
        return self.overall == "pass"

    def to_obj(self) -> dict:
        return {
            "version": self.version,
            "config": _clean(dict(self.config)),
            "records": [r.to_obj() for r in self.records],
            "overall": self.overall,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), indent=2) + "\n"


def make_report(version: str, config: RunConfig, records) -> Report:
    return Report(version=version, config=config.echo(), records=tuple(records))
