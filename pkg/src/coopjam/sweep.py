"""Parameter sweeps over a channel gain, emitted as CSV data tables.

A sweep fixes the power budgets and walks one gain (or both, locked
together) across a range, recording for each abscissa the chosen
allocation, the achievable rate, and the capacity upper bound.  Every
emitted row is checked against the soundness invariant
achievable <= upper_bound + 1e-9.

CSV output is byte-deterministic: fixed header, 12 significant digits,
'.' decimal separator, LF line endings, no locale dependence.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .achievable import BranchLabel, achievable_rate
from .bound import sato_upper_bound
from .model import (
    ChannelGains,
    DomainError,
    InvariantViolation,
    PowerAllocation,
    PowerBudget,
    RateValue,
    _require_finite,
)
from .power import optimal_allocation

__all__ = [
    "CSV_HEADER",
    "PowerMode",
    "SweepRow",
    "SweepSpec",
    "render_csv",
    "run_sweep",
]

_SOUNDNESS_TOL = 1e-9

CSV_HEADER = "x,achievable_rate,upper_bound,p1,p2,branch"


class PowerMode(Enum):
    """How the transmit powers are chosen along a sweep."""

    OPTIMAL_CONTROL = "optimal"
    FULL_POWER = "full"


@dataclass(frozen=True, slots=True)
class SweepSpec:
    """Description of one sweep.

    `param` names the swept gain ("a" or "b"); `fixed_gain` is the value
    of the other one.  With `symmetric` set, both gains track the
    abscissa and `fixed_gain` is ignored.
    """

    param: str
    start: float
    end: float
    steps: int
    budget: PowerBudget
    fixed_gain: float = 0.0
    symmetric: bool = False
    power_mode: PowerMode = PowerMode.OPTIMAL_CONTROL

    def __post_init__(self) -> None:
        if self.param not in ("a", "b"):
            raise DomainError(f"param must be 'a' or 'b', got {self.param!r}")
        start = _require_finite("start", self.start, minimum=0.0)
        end = _require_finite("end", self.end, minimum=0.0)
        if start > end:
            raise DomainError(f"start {start} exceeds end {end}")
        if not isinstance(self.steps, int) or self.steps < 1:
            raise DomainError(f"steps must be an integer >= 1, got {self.steps!r}")
        fixed = _require_finite("fixed_gain", self.fixed_gain, minimum=0.0)
        if not isinstance(self.budget, PowerBudget):
            raise DomainError("budget must be a PowerBudget")
        if not isinstance(self.power_mode, PowerMode):
            raise DomainError("power_mode must be a PowerMode")
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "end", end)
        object.__setattr__(self, "fixed_gain", fixed)
        object.__setattr__(self, "symmetric", bool(self.symmetric))


@dataclass(frozen=True, slots=True)
class SweepRow:
    """One abscissa of a sweep with everything needed to plot it."""

    x: float
    achievable: RateValue
    upper_bound: RateValue
    p1: float
    p2: float
    branch: BranchLabel


def _gains_at(spec: SweepSpec, x: float) -> ChannelGains:
    if spec.symmetric:
        return ChannelGains(x, x)
    if spec.param == "a":
        return ChannelGains(x, spec.fixed_gain)
    return ChannelGains(spec.fixed_gain, x)


def run_sweep(spec: SweepSpec) -> list[SweepRow]:
    """Evaluate `spec`, returning steps+1 rows in ascending abscissa.

    A degenerate range (start == end) collapses to the single row the
    single-point commands would produce.
    """
    if spec.start == spec.end:
        xs = [spec.start]
    else:
        span = spec.end - spec.start
        xs = [spec.start + span * (k / spec.steps) for k in range(spec.steps + 1)]

    rows: list[SweepRow] = []
    for x in xs:
        gains = _gains_at(spec, x)
        if spec.power_mode is PowerMode.OPTIMAL_CONTROL:
            result = optimal_allocation(gains, spec.budget)
            alloc, rate, branch = result.alloc, result.rate, result.branch
        else:
            alloc = PowerAllocation(spec.budget.p1_max, spec.budget.p2_max)
            rate, branch = achievable_rate(gains, alloc)
        upper = sato_upper_bound(gains, spec.budget).final_bound
        if rate.value > upper.value + _SOUNDNESS_TOL:
            raise InvariantViolation(
                f"achievable {rate.value} exceeds bound {upper.value} at x={x}"
            )
        rows.append(SweepRow(x, rate, upper, alloc.p1, alloc.p2, branch))
    return rows


def render_csv(rows: list[SweepRow]) -> str:
    """Serialize rows to the fixed CSV schema (trailing newline included)."""
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(
            f"{r.x:.12g},{r.achievable.value:.12g},{r.upper_bound.value:.12g},"
            f"{r.p1:.12g},{r.p2:.12g},{r.branch}"
        )
    return "\n".join(lines) + "\n"
