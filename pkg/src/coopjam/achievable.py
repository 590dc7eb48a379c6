"""Achievable secrecy rate of the jammer-assisted wiretap channel.

The rate is a piecewise expression over the eavesdropper gain `a` and
the interference gain `b`.  Three regimes exist in `a`:

* ZERO       (a >= 1 + P2): the jammer cannot mask the transmitter at
  all; no positive rate is achievable.
* REGIME_I   (1 <= a < 1 + P2): the eavesdropper's direct channel is
  stronger, secrecy comes entirely from jamming.
* REGIME_II  (a < 1): the legitimate channel is stronger to begin with.

Within each regime, sub-cases over `b` select between the receiver
decoding-and-cancelling the jamming signal, decoding it jointly, or
treating it as noise.  The selection thresholds for REGIME_II are
`beta1` and `beta2`.

All functions are pure and thread-safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .model import (
    ChannelGains,
    PowerAllocation,
    RateValue,
    _require_finite,
    gauss_cap,
    pos_part,
)

__all__ = [
    "BranchLabel",
    "Regime",
    "Thresholds",
    "achievable_rate",
    "wiretap_capacity",
]

# Sub-cases that compute an unclipped difference must stay nonnegative on
# their own interval; anything below this is a branch-selection bug.
_NEG_TOL = -1e-9


class Regime(Enum):
    """Which of the three `a`-regimes produced a rate."""

    ZERO = "ZERO"
    REGIME_I = "I"
    REGIME_II = "II"


_MAX_SUB_CASE = {Regime.ZERO: 1, Regime.REGIME_I: 3, Regime.REGIME_II: 4}


@dataclass(frozen=True, slots=True)
class BranchLabel:
    """Identifies the exact piecewise branch that produced a rate."""

    regime: Regime
    sub_case: int

    def __post_init__(self) -> None:
        if not isinstance(self.regime, Regime):
            raise TypeError(f"regime must be a Regime, got {self.regime!r}")
        if not 1 <= self.sub_case <= _MAX_SUB_CASE[self.regime]:
            raise ValueError(
                f"sub_case {self.sub_case} invalid for regime {self.regime.value}"
            )

    def __str__(self) -> str:
        return f"{self.regime.value}-{self.sub_case}"


@dataclass(frozen=True, slots=True)
class Thresholds:
    """Interference-gain cutoffs between the REGIME_II sub-cases.

    beta1 separates joint decoding from the cancel-free middle branch,
    beta2 separates that branch from treating the jamming as noise.
    For a < 1 they satisfy beta2 <= 1 <= beta1 <= 1 + P1; at a == 1 both
    collapse to 1.  Only meaningful for a <= 1.
    """

    beta1: float
    beta2: float

    @classmethod
    def at(cls, gains: ChannelGains, alloc: PowerAllocation) -> "Thresholds":
        a, p1, p2 = gains.a, alloc.p1, alloc.p2
        beta1 = (1.0 + p1) / (1.0 + a * p1)
        den = 1.0 + a * p1 + (1.0 - a) * p2
        # den > 0 holds for every a <= 1; for a > 1 the threshold is moot.
        beta2 = a * (1.0 + p1) / den if den > 0.0 else math.inf
        return cls(beta1, beta2)


def achievable_rate(
    gains: ChannelGains, alloc: PowerAllocation
) -> tuple[RateValue, BranchLabel]:
    """Secrecy rate guaranteed at a fixed power operating point.

    Returns the rate together with the branch that applied.  Interval
    ties follow the stated inequality directions (left-closed), so the
    label is deterministic; the rate itself is continuous across every
    boundary.
    """
    a, b = gains.a, gains.b
    p1, p2 = alloc.p1, alloc.p2

    if a >= 1.0 + p2:
        return RateValue(0.0), BranchLabel(Regime.ZERO, 1)

    if a >= 1.0:
        regime = Regime.REGIME_I
        if b >= 1.0 + p1:
            raw = gauss_cap(p1) - gauss_cap(a * p1 / (1.0 + p2))
            sub = 1
        elif b >= 1.0:
            raw = pos_part(gauss_cap(p1 + b * p2) - gauss_cap(a * p1 + p2))
            sub = 2
        else:
            raw = pos_part(
                gauss_cap(p1 / (1.0 + b * p2)) - gauss_cap(a * p1 / (1.0 + p2))
            )
            sub = 3
    else:
        regime = Regime.REGIME_II
        th = Thresholds.at(gains, alloc)
        if b >= 1.0 + p1:
            raw = gauss_cap(p1) - gauss_cap(a * p1 / (1.0 + p2))
            sub = 1
        elif b >= th.beta1:
            raw = gauss_cap(p1 + b * p2) - gauss_cap(a * p1 + p2)
            sub = 2
        elif b >= th.beta2:
            raw = gauss_cap(p1) - gauss_cap(a * p1)
            sub = 3
        else:
            raw = gauss_cap(p1 / (1.0 + b * p2)) - gauss_cap(a * p1 / (1.0 + p2))
            sub = 4

    # The unclipped sub-cases are nonnegative on their own intervals; a
    # materially negative value means the wrong branch was selected.
    assert raw >= _NEG_TOL, (
        f"negative rate {raw} in branch {regime.value}-{sub} "
        f"at a={a}, b={b}, p1={p1}, p2={p2}"
    )
    return RateValue(raw if raw > 0.0 else 0.0), BranchLabel(regime, sub)


def wiretap_capacity(a: float, p1: float) -> RateValue:
    """Secrecy capacity with the jammer silent: [g(p1) - g(a*p1)]+.

    Positive only when the eavesdropper's gain `a` is below one.
    """
    a = _require_finite("gain a", a, minimum=0.0)
    p1 = _require_finite("p1", p1, minimum=0.0)
    return RateValue(pos_part(gauss_cap(p1) - gauss_cap(a * p1)))
