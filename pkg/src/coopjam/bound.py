"""Genie-aided upper bound on the secrecy capacity.

The bound hands the eavesdropper's observation to the receiver as side
information.  Its value depends on the correlation `rho` between the
two receivers' (unit-variance) noises, which the bound is free to
minimize over because capacity depends on the marginals only.  The
conditional mutual information is

    f(P1, P2, rho) = (1/2) log2( (A*B - (rho + s)^2) / ((1 - rho^2) * B) )

with A = 1 + P1 + b*P2, B = 1 + a*P1 + P2 and s = sqrt(a)*P1 +
sqrt(b)*P2.  f is convex in rho with a closed-form minimizer rho_star,
and increasing in both powers, so the bound evaluates at full budgets.
The final capacity bound additionally caps this with the jamming-free
direct-link capacity g(P1_max).

`rho_min_oracle` re-derives the minimizer numerically (golden-section
over the convex profile) and exists purely to cross-check rho_star.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import (
    ChannelGains,
    DomainError,
    InvariantViolation,
    PowerAllocation,
    PowerBudget,
    RateValue,
    gauss_cap,
    pos_part,
)

__all__ = [
    "NoiseCorrelation",
    "SatoEvaluation",
    "rho_min_oracle",
    "rho_star",
    "sato_f",
    "sato_upper_bound",
]

# f is singular at rho = +-1; the numeric search stays this far inside,
# and a closed-form minimizer closer than this to 1 switches the bound
# evaluation to the cancelled quotient.
_RHO_EDGE = 1e-9
_RHO_CLAMP = 1.0 - 1e-12
# Below this combined cross-amplitude the minimizer formula is 0/0 while
# f itself is well defined (and minimized at rho = 0).
_DEGENERATE_S = 1e-12

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True, slots=True)
class NoiseCorrelation:
    """Correlation between the two receivers' noise variables, in (-1, 1)."""

    rho: float

    def __post_init__(self) -> None:
        try:
            r = float(self.rho)
        except (TypeError, ValueError) as exc:
            raise DomainError(f"rho must be a real number, got {self.rho!r}") from exc
        if not math.isfinite(r) or not -1.0 < r < 1.0:
            raise DomainError(f"rho must lie strictly inside (-1, 1), got {r!r}")
        object.__setattr__(self, "rho", r)


@dataclass(frozen=True, slots=True)
class SatoEvaluation:
    """Full breakdown of the bound at a budget.

    final_bound = min(r_u, g(p1_max)) clipped at zero, where r_u is the
    genie term f evaluated at full budgets and the minimizing rho.
    """

    rho_star: NoiseCorrelation
    f_at_star: float
    r_u: float
    final_bound: RateValue
    discriminant: float


def _rho_value(rho: float | NoiseCorrelation) -> float:
    if isinstance(rho, NoiseCorrelation):
        return rho.rho
    try:
        return float(rho)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"rho must be a real number, got {rho!r}") from exc


def sato_f(
    gains: ChannelGains, alloc: PowerAllocation, rho: float | NoiseCorrelation
) -> float:
    """The genie-aided conditional mutual information at one (powers, rho) point."""
    r = _rho_value(rho)
    if not math.isfinite(r) or abs(r) >= 1.0:
        raise DomainError(f"rho must lie strictly inside (-1, 1), got {r!r}")
    a, b = gains.a, gains.b
    p1, p2 = alloc.p1, alloc.p2
    eave = 1.0 + a * p1 + p2
    s = math.sqrt(a) * p1 + math.sqrt(b) * p2
    num = (1.0 + p1 + b * p2) * eave - (r + s) ** 2
    if num <= 0.0:
        # Analytically impossible for |rho| < 1; report, never clamp.
        raise InvariantViolation(
            f"nonpositive log argument {num} at a={a}, b={b}, p1={p1}, p2={p2}, rho={r}"
        )
    return 0.5 * math.log2(num / ((1.0 - r * r) * eave))


def _star_parts(
    a: float, b: float, p1: float, p2: float
) -> tuple[float, float, float, float, float]:
    """Shared pieces of the minimizer: s, m, the two discriminant factors, delta.

    The factors equal m - 2s and m + 2s but are computed as sums of
    nonnegative products, so delta = lo * hi cannot go negative through
    cancellation.
    """
    ra, rb = math.sqrt(a), math.sqrt(b)
    s = ra * p1 + rb * p2
    cross = (math.sqrt(a * b) - 1.0) ** 2 * p1 * p2
    m = (1.0 + a) * p1 + (1.0 + b) * p2 + cross
    d_lo = (ra - 1.0) ** 2 * p1 + (rb - 1.0) ** 2 * p2 + cross
    d_hi = (ra + 1.0) ** 2 * p1 + (rb + 1.0) ** 2 * p2 + cross
    delta = d_lo * d_hi
    assert delta >= -1e-12, f"negative discriminant {delta}"
    return s, m, d_lo, d_hi, max(delta, 0.0)


def rho_star(gains: ChannelGains, alloc: PowerAllocation) -> NoiseCorrelation:
    """Closed-form minimizer of f over rho for fixed powers.

    Computed in the conjugate form 2s / (m + sqrt(delta)), which avoids
    the cancellation the quoted difference form suffers for small s.
    The result lies in (0, 1]; exactly 1 occurs only on the degraded
    line and is clamped just inside the open interval.  With both
    cross-amplitudes zero f's minimum sits at rho = 0, which is returned
    directly.
    """
    s, m, _, _, delta = _star_parts(gains.a, gains.b, alloc.p1, alloc.p2)
    if s <= _DEGENERATE_S:
        return NoiseCorrelation(0.0)
    raw = 2.0 * s / (m + math.sqrt(delta))
    return NoiseCorrelation(min(raw, _RHO_CLAMP))


def rho_min_oracle(
    gains: ChannelGains, alloc: PowerAllocation, *, tol: float = 1e-10
) -> NoiseCorrelation:
    """Numeric minimizer of f over rho, independent of the closed form.

    Golden-section search over [-1 + 1e-9, 1 - 1e-9]; convexity of f in
    rho guarantees convergence.  When the two probes tie exactly the
    minimum lies between them, so both ends contract; a constant profile
    therefore converges to the midpoint 0.
    """
    lo, hi = -1.0 + _RHO_EDGE, 1.0 - _RHO_EDGE

    def f(r: float) -> float:
        return sato_f(gains, alloc, r)

    c = hi - _INV_PHI * (hi - lo)
    d = lo + _INV_PHI * (hi - lo)
    fc, fd = f(c), f(d)
    while hi - lo > tol:
        if fc < fd:
            hi, d, fd = d, c, fc
            c = hi - _INV_PHI * (hi - lo)
            fc = f(c)
        elif fd < fc:
            lo, c, fc = c, d, fd
            d = lo + _INV_PHI * (hi - lo)
            fd = f(d)
        else:
            lo, hi = c, d
            c = hi - _INV_PHI * (hi - lo)
            d = lo + _INV_PHI * (hi - lo)
            fc, fd = f(c), f(d)
    return NoiseCorrelation(0.5 * (lo + hi))


def _f_at_star_cancelled(
    a: float,
    b: float,
    p1: float,
    p2: float,
    s: float,
    m: float,
    d_lo: float,
    d_hi: float,
    rho: float,
) -> float:
    """f at the closed-form minimizer with the vanishing root cancelled.

    At the minimizer, the (1 - rho) factor of the denominator shares a
    root with the numerator as the degraded line is approached, so the
    raw quotient degenerates to 0/0 noise there.  Writing u = sqrt(A*B)
    - s, the shared sqrt(u - 1) factor cancels algebraically:

        (u - rho) / (1 - rho)
            = (sqrt(d_lo)*(u+1)*(u+2s)/t + u*sqrt(d_hi))
              / (sqrt(d_lo) + sqrt(d_hi)),   t = u + 1 + 2s

    which is exact for every interior minimizer and finite at u = 1.
    """
    u = (m + 1.0) / (math.sqrt(s * s + m + 1.0) + s)
    t = u + 1.0 + 2.0 * s
    r_lo, r_hi = math.sqrt(d_lo), math.sqrt(d_hi)
    ratio = (r_lo * (u + 1.0) * (u + 2.0 * s) / t + u * r_hi) / (r_lo + r_hi)
    eave = 1.0 + a * p1 + p2
    return 0.5 * math.log2(ratio * (u + 2.0 * s + rho) / ((1.0 + rho) * eave))


def sato_upper_bound(gains: ChannelGains, budget: PowerBudget) -> SatoEvaluation:
    """Evaluate the capacity upper bound at full budgets.

    f increases in both powers, so the inner maximization sits at the
    budget corner; the outer minimization over rho is the closed form.
    Within 1e-9 of rho = 1 the quotient is evaluated in cancelled form
    (see `_f_at_star_cancelled`), keeping the bound exact on and near
    the degraded line.
    """
    a, b = gains.a, gains.b
    p1, p2 = budget.p1_max, budget.p2_max
    full = PowerAllocation(p1, p2)
    s, m, d_lo, d_hi, delta = _star_parts(a, b, p1, p2)

    if s <= _DEGENERATE_S:
        rho_val = 0.0
        f_at = sato_f(gains, full, 0.0)
    else:
        raw = 2.0 * s / (m + math.sqrt(delta))
        if raw >= 1.0 - _RHO_EDGE:
            f_at = _f_at_star_cancelled(a, b, p1, p2, s, m, d_lo, d_hi, raw)
        else:
            f_at = sato_f(gains, full, raw)
        rho_val = min(raw, _RHO_CLAMP)

    r_u = f_at
    final = pos_part(min(r_u, gauss_cap(p1)))
    return SatoEvaluation(NoiseCorrelation(rho_val), f_at, r_u, RateValue(final), delta)
