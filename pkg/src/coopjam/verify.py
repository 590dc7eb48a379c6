"""Seeded invariant checks cross-validating the closed forms against oracles.

Each check draws its own samples from a seeded generator, returns the
violations it found (as human-readable strings), and never raises on a
violation, so a runner can report everything at once.  The same
functions back both the command-line `verify` subcommand and the
acceptance test suite; only the sample counts differ.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .achievable import achievable_rate, wiretap_capacity
from .bound import rho_min_oracle, rho_star, sato_f, sato_upper_bound
from .model import ChannelGains, PowerAllocation, PowerBudget
from .power import asymptotic_rate, grid_search_allocation, optimal_allocation

__all__ = [
    "CheckResult",
    "asymptotics_check",
    "continuity_check",
    "interferer_off_check",
    "power_oracle_check",
    "rho_star_check",
    "run_all",
    "soundness_check",
]

SOUNDNESS_TOL = 1e-9
ORACLE_RATE_TOL = 2e-3
GRID_EXCESS_TOL = 1e-9
RHO_F_TOL = 1e-8
STATIONARITY_TOL = 1e-6
DEGENERATION_TOL = 1e-12
CONTINUITY_PROBE = 1e-7
CONTINUITY_TOL = 1e-5
ASYMPTOTIC_TOL = 1e-2
ASYMPTOTIC_BUDGET = 1e8
LINE_MARGIN = 0.05


@dataclass
class CheckResult:
    """Outcome of one check: its name, sample count, and any violations."""

    name: str
    samples: int
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _random_gains(rng: np.random.Generator) -> ChannelGains:
    return ChannelGains(rng.uniform(0.05, 5.0), rng.uniform(0.05, 5.0))


def _random_budget(rng: np.random.Generator) -> PowerBudget:
    return PowerBudget(rng.uniform(0.1, 10.0), rng.uniform(0.1, 10.0))


def soundness_check(n_samples: int, seed: int) -> CheckResult:
    """Every achievable rate at a feasible allocation stays below the bound."""
    rng = np.random.default_rng(seed)
    result = CheckResult("soundness", n_samples)
    for _ in range(n_samples):
        gains = _random_gains(rng)
        budget = _random_budget(rng)
        alloc = PowerAllocation(
            rng.uniform(0.0, budget.p1_max), rng.uniform(0.0, budget.p2_max)
        )
        rate, _ = achievable_rate(gains, alloc)
        upper = sato_upper_bound(gains, budget).final_bound
        if rate.value > upper.value + SOUNDNESS_TOL:
            result.violations.append(
                f"rate {rate.value} > bound {upper.value} at {gains}, {alloc}"
            )
    return result


def power_oracle_check(n_configs: int, seed: int, n_steps: int = 300) -> CheckResult:
    """Closed-form power control agrees with the augmented-lattice maximum.

    The lattice contains the closed-form operating point by
    construction, so the grid can fall short of the closed form only by
    its own resolution, and must never beat it materially: a grid win
    beyond tolerance would mean the case analysis is not optimal.
    """
    rng = np.random.default_rng(seed)
    result = CheckResult("power-oracle", n_configs)
    for _ in range(n_configs):
        gains = _random_gains(rng)
        budget = _random_budget(rng)
        closed = optimal_allocation(gains, budget)
        grid = grid_search_allocation(gains, budget, n_steps)
        diff = closed.rate.value - grid.rate.value
        if abs(diff) > ORACLE_RATE_TOL:
            result.violations.append(
                f"closed {closed.rate.value} vs grid {grid.rate.value} at {gains}, {budget}"
            )
        if diff < -GRID_EXCESS_TOL:
            result.violations.append(
                f"grid beats closed form by {-diff} at {gains}, {budget}"
            )
    return result


def rho_star_check(n_points: int, seed: int) -> CheckResult:
    """Closed-form correlation minimizer matches the golden-section oracle."""
    rng = np.random.default_rng(seed)
    result = CheckResult("rho-star", n_points)
    h = 1e-6
    for _ in range(n_points):
        while True:
            gains = _random_gains(rng)
            alloc = PowerAllocation(rng.uniform(0.0, 10.0), rng.uniform(0.0, 10.0))
            s = gains.a**0.5 * alloc.p1 + gains.b**0.5 * alloc.p2
            if s > 1e-3:
                break
        star = rho_star(gains, alloc)
        numeric = rho_min_oracle(gains, alloc)
        f_star = sato_f(gains, alloc, star)
        f_numeric = sato_f(gains, alloc, numeric)
        if abs(f_star - f_numeric) > RHO_F_TOL:
            result.violations.append(
                f"|f(rho*) - f(oracle)| = {abs(f_star - f_numeric)} at {gains}, {alloc}"
            )
        slope = (
            sato_f(gains, alloc, star.rho + h) - sato_f(gains, alloc, star.rho - h)
        ) / (2.0 * h)
        if abs(slope) > STATIONARITY_TOL:
            result.violations.append(
                f"|df/drho| = {abs(slope)} at rho*={star.rho} for {gains}, {alloc}"
            )
    return result


def interferer_off_check(n_points: int, seed: int) -> CheckResult:
    """With the jammer silent, every branch collapses to the wiretap baseline."""
    rng = np.random.default_rng(seed)
    result = CheckResult("interferer-off", n_points)
    for _ in range(n_points):
        a = rng.uniform(0.0, 5.0)
        b = rng.uniform(0.0, 8.0)
        p1 = rng.uniform(0.0, 10.0)
        rate, _ = achievable_rate(ChannelGains(a, b), PowerAllocation(p1, 0.0))
        baseline = wiretap_capacity(a, p1)
        if abs(rate.value - baseline.value) > DEGENERATION_TOL:
            result.violations.append(
                f"|rate - wiretap| = {abs(rate.value - baseline.value)} at a={a}, b={b}, p1={p1}"
            )
    return result


def continuity_check(n_points: int, seed: int) -> CheckResult:
    """The rate is continuous across every piecewise boundary.

    Cycles through the six boundary families (b = 1+P1, b = 1, b =
    beta1, b = beta2, a = 1, a = 1+P2), probing each sampled boundary
    from both sides.
    """
    rng = np.random.default_rng(seed)
    result = CheckResult("continuity", n_points)
    eps = CONTINUITY_PROBE

    def rate(a: float, b: float, p1: float, p2: float) -> float:
        r, _ = achievable_rate(ChannelGains(a, b), PowerAllocation(p1, p2))
        return r.value

    for i in range(n_points):
        kind = i % 6
        p1 = rng.uniform(0.1, 10.0)
        p2 = rng.uniform(0.1, 10.0)
        if kind == 0:  # b = 1 + P1, either regime
            a = rng.uniform(0.05, 5.0)
            lo, hi = rate(a, 1.0 + p1 - eps, p1, p2), rate(a, 1.0 + p1 + eps, p1, p2)
            where = f"b=1+P1, a={a}"
        elif kind == 1:  # b = 1
            a = rng.uniform(0.05, 5.0)
            lo, hi = rate(a, 1.0 - eps, p1, p2), rate(a, 1.0 + eps, p1, p2)
            where = f"b=1, a={a}"
        elif kind == 2:  # b = beta1, needs a < 1
            a = rng.uniform(0.05, 0.95)
            b0 = (1.0 + p1) / (1.0 + a * p1)
            lo, hi = rate(a, b0 - eps, p1, p2), rate(a, b0 + eps, p1, p2)
            where = f"b=beta1={b0}, a={a}"
        elif kind == 3:  # b = beta2, needs a < 1
            a = rng.uniform(0.05, 0.95)
            b0 = a * (1.0 + p1) / (1.0 + a * p1 + (1.0 - a) * p2)
            lo, hi = rate(a, b0 - eps, p1, p2), rate(a, b0 + eps, p1, p2)
            where = f"b=beta2={b0}, a={a}"
        elif kind == 4:  # a = 1
            b = rng.uniform(0.0, 5.0)
            lo, hi = rate(1.0 - eps, b, p1, p2), rate(1.0 + eps, b, p1, p2)
            where = f"a=1, b={b}"
        else:  # a = 1 + P2
            p2 = rng.uniform(0.1, 3.5)
            b = rng.uniform(0.0, 5.0)
            a0 = 1.0 + p2
            lo, hi = rate(a0 - eps, b, p1, p2), rate(a0 + eps, b, p1, p2)
            where = f"a=1+P2={a0}, b={b}"
        if abs(hi - lo) > CONTINUITY_TOL:
            result.violations.append(
                f"jump {abs(hi - lo)} across {where}, p1={p1}, p2={p2}"
            )
    return result


def asymptotics_check(n_points: int, seed: int) -> CheckResult:
    """Power control at a huge budget approaches the unconstrained limit.

    Samples stay at least 0.05 away from the lines b = 1, ab = 1 and
    b = 1/a, where the limit function switches branch.
    """
    rng = np.random.default_rng(seed)
    result = CheckResult("asymptotics", n_points)
    budget = PowerBudget(ASYMPTOTIC_BUDGET, ASYMPTOTIC_BUDGET)
    for _ in range(n_points):
        while True:
            gains = _random_gains(rng)
            a, b = gains.a, gains.b
            if (
                abs(b - 1.0) >= LINE_MARGIN
                and abs(a * b - 1.0) >= LINE_MARGIN
                and abs(b - 1.0 / a) >= LINE_MARGIN
            ):
                break
        limit = asymptotic_rate(gains)
        attained = optimal_allocation(gains, budget).rate
        if abs(attained.value - limit.value) > ASYMPTOTIC_TOL:
            result.violations.append(
                f"|rate {attained.value} - limit {limit.value}| at {gains}"
            )
    return result


def run_all(samples: int, seed: int, grid_steps: int = 300) -> list[CheckResult]:
    """Run every check, scaling the heavier ones down from `samples`."""
    return [
        soundness_check(samples, seed),
        power_oracle_check(max(10, samples // 20), seed + 1, grid_steps),
        rho_star_check(max(50, samples // 4), seed + 2),
        interferer_off_check(max(100, samples // 2), seed + 3),
        continuity_check(max(60, samples // 10), seed + 4),
        asymptotics_check(max(40, samples // 10), seed + 5),
    ]
