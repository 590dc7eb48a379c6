"""Command-line front end.

Commands:
    rate    achievable secrecy rate and branch at an explicit operating point
    power   rate-maximizing allocation for a budget (optionally grid-checked)
    bound   capacity upper-bound breakdown at a budget
    sweep   CSV table of rate and bound along one gain
    fig2/fig3/fig4
            preset sweeps with budgets (2, 2) matching the standard
            symmetric, b-versus, and a-versus parameterizations
    verify  run the seeded invariant suite; nonzero exit on any violation

Every command accepts `--config FILE` with one `key = value` per line
mirroring its long options; explicit flags override file values.
Exit codes: 0 success, 1 verification/invariant failure, 2 usage or
domain error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Any, Callable

from .achievable import achievable_rate
from .bound import sato_upper_bound
from .model import (
    ChannelGains,
    DomainError,
    InvariantViolation,
    PowerAllocation,
    PowerBudget,
    gauss_cap,
)
from .power import grid_search_allocation, optimal_allocation
from .sweep import PowerMode, SweepSpec, render_csv, run_sweep
from .verify import run_all

__all__ = ["main"]

_FIG_BUDGET = (2.0, 2.0)
_FIG_RANGE = (0.0, 4.0)
_DEFAULT_STEPS = 400
_DEFAULT_SAMPLES = 2000
_DEFAULT_GRID_STEPS = 300


def _parse_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise DomainError(f"expected a boolean, got {text!r}")


def _read_config(path: str) -> dict[str, str]:
    cfg: dict[str, str] = {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DomainError(f"cannot read config file {path}: {exc}") from exc
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise DomainError(f"{path}:{lineno}: expected 'key = value'")
        key, _, value = stripped.partition("=")
        cfg[key.strip()] = value.strip()
    return cfg


class _Options:
    """Merged view of parsed flags and config-file values."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.cfg = _read_config(args.config) if getattr(args, "config", None) else {}

    def get(
        self,
        key: str,
        cast: Callable[[str], Any],
        default: Any = None,
        required: bool = False,
    ) -> Any:
        value = getattr(self.args, key.replace("-", "_"), None)
        if value is None and key in self.cfg:
            try:
                value = cast(self.cfg[key])
            except ValueError as exc:
                raise DomainError(f"config value for {key!r}: {exc}") from exc
        if value is None:
            if required:
                raise DomainError(f"missing required option --{key}")
            value = default
        return value


def _power_mode(text: str) -> PowerMode:
    try:
        return PowerMode(text)
    except ValueError:
        raise DomainError(f"power-mode must be 'optimal' or 'full', got {text!r}")


def _emit_csv(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _cmd_rate(args: argparse.Namespace) -> int:
    opt = _Options(args)
    gains = ChannelGains(
        opt.get("a", float, required=True), opt.get("b", float, required=True)
    )
    alloc = PowerAllocation(
        opt.get("p1", float, required=True), opt.get("p2", float, required=True)
    )
    rate, branch = achievable_rate(gains, alloc)
    print(f"a = {gains.a:.12g}  b = {gains.b:.12g}  p1 = {alloc.p1:.12g}  p2 = {alloc.p2:.12g}")
    print(f"secrecy_rate = {rate.value:.12g} bit/channel use")
    print(f"branch = {branch}")
    return 0


def _cmd_power(args: argparse.Namespace) -> int:
    opt = _Options(args)
    gains = ChannelGains(
        opt.get("a", float, required=True), opt.get("b", float, required=True)
    )
    budget = PowerBudget(
        opt.get("pbar1", float, required=True), opt.get("pbar2", float, required=True)
    )
    result = optimal_allocation(gains, budget)
    print(f"p1 = {result.alloc.p1:.12g}  p2 = {result.alloc.p2:.12g}")
    print(f"secrecy_rate = {result.rate.value:.12g} bit/channel use")
    print(f"branch = {result.branch}")
    print(f"source = {result.source.value}")
    if opt.get("check-grid", _parse_bool, default=False):
        steps = opt.get("grid-steps", int, default=_DEFAULT_GRID_STEPS)
        grid = grid_search_allocation(gains, budget, steps)
        diff = result.rate.value - grid.rate.value
        print(
            f"grid_rate = {grid.rate.value:.12g} at p1 = {grid.alloc.p1:.12g}, "
            f"p2 = {grid.alloc.p2:.12g} (n_steps = {steps})"
        )
        print(f"closed_minus_grid = {diff:.3e}")
    return 0


def _cmd_bound(args: argparse.Namespace) -> int:
    opt = _Options(args)
    gains = ChannelGains(
        opt.get("a", float, required=True), opt.get("b", float, required=True)
    )
    budget = PowerBudget(
        opt.get("pbar1", float, required=True), opt.get("pbar2", float, required=True)
    )
    ev = sato_upper_bound(gains, budget)
    direct_cap = gauss_cap(budget.p1_max)
    print(f"rho_star = {ev.rho_star.rho:.12g}")
    print(f"discriminant = {ev.discriminant:.12g}")
    print(f"r_u = {ev.r_u:.12g} bit/channel use")
    print(f"direct_link_cap = {direct_cap:.12g} bit/channel use")
    print(f"final_bound = {ev.final_bound.value:.12g} bit/channel use")
    print(f"active_term = {'genie' if ev.r_u <= direct_cap else 'direct_link_cap'}")
    return 0


def _sweep_spec_from(opt: _Options) -> SweepSpec:
    symmetric = opt.get("symmetric", _parse_bool, default=False)
    param = opt.get("param", str, default="a")
    if param not in ("a", "b"):
        raise DomainError(f"param must be 'a' or 'b', got {param!r}")
    fixed = opt.get("b" if param == "a" else "a", float)
    if fixed is None:
        if not symmetric:
            raise DomainError(
                f"provide --{'b' if param == 'a' else 'a'} for the fixed gain, "
                "or --symmetric"
            )
        fixed = 0.0
    return SweepSpec(
        param=param,
        start=opt.get("from", float, required=True),
        end=opt.get("to", float, required=True),
        steps=opt.get("steps", int, default=_DEFAULT_STEPS),
        budget=PowerBudget(
            opt.get("pbar1", float, required=True),
            opt.get("pbar2", float, required=True),
        ),
        fixed_gain=fixed,
        symmetric=symmetric,
        power_mode=_power_mode(opt.get("power-mode", str, default="optimal")),
    )


def _cmd_sweep(args: argparse.Namespace) -> int:
    opt = _Options(args)
    rows = run_sweep(_sweep_spec_from(opt))
    _emit_csv(render_csv(rows), opt.get("out", str))
    return 0


def _fig_out_path(out: str | None, tag: str) -> str | None:
    if out is None:
        return None
    path = Path(out)
    return str(path.with_name(f"{path.stem}_{tag}{path.suffix or '.csv'}"))


def _run_fig_curves(
    args: argparse.Namespace, curves: list[tuple[str, SweepSpec]]
) -> int:
    opt = _Options(args)
    out = opt.get("out", str)
    multi = len(curves) > 1
    for tag, spec in curves:
        rows = run_sweep(spec)
        target = _fig_out_path(out, tag) if multi else out
        _emit_csv(render_csv(rows), target)
        if target is not None:
            print(f"wrote {target}", file=sys.stderr)
    return 0


def _fig_common(opt: _Options) -> tuple[int, PowerMode, PowerBudget]:
    steps = opt.get("steps", int, default=_DEFAULT_STEPS)
    mode = _power_mode(opt.get("power-mode", str, default="optimal"))
    return steps, mode, PowerBudget(*_FIG_BUDGET)


def _cmd_fig2(args: argparse.Namespace) -> int:
    steps, mode, budget = _fig_common(_Options(args))
    spec = SweepSpec(
        param="a",
        start=_FIG_RANGE[0],
        end=_FIG_RANGE[1],
        steps=steps,
        budget=budget,
        symmetric=True,
        power_mode=mode,
    )
    return _run_fig_curves(args, [("symmetric", spec)])


def _cmd_fig3(args: argparse.Namespace) -> int:
    steps, mode, budget = _fig_common(_Options(args))
    curves = [
        (
            f"a{fixed_a:g}",
            SweepSpec(
                param="b",
                start=_FIG_RANGE[0],
                end=_FIG_RANGE[1],
                steps=steps,
                budget=budget,
                fixed_gain=fixed_a,
                power_mode=mode,
            ),
        )
        for fixed_a in (0.6, 1.2)
    ]
    return _run_fig_curves(args, curves)


def _cmd_fig4(args: argparse.Namespace) -> int:
    steps, mode, budget = _fig_common(_Options(args))
    curves = [
        (
            f"b{fixed_b:g}",
            SweepSpec(
                param="a",
                start=_FIG_RANGE[0],
                end=_FIG_RANGE[1],
                steps=steps,
                budget=budget,
                fixed_gain=fixed_b,
                power_mode=mode,
            ),
        )
        for fixed_b in (0.2, 1.2)
    ]
    return _run_fig_curves(args, curves)


def _cmd_verify(args: argparse.Namespace) -> int:
    opt = _Options(args)
    samples = opt.get("samples", int, default=_DEFAULT_SAMPLES)
    seed = opt.get("seed", int, default=0)
    grid_steps = opt.get("grid-steps", int, default=_DEFAULT_GRID_STEPS)
    if samples < 1:
        raise DomainError(f"samples must be >= 1, got {samples}")
    print(f"seed = {seed}")
    results = run_all(samples, seed, grid_steps)
    failed = False
    for res in results:
        status = "PASS" if res.ok else "FAIL"
        print(f"{status} {res.name} (samples={res.samples})")
        if not res.ok:
            failed = True
            for violation in res.violations[:10]:
                print(f"  {violation}", file=sys.stderr)
            if len(res.violations) > 10:
                print(f"  ... {len(res.violations) - 10} more", file=sys.stderr)
    return 1 if failed else 0


def _add_config(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="key = value file mirroring the flags")


def _add_gain_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--a", type=float, help="transmitter-to-eavesdropper gain")
    parser.add_argument("--b", type=float, help="interferer-to-receiver gain")


def _add_budget_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--pbar1", type=float, help="transmitter power budget")
    parser.add_argument("--pbar2", type=float, help="interferer power budget")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coopjam",
        description=(
            "Secrecy rates, power control, and capacity bounds for the "
            "jammer-assisted Gaussian wiretap channel."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rate = sub.add_parser("rate", help="achievable rate at explicit powers")
    _add_gain_flags(p_rate)
    p_rate.add_argument("--p1", type=float, help="transmit power")
    p_rate.add_argument("--p2", type=float, help="interferer power")
    _add_config(p_rate)
    p_rate.set_defaults(handler=_cmd_rate)

    p_power = sub.add_parser("power", help="rate-maximizing allocation")
    _add_gain_flags(p_power)
    _add_budget_flags(p_power)
    p_power.add_argument(
        "--check-grid",
        action="store_const",
        const=True,
        dest="check_grid",
        help="also run the lattice oracle and report agreement",
    )
    p_power.add_argument("--grid-steps", type=int, dest="grid_steps")
    _add_config(p_power)
    p_power.set_defaults(handler=_cmd_power)

    p_bound = sub.add_parser("bound", help="capacity upper-bound breakdown")
    _add_gain_flags(p_bound)
    _add_budget_flags(p_bound)
    _add_config(p_bound)
    p_bound.set_defaults(handler=_cmd_bound)

    p_sweep = sub.add_parser("sweep", help="CSV sweep along one gain")
    p_sweep.add_argument("--param", choices=("a", "b"), help="which gain to sweep")
    p_sweep.add_argument("--from", type=float, dest="from_", help="sweep start")
    p_sweep.add_argument("--to", type=float, help="sweep end")
    p_sweep.add_argument("--steps", type=int, help="number of intervals")
    _add_gain_flags(p_sweep)
    _add_budget_flags(p_sweep)
    p_sweep.add_argument(
        "--symmetric",
        action="store_const",
        const=True,
        help="force a = b along the sweep",
    )
    p_sweep.add_argument(
        "--power-mode", choices=("optimal", "full"), dest="power_mode"
    )
    p_sweep.add_argument("--out", help="output CSV path (default: stdout)")
    _add_config(p_sweep)
    p_sweep.set_defaults(handler=_cmd_sweep)

    for name, handler, blurb in (
        ("fig2", _cmd_fig2, "symmetric a = b sweep, budgets (2, 2)"),
        ("fig3", _cmd_fig3, "sweep b at fixed a in {0.6, 1.2}, budgets (2, 2)"),
        ("fig4", _cmd_fig4, "sweep a at fixed b in {0.2, 1.2}, budgets (2, 2)"),
    ):
        p_fig = sub.add_parser(name, help=blurb)
        p_fig.add_argument("--steps", type=int)
        p_fig.add_argument(
            "--power-mode", choices=("optimal", "full"), dest="power_mode"
        )
        p_fig.add_argument("--out", help="output path; curves get a suffix per tag")
        _add_config(p_fig)
        p_fig.set_defaults(handler=handler)

    p_verify = sub.add_parser("verify", help="run the invariant suite")
    p_verify.add_argument("--samples", type=int)
    p_verify.add_argument("--seed", type=int)
    p_verify.add_argument("--grid-steps", type=int, dest="grid_steps")
    _add_config(p_verify)
    p_verify.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    # argparse stores --from as from_; expose it under the config key name.
    if hasattr(args, "from_"):
        setattr(args, "from", args.from_)
    try:
        return args.handler(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
