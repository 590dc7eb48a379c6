import pytest

from coopjam.achievable import achievable_rate
from coopjam.bound import sato_upper_bound
from coopjam.model import ChannelGains, DomainError, PowerAllocation, PowerBudget
from coopjam.power import optimal_allocation
from coopjam.sweep import (
    CSV_HEADER,
    PowerMode,
    SweepSpec,
    render_csv,
    run_sweep,
)


def symmetric_spec(**overrides):
    base = dict(
        param="a",
        start=0.0,
        end=4.0,
        steps=400,
        budget=PowerBudget(2.0, 2.0),
        symmetric=True,
    )
    base.update(overrides)
    return SweepSpec(**base)


def test_row_count_and_endpoints():
    rows = run_sweep(symmetric_spec())
    assert len(rows) == 401
    assert rows[0].x == 0.0
    assert rows[-1].x == 4.0
    assert rows[-1].achievable.value == 0.0


def test_rows_ascend_and_stay_sound():
    rows = run_sweep(symmetric_spec(steps=80))
    xs = [r.x for r in rows]
    assert xs == sorted(xs)
    for r in rows:
        assert r.achievable.value <= r.upper_bound.value + 1e-9


def test_degenerate_range_collapses_to_single_point():
    spec = SweepSpec(
        param="a",
        start=0.7,
        end=0.7,
        steps=1,
        budget=PowerBudget(2.0, 2.0),
        fixed_gain=1.3,
    )
    rows = run_sweep(spec)
    assert len(rows) == 1
    gains = ChannelGains(0.7, 1.3)
    expected = optimal_allocation(gains, PowerBudget(2.0, 2.0))
    assert rows[0].achievable.value == expected.rate.value
    assert rows[0].p1 == expected.alloc.p1
    assert rows[0].p2 == expected.alloc.p2
    assert (
        rows[0].upper_bound.value
        == sato_upper_bound(gains, PowerBudget(2.0, 2.0)).final_bound.value
    )


def test_full_power_mode_pins_the_allocation():
    rows = run_sweep(symmetric_spec(steps=40, power_mode=PowerMode.FULL_POWER))
    for r in rows:
        assert r.p1 == 2.0 and r.p2 == 2.0
        expected, _ = achievable_rate(
            ChannelGains(r.x, r.x), PowerAllocation(2.0, 2.0)
        )
        assert r.achievable.value == expected.value


def test_b_sweep_uses_fixed_a():
    spec = SweepSpec(
        param="b",
        start=0.0,
        end=4.0,
        steps=40,
        budget=PowerBudget(2.0, 2.0),
        fixed_gain=0.6,
    )
    rows = run_sweep(spec)
    assert len(rows) == 41
    # Spot-check one row against a direct evaluation at (a=0.6, b=x).
    row = rows[20]
    direct = optimal_allocation(ChannelGains(0.6, row.x), PowerBudget(2.0, 2.0))
    assert row.achievable.value == direct.rate.value


def test_csv_shape_and_determinism():
    rows = run_sweep(symmetric_spec(steps=25))
    text = render_csv(rows)
    again = render_csv(run_sweep(symmetric_spec(steps=25)))
    assert text == again
    lines = text.split("\n")
    assert lines[0] == CSV_HEADER
    assert lines[-1] == ""  # trailing newline
    assert len(lines) == 25 + 3  # header + 26 rows + empty tail
    assert "\r" not in text
    first = lines[1].split(",")
    assert len(first) == 6
    float(first[0]), float(first[1]), float(first[2])
    assert first[5].count("-") == 1


def test_spec_validation():
    with pytest.raises(DomainError):
        SweepSpec(param="c", start=0.0, end=1.0, steps=3, budget=PowerBudget(1, 1))
    with pytest.raises(DomainError):
        SweepSpec(param="a", start=2.0, end=1.0, steps=3, budget=PowerBudget(1, 1))
    with pytest.raises(DomainError):
        SweepSpec(param="a", start=0.0, end=1.0, steps=0, budget=PowerBudget(1, 1))
    with pytest.raises(DomainError):
        SweepSpec(param="a", start=-1.0, end=1.0, steps=3, budget=PowerBudget(1, 1))
