"""Acceptance suite: one test per criterion, each reporting a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py`` (the lines are repeated in the
terminal summary) or ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import itertools
import math
import sys
import time
from pathlib import Path

import pytest

from hadamard_bounds import bounds as B
from hadamard_bounds.campaign import CampaignConfig, load_config, run_campaign
from hadamard_bounds.core import ExponentPair, FunctionSpec, Interval, midpoint_gap
from hadamard_bounds.errors import HadamardError
from hadamard_bounds.functions import affine, builtin, constant, exponential, power, square_root
from hadamard_bounds.identity import lemma1_residual
from hadamard_bounds.means import prop1_bounds, prop2_bounds
from hadamard_bounds.report import render

pytestmark = pytest.mark.acceptance

ROOT = Path(__file__).resolve().parents[1]
REFERENCE = ROOT / "configs" / "reference_campaign.json"

INTERVALS = [(0.0, 1.0), (0.5, 2.0), (1.0, 3.0)]
M_GRID = [0.25, 0.5, 1.0]
Q_GRID = [1.0, 1.5, 2.0, 3.0]
BUILTINS = [
    {"name": "power", "n": 2},
    {"name": "power", "n": 3},
    {"name": "exp", "c": 1},
    {"name": "affine", "alpha": 2, "beta": -1},
    {"name": "shifted_square", "c": 0.5},
    {"name": "sqrt"},
]

LINES: list[str] = []


def report(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    LINES.append(line)
    print(line)
    assert ok, line


def _grid_campaign(families: list[str], exponents=tuple(Q_GRID)):
    cfg = CampaignConfig(
        functions=tuple(BUILTINS),
        intervals=tuple(INTERVALS),
        m_values=tuple(M_GRID),
        exponents=tuple(exponents),
        families=tuple(families),
    )
    return run_campaign(cfg)


def test_criterion_01_golden_midpoint_gap():
    start = time.perf_counter()
    spec, iv = power(2), Interval(0.0, 1.0)
    gap = midpoint_gap(spec, iv)
    t = B.t_bounds(spec, iv, 1.0)
    slack = t.minimum - gap
    elapsed = time.perf_counter() - start
    ok = (abs(gap - 1 / 12) <= 1e-9 and abs(t.minimum - 0.25) <= 1e-12
          and abs(slack - 1 / 6) <= 1e-9 and elapsed < 1.0)
    report(1, ok, f"gap={gap:.12g} T_min={t.minimum:.12g} slack={slack:.12g} t={elapsed:.3f}s")


def test_criterion_02_kernel_identity():
    start = time.perf_counter()
    specs = [power(2, 3.0), power(3, 3.0), exponential(1.0, 3.0), affine(2.0, -1.0, 3.0)]
    worst = max(lemma1_residual(s, Interval(a, b)) for s in specs for a, b in INTERVALS)
    elapsed = time.perf_counter() - start
    report(2, worst <= 1e-8 and elapsed < 5.0, f"max residual={worst:.3e} t={elapsed:.3f}s")


def test_criterion_03_main_inequalities():
    start = time.perf_counter()
    records = _grid_campaign(["T", "U", "V"])
    elapsed = time.perf_counter() - start
    checked = [r for r in records if r.status == "ok"]
    failures = [r for r in checked if not r.slack >= -1e-8]
    errored = [r for r in records if r.status == "errored"]
    ok = checked and not failures and not errored and elapsed < 60.0
    report(3, bool(ok), f"checked={len(checked)} failures={len(failures)} errored={len(errored)} "
                        f"skipped={len(records) - len(checked) - len(errored)} t={elapsed:.2f}s")


def test_criterion_04_cross_family_identity():
    worst, compared, not_applicable = 0.0, 0, 0
    for entry, (a, b), m in itertools.product(BUILTINS, INTERVALS, M_GRID):
        spec, iv = builtin(entry, upper=b / m), Interval(a, b)
        try:
            t = B.t_bounds(spec, iv, m)
        except HadamardError:
            not_applicable += 1  # derivative not finite at a node
            continue
        v = B.v_bounds(spec, iv, m, 1.0)
        worst = max(worst, max(abs(x - y) for x, y in zip(t.values, v.values)))
        compared += 1
    report(4, worst <= 1e-12, f"max |V(q=1) - T|={worst:.3e} over {compared} points "
                              f"({not_applicable} without finite f')")


def test_criterion_05_holder_weight_bracket():
    ps = [1 + 1e-6, 1.5, 2.0, 10.0, 1e6]
    w = [B.holder_weight(p) for p in ps]
    bracket = all(0.5 < x < 1.0 for x in w)
    monotone = all(x < y for x, y in zip(w, w[1:]))
    near_half = abs(w[0] - 0.5)
    near_one = abs(1.0 - w[-1])
    ok = bracket and monotone and near_half <= 1e-5 and near_one <= 1e-5
    report(5, ok, f"bracket={bracket} monotone={monotone} |w(1+1e-6)-1/2|={near_half:.3e} "
                  f"|1-w(1e6)|={near_one:.3e} (limit tolerance 1e-5)")


def test_criterion_06_sandwich():
    s = B.dragomir_sandwich(power(2), Interval(0.0, 1.0), 1.0)
    golden = max(abs(s.left - 0.25), abs(s.middle - 1 / 3), abs(s.right - 0.5)) <= 1e-9
    # the sandwich does not involve q
    records = _grid_campaign(["sandwich"], exponents=(1.0,))
    checked = [r for r in records if r.status == "ok"]
    failures = [r for r in checked if not r.slack >= -1e-8]
    at_one = sum(1 for r in failures if r.m == 1.0)
    worst = min((r.slack for r in checked), default=0.0)
    example = ""
    if failures:
        f = min(failures, key=lambda r: r.slack)
        example = f" worst at {f.function} [{f.a}, {f.b}] m={f.m}"
    ok = golden and bool(checked) and not failures
    report(6, ok, f"golden triple={golden} certified points={len(checked)} "
                  f"violations={len(failures)} (m=1: {at_one}) min slack={worst:.4g}{example}")


def test_criterion_07_product_inequality():
    exps = ExponentPair(2.0, 2.0)
    ident = affine(1.0, 0.0)
    eq = B.product_lower_bound(ident, ident, Interval(0.0, 1.0), 1.0, exps)
    sq = power(2)
    rev = B.product_lower_bound(sq, sq, Interval(0.0, 1.0), 1.0, exps)
    ok = (eq.direction is B.Direction.GEQ and abs(eq.lhs - 0.25) <= 1e-9 and abs(eq.rhs - 0.25) <= 1e-9
          and rev.direction is B.Direction.LEQ and abs(rev.lhs - 0.0625) <= 1e-9
          and abs(rev.rhs - 0.15) <= 1e-9 and rev.lhs <= rev.rhs + 1e-9)
    report(7, ok, f"equality lhs={eq.lhs:.12g} rhs={eq.rhs:.12g}; reverse lhs={rev.lhs:.12g} rhs={rev.rhs:.12g}")


def test_criterion_08_favard_thunsdorff():
    unit = Interval(0.0, 1.0)
    base = B.favard_inequality(affine(1.0, 0.0), unit, 2.0)
    golden = abs(base.lhs - 1 / 3) <= 1e-9 and abs(base.rhs - 1 / 3) <= 1e-9
    concave = [(square_root(4.0), Interval(0.0, 4.0)), (affine(-1.0, 4.0, 4.0), Interval(0.0, 4.0)),
               (constant(2.0, 4.0), Interval(0.5, 2.0))]
    concave += [(square_root(3.0), Interval(a, b)) for a, b in INTERVALS]
    concave += [(affine(2.0, 0.0, 3.0), Interval(a, b)) for a, b in INTERVALS]
    favard_ok = all(
        (r := B.favard_inequality(s, iv, q)).direction is B.Direction.GEQ and r.holds(1e-9)
        for s, iv in concave for q in (1.0, 2.0, 3.0)
    )
    thun = B.favard_inequality(power(2), unit, 2.0)
    thun_ok = thun.direction is B.Direction.LEQ and thun.holds(1e-9)
    report(8, golden and favard_ok and thun_ok,
           f"x on [0,1]: ({base.lhs:.12g}, {base.rhs:.12g}); concave cases hold={favard_ok}; "
           f"x^2 reverse {thun.lhs:.6g} <= {thun.rhs:.6g}: {thun_ok}")


def test_criterion_09_power_gap_bounds():
    golden = prop1_bounds(1.0, 3.0, 2, 1.0)
    gold_ok = abs(golden.lhs - 1 / 3) <= 1e-12 and golden.lhs <= golden.bounds.minimum
    worst_k = worst_l = 0.0
    for n, m, (a, b) in itertools.product([2, 3, 4], M_GRID, [(1.0, 2.0), (1.0, 3.0), (0.5, 4.0)]):
        iv = Interval(a, b)
        k = prop1_bounds(a, b, n, m).bounds.values
        t = B.t_bounds(power(n, upper=b / m), iv, m).values
        worst_k = max(worst_k, max(abs(x - y) for x, y in zip(k, t)))
        for kk, q in itertools.product([1.0, 2.0], Q_GRID):
            lv = prop2_bounds(a, b, n, kk, m, q).bounds.values
            v = B.v_bounds(power(n / kk, upper=b / m), iv, m, q).values
            worst_l = max(worst_l, max(abs(x - y) for x, y in zip(lv, v)))
    ok = gold_ok and worst_k <= 1e-12 and worst_l <= 1e-12
    report(9, ok, f"lhs={golden.lhs:.15g} K_min={golden.bounds.minimum:.6g} "
                  f"max|K-T|={worst_k:.3e} max|L-V|={worst_l:.3e}")


def test_criterion_10_m1_closed_forms():
    worst = 0.0
    for entry, (a, b), q in itertools.product(BUILTINS, INTERVALS, [1.5, 2.0, 3.0]):
        spec, iv = builtin(entry, upper=b), Interval(a, b)
        try:
            t = B.t_bounds(spec, iv, 1.0).values[0]
        except HadamardError:
            continue
        u = B.u_bounds(spec, iv, 1.0, ExponentPair.from_q(q))[0].values[0]
        v = B.v_bounds(spec, iv, 1.0, q).values[0]
        worst = max(worst,
                    abs(B.specialize_m1("T", spec, iv) - t),
                    abs(B.specialize_m1("U", spec, iv, q=q) - u),
                    abs(B.specialize_m1("V", spec, iv, q=q) - v))
    # f' = (x - a)(b - x) on [a, b] = [1, 3]; |f'(2)| = 1
    a, b = 1.0, 3.0
    cubic = FunctionSpec(lambda x: -x**3 / 3 + (a + b) * x**2 / 2 - a * b * x, b,
                         lambda x: (x - a) * (b - x), "cubic")
    value = B.specialize_m1("T", cubic, Interval(a, b), "ends_zero")
    ends_ok = abs(value - (b - a) / 6 * 1.0) <= 1e-12
    report(10, worst <= 1e-12 and ends_ok,
           f"max |closed form - variant 1|={worst:.3e}; ends-zero cubic value={value:.12g} (expected {1 / 3:.12g})")


def test_criterion_11_determinism():
    start = time.perf_counter()
    cfg = load_config(REFERENCE)
    first, second = run_campaign(cfg), run_campaign(cfg)
    same = {fmt: render(first, fmt).encode() == render(second, fmt).encode() for fmt in ("csv", "json")}
    elapsed = time.perf_counter() - start
    report(11, all(same.values()), f"records={len(first)} identical={same} t={elapsed:.2f}s")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
