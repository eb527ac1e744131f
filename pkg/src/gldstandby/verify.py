"""Self-check suites bundled with the CLI ``verify`` command."""
from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import goldens
from .gld import REFERENCE_COMPONENT, REFERENCE_SWITCH, GldParams, hazard, mean, mixture_weights
from .mcsim import SimConfig, simulate_imperfect, simulate_perfect
from .sensitivity import ParamId, Target, mttf_partial, sensitivity_table
from .sumdist import mixture_mean, mixture_mgf, sum_distribution
from .sysrel import (
    Imperfect,
    SystemConfig,
    lindley_printed_formula,
    mttf_perfect,
    reliability_exponential,
    reliability_imperfect_lower,
    reliability_lindley,
    reliability_perfect_closed,
    reliability_perfect_quadrature,
)

# Representative hazard-shape parameters (no published values exist for them).
HAZARD_GRID = np.geomspace(1e-3, 50.0, 200)
HAZARD_THETAS = (0.5, 1.0, 2.0)
HAZARD_GAMMAS = (1.0, 1.5, 3.0)
HAZARD_ETAS = (1.0, 2.2)
INCREASING_SHAPES = (1.5, 2.0, 3.0)
DECREASING_SHAPES = (0.3, 0.6)
MIXED_SHAPES = ((0.3, 1.5), (0.3, 3.0), (0.5, 3.0), (0.6, 2.0), (0.6, 3.0))

# sums of O(100) log-space terms equal to 1 carry a few ulps of rounding
ORDER_SLACK = 1e-14


@dataclass
class SuiteResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0


def _hazard_diffs(p: GldParams) -> np.ndarray:
    return np.diff([hazard(p, t) for t in HAZARD_GRID])


def sign_changes(d: np.ndarray) -> int:
    s = np.sign(d[d != 0])
    return int(np.sum(s[1:] != s[:-1]))


def check_tables() -> tuple[bool, str]:
    base = SystemConfig(2, REFERENCE_COMPONENT)
    worst = 0.0
    failures = 0
    checks = [
        (ParamId.ALPHA, {REFERENCE_COMPONENT.alpha: goldens.ALPHA_ROW}, goldens.TABLE_TOL),
        (ParamId.BETA, {REFERENCE_COMPONENT.beta: goldens.BETA_ROW}, goldens.TABLE_TOL),
        (ParamId.THETA, goldens.THETA_TABLE, goldens.THETA_TABLE_TOL),
        (ParamId.GAMMA_W, goldens.GAMMA_TABLE, goldens.TABLE_TOL),
        (ParamId.ETA, goldens.ETA_TABLE, goldens.TABLE_TOL),
    ]
    count = 0
    for param, table, tol in checks:
        tab = sensitivity_table(Target.MTTF, param, list(table), goldens.N_COLUMNS, base)
        values, _, cells = tab.grid()
        for v, row in zip(values, cells):
            for got, want in zip(row, table[v]):
                err = abs(got - want)
                worst = max(worst, err / tol)
                failures += err > tol
                count += 1
    return failures == 0, f"{count} entries, worst error {worst:.2f} x tolerance"


def check_closed_vs_quadrature() -> tuple[bool, str]:
    worst = 0.0
    for n in range(1, 11):
        cfg = SystemConfig(n, REFERENCE_COMPONENT)
        for t in np.linspace(10, 100, 10):
            worst = max(worst, abs(reliability_perfect_closed(cfg, t) - reliability_perfect_quadrature(cfg, t)))
    return worst <= 1e-8, f"max |closed - quadrature| = {worst:.2e} (tol 1e-8)"


def check_special_cases() -> tuple[bool, str]:
    exp_err = 0.0
    for n, th, t in itertools.product((1, 2, 5, 10), (0.25, 0.5, 1.0), (0.5, 5.0, 20.0)):
        cfg = SystemConfig(n, GldParams(1.0, 1.0, th, 1.5, 2.2))
        exp_err = max(exp_err, abs(reliability_perfect_closed(cfg, t) - reliability_exponential(n, th, t)))
    lin_err = 0.0
    for n, th, t in itertools.product((1, 2, 3, 5), (0.5, 1.0), (1.0, 5.0)):
        cfg = SystemConfig(n, GldParams(2.0, 1.0, th, 1.0, 1.0))
        lin_err = max(lin_err, abs(reliability_lindley(n, th, t) - reliability_perfect_quadrature(cfg, t)))
    diag = reliability_lindley(1, 1.0, 1.0, diagnostics=True)
    mttf_ok = math.isclose(mttf_perfect(SystemConfig(7, GldParams(1, 1, 0.25))), 28.0, rel_tol=1e-15)
    ok = exp_err <= 1e-12 and lin_err <= 1e-10 and abs(diag.discrepancy) > 1e-3 and mttf_ok
    return ok, (
        f"exponential {exp_err:.1e}, Lindley {lin_err:.1e}, "
        f"printed-formula discrepancy at n=1: {diag.discrepancy:.4f}"
    )


def check_mixture_mgf() -> tuple[bool, str]:
    p = REFERENCE_COMPONENT
    p1, p2 = mixture_weights(p)
    worst = 0.0
    for n in (1, 2, 5, 20):
        m = sum_distribution(p, n)
        for t in (-1.0, -0.1, 0.1 * p.theta):
            base = p1 * (1 - t / p.theta) ** (-p.alpha) + p2 * (1 - t / p.theta) ** (-p.beta)
            worst = max(worst, abs(mixture_mgf(m, t) / base**n - 1))
        worst = max(worst, abs(math.fsum(m.weights) - 1))
        worst = max(worst, abs(mixture_mean(m) / (n * mean(p)) - 1))
    return worst <= 1e-12, f"max relative deviation {worst:.1e} (tol 1e-12)"


def check_hazard_shapes() -> tuple[bool, str]:
    problems = []
    for th, g, e in itertools.product(HAZARD_THETAS, HAZARD_GAMMAS, HAZARD_ETAS):
        const = GldParams(1.0, 1.0, th, g, e)
        if any(abs(hazard(const, t) / th - 1) > 1e-12 for t in HAZARD_GRID[::10]):
            problems.append(("constant", th))
        two = GldParams(2.0, 2.0, th, g, e)
        if any(abs(hazard(two, t) / (th * th * t / (1 + th * t)) - 1) > 1e-12 for t in HAZARD_GRID[::10]):
            problems.append(("alpha=beta=2", th))
        for a, b in itertools.product(INCREASING_SHAPES, repeat=2):
            if _hazard_diffs(GldParams(a, b, th, g, e)).min() < -1e-10:
                problems.append(("increasing", a, b, th, g, e))
        for a, b in itertools.product(DECREASING_SHAPES, repeat=2):
            if _hazard_diffs(GldParams(a, b, th, g, e)).max() > 1e-10:
                problems.append(("decreasing", a, b, th, g, e))
        for lo, hi in MIXED_SHAPES:
            for a, b in ((lo, hi), (hi, lo)):
                d = _hazard_diffs(GldParams(a, b, th, g, e))
                if sign_changes(d) != 1 or d[0] >= 0:
                    problems.append(("bathtub", a, b, th, g, e))
    return not problems, "all shape classes hold" if not problems else f"violations: {problems[:3]}"


def check_monte_carlo(reps: int, seed: int) -> tuple[bool, str]:
    worst = 0.0
    for k, n in enumerate((2, 5, 10, 20)):
        cfg = SystemConfig(n, REFERENCE_COMPONENT)
        res = simulate_perfect(cfg, SimConfig(reps, seed + k, (25.0, 50.0, 75.0, 100.0)))
        for row in res.estimates:
            worst = max(worst, abs(reliability_perfect_closed(cfg, row.t) - row.estimate) / row.stderr)
        worst = max(worst, abs(res.mttf[0] - mttf_perfect(cfg)) / res.mttf[1])
    return worst <= 4.0, f"worst deviation {worst:.2f} SE over {reps} replications (tol 4)"


def check_imperfect_bound(reps: int, seed: int) -> tuple[bool, str]:
    grid = tuple(float(t) for t in np.linspace(0, 100, 11))
    worst = -math.inf
    for k, n in enumerate((2, 10)):
        cfg = SystemConfig(n, REFERENCE_COMPONENT, Imperfect(REFERENCE_SWITCH))
        res = simulate_imperfect(cfg, SimConfig(reps, seed + 100 + k, grid))
        for row in res.estimates:
            worst = max(worst, (reliability_imperfect_lower(cfg, row.t) - row.estimate) / row.stderr)
    near = SystemConfig(5, REFERENCE_COMPONENT, Imperfect(REFERENCE_SWITCH.replace(theta=1e-12)))
    perfect = SystemConfig(5, REFERENCE_COMPONENT)
    gap = max(abs(reliability_imperfect_lower(near, t) - reliability_perfect_closed(perfect, t)) for t in grid)
    return worst <= 4.0 and gap <= 1e-9, f"bound exceeds MC by at most {worst:.2f} SE; theta_s->0 gap {gap:.1e}"


def check_curve_ordering() -> tuple[bool, str]:
    grid = np.linspace(0, 100, 201)
    ns = (2, 5, 10, 20)
    perfect = {n: [reliability_perfect_closed(SystemConfig(n, REFERENCE_COMPONENT), t) for t in grid] for n in ns}
    lower = {
        n: [
            reliability_imperfect_lower(SystemConfig(n, REFERENCE_COMPONENT, Imperfect(REFERENCE_SWITCH)), t)
            for t in grid
        ]
        for n in ns
    }
    ok = True
    for n in ns:
        ok &= all(b <= a + ORDER_SLACK for a, b in zip(perfect[n], perfect[n][1:]))
        ok &= all(b <= a + ORDER_SLACK for a, b in zip(lower[n], lower[n][1:]))
        ok &= all(lo <= pe + ORDER_SLACK for lo, pe in zip(lower[n], perfect[n]))
    for a, b in zip(ns, ns[1:]):
        ok &= all(x <= y + ORDER_SLACK for x, y in zip(perfect[a], perfect[b]))
        ok &= all(x <= y + ORDER_SLACK for x, y in zip(lower[a], lower[b]))
    return ok, "monotone in t and n; perfect dominates lower bound"


def run_suites(reps: int = 10**6, seed: int = 20240601) -> list[SuiteResult]:
    suites: list[tuple[str, Callable[[], tuple[bool, str]]]] = [
        ("sensitivity-tables", check_tables),
        ("closed-vs-quadrature", check_closed_vs_quadrature),
        ("special-cases", check_special_cases),
        ("mixture-mgf", check_mixture_mgf),
        ("hazard-shapes", check_hazard_shapes),
        ("monte-carlo-perfect", lambda: check_monte_carlo(reps, seed)),
        ("imperfect-bound", lambda: check_imperfect_bound(reps, seed)),
        ("curve-ordering", check_curve_ordering),
    ]
    out = []
    for name, fn in suites:
        start = time.perf_counter()
        passed, detail = fn()
        out.append(SuiteResult(name, bool(passed), detail, time.perf_counter() - start))
    return out
