import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate

from gldstandby import gld
from gldstandby.errors import DomainError, UnsupportedError
from gldstandby.gld import REFERENCE_COMPONENT as P5
from gldstandby.gld import REFERENCE_SWITCH as SW5
from gldstandby.gld import GldParams
from gldstandby.mcsim import SimConfig, simulate_perfect
from gldstandby.sysrel import (
    Curve,
    CurveMethod,
    Imperfect,
    SystemConfig,
    lindley_printed_formula,
    mttf_perfect,
    reliability_curve,
    reliability_exponential,
    reliability_imperfect_lower,
    reliability_lindley,
    reliability_perfect,
    reliability_perfect_closed,
    reliability_perfect_quadrature,
    time_grid,
)

ALT = GldParams(1.0, 2.0, 1.0, 2.0, 1.0)
T_GRID = np.linspace(5, 95, 10)


def test_closed_at_zero_and_n1():
    assert reliability_perfect_closed(SystemConfig(7, P5), 0.0) == 1.0
    for t in (0.5, 3.0, 12.0):
        assert reliability_perfect_closed(SystemConfig(1, P5), t) == pytest.approx(gld.survival(P5, t), rel=1e-13)


def test_closed_refuses_noninteger_and_imperfect():
    with pytest.raises(UnsupportedError):
        reliability_perfect_closed(SystemConfig(2, P5.replace(alpha=2.5)), 1.0)
    with pytest.raises(DomainError):
        reliability_perfect_closed(SystemConfig(2, P5, Imperfect(SW5)), 1.0)
    with pytest.raises(DomainError):
        reliability_perfect_closed(SystemConfig(2, P5), -1.0)


@pytest.mark.parametrize("base", [P5, ALT], ids=["reference", "alt"])
@pytest.mark.parametrize("n", range(1, 11))
def test_closed_matches_quadrature(base, n):
    cfg = SystemConfig(n, base)
    grid = T_GRID if base is P5 else T_GRID / 5
    for t in grid:
        assert abs(reliability_perfect_closed(cfg, t) - reliability_perfect_quadrature(cfg, t)) <= 1e-8


@pytest.mark.parametrize("n", [2, 5, 10, 20])
def test_closed_against_monte_carlo(n):
    cfg = SystemConfig(n, P5)
    ts = (10.0, 25.0, 50.0, 100.0)
    res = simulate_perfect(cfg, SimConfig(10**6, 500 + n, ts))
    for row in res.estimates:
        assert abs(reliability_perfect_closed(cfg, row.t) - row.estimate) <= 4 * row.stderr
    if n in (2, 5, 10):
        assert reliability_perfect_closed(cfg, 10.0) == pytest.approx(
            reliability_perfect_quadrature(cfg, 10.0), abs=1e-8
        )


def test_closed_n20_has_no_warnings():
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("error")
        v = reliability_perfect_closed(SystemConfig(20, P5), 100.0)
    assert 0 < v < 1 and math.isfinite(v)


def test_quadrature_exponential_poisson_sum():
    v = reliability_perfect_quadrature(SystemConfig(3, GldParams(1, 1, 1.0)), 2.0)
    assert v == pytest.approx(5 * math.exp(-2), abs=1e-10)
    assert v == pytest.approx(0.676676, abs=1e-6)


def test_quadrature_n1_and_noninteger_mc():
    p = P5.replace(alpha=2.5, beta=3.3)
    assert reliability_perfect_quadrature(SystemConfig(1, p), 4.0) == pytest.approx(gld.survival(p, 4.0), rel=1e-14)
    cfg = SystemConfig(2, p)
    res = simulate_perfect(cfg, SimConfig(10**6, 31, (10.0,)))
    row = res.estimates[0]
    assert abs(reliability_perfect_quadrature(cfg, 10.0) - row.estimate) <= 4 * row.stderr


def test_dispatcher_routes_by_shape():
    assert reliability_perfect(SystemConfig(3, P5), 10.0) == reliability_perfect_closed(SystemConfig(3, P5), 10.0)
    p = P5.replace(alpha=2.5)
    assert reliability_perfect(SystemConfig(3, p), 10.0) == reliability_perfect_quadrature(SystemConfig(3, p), 10.0)


def test_exponential_examples():
    assert reliability_exponential(1, 0.3, 2.0) == pytest.approx(math.exp(-0.6), rel=1e-15)
    assert reliability_exponential(2, 1.0, 1.0) == pytest.approx(0.7357589, abs=1e-7)
    closed = reliability_perfect_closed(SystemConfig(5, GldParams(1, 1, 0.5, 1.5, 2.2)), 10.0)
    assert closed == pytest.approx(reliability_exponential(5, 0.5, 10.0), abs=1e-12)


@given(st.integers(1, 30), st.floats(0.05, 3.0), st.floats(0.0, 60.0))
def test_exponential_reduction_property(n, th, t):
    closed = reliability_perfect_closed(SystemConfig(n, GldParams(1, 1, th, 2.0, 1.7)), t)
    assert closed == pytest.approx(reliability_exponential(n, th, t), abs=1e-12)


def test_lindley_reduction():
    th = 0.8
    for t in (0.0, 0.5, 3.0):
        want = (1 + th + th * t) * math.exp(-th * t) / (1 + th)
        assert reliability_lindley(1, th, t) == pytest.approx(want, rel=1e-13)
    cfg = SystemConfig(2, GldParams(2, 1, 1.0, 1, 1))
    assert reliability_lindley(2, 1.0, 1.0) == pytest.approx(reliability_perfect_quadrature(cfg, 1.0), abs=1e-10)
    assert reliability_lindley(4, 1.0, 0.0) == 1.0


def test_lindley_printed_formula_diagnostic():
    d = reliability_lindley(1, 1.0, 1.0, diagnostics=True)
    assert d.printed == pytest.approx(2 * math.exp(-1), rel=1e-14)
    assert d.value == pytest.approx(3 * math.exp(-1) / 2, rel=1e-13)
    assert abs(d.discrepancy) > 0.1
    assert lindley_printed_formula(3, 0.5, 0.0) == 1.0


def test_mttf_examples():
    assert mttf_perfect(SystemConfig(7, GldParams(1, 1, 0.25))) == pytest.approx(28.0, rel=1e-15)
    assert mttf_perfect(SystemConfig(2, P5)) == pytest.approx(2 * 3.4932 + 3 * 0.5068, abs=1e-3)
    th = 0.6
    lind = mttf_perfect(SystemConfig(4, GldParams(2, 1, th, 1, 1)))
    assert lind == pytest.approx(4 / th * (2 + th) / (1 + th), rel=1e-15)


@pytest.mark.parametrize("n", [1, 3, 7, 20])
def test_mttf_linear_in_n(n):
    assert mttf_perfect(SystemConfig(n, P5)) == pytest.approx(n * mttf_perfect(SystemConfig(1, P5)), rel=1e-15)
    assert mttf_perfect(SystemConfig(n, P5)) == pytest.approx(n * gld.mean(P5), rel=1e-15)


@pytest.mark.parametrize("p,n", [(P5, 2), (P5, 4), (P5.replace(alpha=2.5, beta=1.5), 3), (ALT, 3)])
def test_mttf_equals_integrated_reliability(p, n):
    cfg = SystemConfig(n, p)
    tmax = 50 * n / p.theta
    val, _ = integrate.quad(lambda t: reliability_perfect_quadrature(cfg, t), 0, tmax, limit=200, epsabs=1e-8)
    assert val == pytest.approx(mttf_perfect(cfg), rel=1e-4)


def test_imperfect_lower_examples():
    near = SystemConfig(5, P5, Imperfect(SW5.replace(theta=1e-12)))
    for t in (10.0, 30.0, 60.0):
        assert reliability_imperfect_lower(near, t) == pytest.approx(
            reliability_perfect_closed(SystemConfig(5, P5), t), abs=1e-9
        )
        one = SystemConfig(1, P5, Imperfect(SW5))
        assert reliability_imperfect_lower(one, t) == gld.survival(P5, t)
    with pytest.raises(DomainError):
        reliability_imperfect_lower(SystemConfig(2, P5), 1.0)


def test_imperfect_lower_noninteger_switch_and_component():
    cfg = SystemConfig(3, P5.replace(alpha=2.5), Imperfect(GldParams(1.5, 2.5, 0.05)))
    v = reliability_imperfect_lower(cfg, 12.0)
    r = gld.survival(cfg.component, 12.0)
    perfect = reliability_perfect_quadrature(SystemConfig(3, cfg.component), 12.0)
    assert r <= v <= perfect


@settings(max_examples=40)
@given(st.integers(1, 12), st.floats(0.0, 120.0), st.floats(0.0, 30.0))
def test_bounds_and_monotonicity(n, t, dt):
    cfg = SystemConfig(n, P5)
    r = reliability_perfect_closed(cfg, t)
    assert 0.0 <= r <= 1.0
    assert reliability_perfect_closed(cfg, t + dt) <= r + 1e-14
    assert reliability_perfect_closed(cfg.with_n(n + 1), t) >= r - 1e-14
    imp = SystemConfig(n, P5, Imperfect(SW5))
    low = reliability_imperfect_lower(imp, t)
    assert gld.survival(P5, t) - 1e-15 <= low <= r + 1e-14


def test_curve_output():
    grid = time_grid(100.0)
    assert len(grid) == 201 and grid[0] == 0 and grid[-1] == 100
    c = reliability_curve(SystemConfig(5, P5), grid)
    assert c.method is CurveMethod.CLOSED and c.values[0] == 1.0
    imp = reliability_curve(SystemConfig(5, P5, Imperfect(SW5)), grid, lower_bound=True)
    assert all(lo <= hi + 1e-14 for lo, hi in zip(imp.values, c.values))
    threaded = reliability_curve(SystemConfig(5, P5), grid, threads=4)
    assert threaded.values == c.values
    with pytest.raises(DomainError):
        Curve((1.0, 1.0), (0.5, 0.4), "x", CurveMethod.CLOSED)
    with pytest.raises(DomainError):
        time_grid(0.0)


def test_config_validation():
    with pytest.raises(DomainError):
        SystemConfig(0, P5)
    with pytest.raises(DomainError):
        SystemConfig(2.5, P5)
