import math

import numpy as np
import pytest

from gldstandby import gld
from gldstandby.errors import DomainError
from gldstandby.gld import REFERENCE_COMPONENT as P5
from gldstandby.gld import REFERENCE_SWITCH as SW5
from gldstandby.mcsim import (
    CHUNK_SIZE,
    SimConfig,
    failure_times,
    simulate_imperfect,
    simulate_perfect,
    stream_for,
)
from gldstandby.sysrel import (
    Imperfect,
    SystemConfig,
    mttf_perfect,
    reliability_imperfect_lower,
    reliability_perfect_closed,
)


def test_stream_determinism_and_independence():
    a = stream_for(7, 3).random(1000)
    assert np.array_equal(a, stream_for(7, 3).random(1000))
    b = stream_for(7, 4).random(1000)
    assert not set(a) & set(b)
    firsts = {stream_for(s, 0).random() for s in range(100)}
    assert len(firsts) == 100


def test_simconfig_validation():
    with pytest.raises(DomainError):
        SimConfig(replications=99)
    with pytest.raises(DomainError):
        SimConfig(t_grid=(1.0, 1.0))
    with pytest.raises(DomainError):
        SimConfig(t_grid=(-1.0,))
    with pytest.raises(DomainError):
        SimConfig(replications=101, antithetic=True)
    with pytest.raises(DomainError):
        SimConfig(seed=-1)


def test_n1_matches_component_survival():
    ts = (0.5, 2.0, 5.0, 10.0, 20.0)
    res = simulate_perfect(SystemConfig(1, P5), SimConfig(10**6, 1, ts))
    for row in res.estimates:
        assert abs(row.estimate - gld.survival(P5, row.t)) <= 4 * row.stderr
        assert row.lower <= row.estimate <= row.upper


def test_n5_against_closed_form():
    cfg = SystemConfig(5, P5)
    res = simulate_perfect(cfg, SimConfig(10**6, 2, (20.0, 40.0, 60.0, 80.0, 100.0)))
    for row in res.estimates:
        assert abs(row.estimate - reliability_perfect_closed(cfg, row.t)) <= 4 * row.stderr


def test_mttf_estimates():
    res = simulate_perfect(SystemConfig(2, P5), SimConfig(10**6, 3, (1.0,)))
    assert abs(res.mttf[0] - 8.5068) <= 4 * res.mttf[1]
    cfg20 = SystemConfig(20, P5)
    res20 = simulate_perfect(cfg20, SimConfig(10**6, 4, (1.0,)))
    assert abs(res20.mttf[0] - mttf_perfect(cfg20)) <= 4 * res20.mttf[1]


def test_reproducible_and_thread_independent():
    cfg = SystemConfig(3, P5, Imperfect(SW5))
    grid = tuple(np.linspace(0, 40, 9))
    reps = 3 * CHUNK_SIZE + 123
    a = simulate_imperfect(cfg, SimConfig(reps, 9, grid))
    b = simulate_imperfect(cfg, SimConfig(reps, 9, grid))
    c = simulate_imperfect(cfg, SimConfig(reps, 9, grid, threads=4))
    assert a == b == c
    assert a.replications_used == reps and a.seed == 9


def test_estimates_monotone_in_t():
    res = simulate_perfect(SystemConfig(4, P5), SimConfig(20_000, 5, tuple(np.linspace(0, 60, 61))))
    ests = [r.estimate for r in res.estimates]
    assert all(b <= a for a, b in zip(ests, ests[1:]))
    assert res.estimates[0].estimate == 1.0


def test_standard_error_never_zero():
    res = simulate_perfect(SystemConfig(2, P5), SimConfig(10_000, 6, (0.0, 200.0)))
    assert res.estimates[1].estimate == 0.0
    assert res.estimates[1].stderr > 0
    assert all(r.stderr >= 0 for r in res.estimates)


def test_coverage_calibration():
    cfg = SystemConfig(2, P5)
    hits = {50.0: 0, 10.0: 0}
    for seed in range(200):
        res = simulate_perfect(cfg, SimConfig(5_000, 10_000 + seed, (10.0, 50.0)))
        for row in res.estimates:
            hits[row.t] += abs(row.estimate - reliability_perfect_closed(cfg, row.t)) <= 2 * row.stderr
    assert hits[50.0] / 200 >= 0.92
    assert hits[10.0] / 200 >= 0.92


def test_near_perfect_switch_matches_perfect():
    grid = (10.0, 20.0, 40.0)
    perfect = simulate_perfect(SystemConfig(5, P5), SimConfig(200_000, 11, grid))
    near = simulate_imperfect(SystemConfig(5, P5, Imperfect(SW5.replace(theta=1e-9))), SimConfig(200_000, 12, grid))
    for a, b in zip(perfect.estimates, near.estimates):
        assert abs(a.estimate - b.estimate) <= 4 * math.hypot(a.stderr, b.stderr)


def test_imperfect_n1_is_component():
    res = simulate_imperfect(SystemConfig(1, P5, Imperfect(SW5)), SimConfig(200_000, 13, (2.0, 6.0)))
    for row in res.estimates:
        assert abs(row.estimate - gld.survival(P5, row.t)) <= 4 * row.stderr


def test_imperfect_bound_holds():
    cfg = SystemConfig(10, P5, Imperfect(SW5))
    res = simulate_imperfect(cfg, SimConfig(10**6, 14, (25.0, 50.0, 75.0, 100.0)))
    for row in res.estimates:
        assert reliability_imperfect_lower(cfg, row.t) <= row.estimate + 4 * row.stderr


def test_switch_failure_truncates_mission():
    # a fragile switch forces failure at the first switching
    fragile = Imperfect(gld.GldParams(1.0, 1.0, 1e6))
    times = failure_times(SystemConfig(4, P5, fragile), SimConfig(1000, 15))
    first = failure_times(SystemConfig(4, P5), SimConfig(1000, 15))
    assert np.all(times < first)


def test_antithetic_mode():
    cfg = SystemConfig(3, P5)
    res = simulate_perfect(cfg, SimConfig(200_000, 16, (5.0, 15.0, 30.0), antithetic=True))
    for row in res.estimates:
        assert abs(row.estimate - reliability_perfect_closed(cfg, row.t)) <= 4 * row.stderr
    assert abs(res.mttf[0] - mttf_perfect(cfg)) <= 4 * res.mttf[1]


def test_simulate_requires_matching_switch():
    with pytest.raises(DomainError):
        simulate_perfect(SystemConfig(2, P5, Imperfect(SW5)), SimConfig(100))
    with pytest.raises(DomainError):
        simulate_imperfect(SystemConfig(2, P5), SimConfig(100))
