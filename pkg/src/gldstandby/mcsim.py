"""Monte Carlo simulation of the cold-standby failure process.

Each replication draws n component lifetimes (and, for an imperfect switch,
one switch lifetime W) and records the system failure time once; the
reliability at every grid time is the fraction of failure times beyond it,
so estimates are exactly non-increasing along the grid.

Replications are processed in fixed-size chunks, chunk c drawing from
``stream_for(seed, c)``. Results therefore do not depend on how many worker
threads process the chunks.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np
from scipy import special

from . import gld
from .errors import DomainError
from .gld import GldParams
from .sysrel import Imperfect, Perfect, SystemConfig

__all__ = [
    "SimConfig",
    "SimPoint",
    "SimResult",
    "stream_for",
    "simulate_perfect",
    "simulate_imperfect",
    "failure_times",
    "CHUNK_SIZE",
]

CHUNK_SIZE = 1 << 16
_Z95 = 1.959963984540054


@dataclass(frozen=True)
class SimConfig:
    replications: int = 10**6
    seed: int = 0
    t_grid: tuple[float, ...] = (0.0,)
    antithetic: bool = False
    threads: int = 1

    def __post_init__(self):
        if self.replications < 100:
            raise DomainError(f"need at least 100 replications, got {self.replications}")
        if self.antithetic and self.replications % 2:
            raise DomainError("antithetic sampling needs an even replication count")
        if not (0 <= self.seed < 2**64):
            raise DomainError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        grid = tuple(float(t) for t in self.t_grid)
        if not grid or grid[0] < 0 or any(b <= a for a, b in zip(grid, grid[1:])):
            raise DomainError("t_grid must be non-empty, non-negative and strictly increasing")
        object.__setattr__(self, "t_grid", grid)


class SimPoint(NamedTuple):
    t: float
    estimate: float
    stderr: float
    lower: float
    upper: float


@dataclass(frozen=True)
class SimResult:
    estimates: tuple[SimPoint, ...]
    mttf: tuple[float, float]
    replications_used: int
    seed: int

    def estimate_at(self, t: float) -> SimPoint:
        for row in self.estimates:
            if row.t == t:
                return row
        raise KeyError(t)


def stream_for(seed: int, index: int) -> np.random.Generator:
    """Independent generator for ``(seed, index)`` via SeedSequence spawn keys."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(index,))))


def _lifetimes(p: GldParams, rng: np.random.Generator, shape: tuple[int, ...], antithetic: bool):
    if not antithetic:
        return gld.sample(p, rng, shape)
    half = (shape[0] // 2,) + shape[1:]
    u = rng.random(half)
    v = rng.random(half)
    p1, _ = gld.mixture_weights(p)

    def invert(u, v):
        k = np.where(u < p1, p.alpha, p.beta)
        x = special.gammaincinv(k, v) / p.theta
        return np.maximum(x, np.finfo(float).tiny)

    # rows 2r and 2r+1 form an antithetic pair
    out = np.empty(shape)
    out[0::2] = invert(u, v)
    out[1::2] = invert(1.0 - u, 1.0 - v)
    return out


def _chunk_failures(cfg: SystemConfig, seed: int, chunk: int, size: int, antithetic: bool):
    rng = stream_for(seed, chunk)
    life = _lifetimes(cfg.component, rng, (size, cfg.n), antithetic)
    if isinstance(cfg.switch, Perfect) or cfg.n == 1:
        return life.sum(axis=1)
    w = _lifetimes(cfg.switch.params, rng, (size,), antithetic)
    cum = np.cumsum(life, axis=1)
    # switchings at S_1..S_{n-1} succeed while the switch is still alive
    ok = np.sum(cum[:, :-1] < w[:, None], axis=1)
    return cum[np.arange(size), ok]


def failure_times(cfg: SystemConfig, sim: SimConfig) -> np.ndarray:
    """Per-replication system failure times, in replication order."""
    sizes = [CHUNK_SIZE] * (sim.replications // CHUNK_SIZE)
    if sim.replications % CHUNK_SIZE:
        sizes.append(sim.replications % CHUNK_SIZE)

    def work(c):
        return _chunk_failures(cfg, sim.seed, c, sizes[c], sim.antithetic)

    if sim.threads > 1 and len(sizes) > 1:
        with ThreadPoolExecutor(max_workers=sim.threads) as pool:
            parts = list(pool.map(work, range(len(sizes))))
    else:
        parts = [work(c) for c in range(len(sizes))]
    return np.concatenate(parts)


def _binomial_point(t: float, survivors: int, reps: int) -> SimPoint:
    est = survivors / reps
    # Agresti-Coull adjusted error: never zero when no replication survives
    adj = (survivors + 2.0) / (reps + 4.0)
    se = math.sqrt(adj * (1.0 - adj) / (reps + 4.0))
    centre = (est + _Z95**2 / (2 * reps)) / (1 + _Z95**2 / reps)
    half = _Z95 / (1 + _Z95**2 / reps) * math.sqrt(est * (1 - est) / reps + _Z95**2 / (4 * reps**2))
    return SimPoint(t, est, se, max(0.0, centre - half), min(1.0, centre + half))


def _summarize(times: np.ndarray, sim: SimConfig) -> SimResult:
    reps = times.size
    ordered = np.sort(times)
    rows = []
    for t in sim.t_grid:
        survivors = reps - int(np.searchsorted(ordered, t, side="right"))
        if sim.antithetic:
            alive = (times > t).astype(float)
            pairs = alive.reshape(-1, 2).mean(axis=1)
            est = survivors / reps
            se = float(pairs.std(ddof=1) / math.sqrt(pairs.size))
            if se == 0.0:
                se = _binomial_point(t, survivors, reps).stderr
            rows.append(SimPoint(t, est, se, max(0.0, est - _Z95 * se), min(1.0, est + _Z95 * se)))
        else:
            rows.append(_binomial_point(t, survivors, reps))
    if sim.antithetic:
        pair_means = times.reshape(-1, 2).mean(axis=1)
        mttf_se = float(pair_means.std(ddof=1) / math.sqrt(pair_means.size))
    else:
        mttf_se = float(times.std(ddof=1) / math.sqrt(reps))
    return SimResult(tuple(rows), (float(times.mean()), mttf_se), reps, sim.seed)


def simulate_perfect(cfg: SystemConfig, sim: SimConfig) -> SimResult:
    if not isinstance(cfg.switch, Perfect):
        raise DomainError("simulate_perfect needs a Perfect switch")
    return _summarize(failure_times(cfg, sim), sim)


def simulate_imperfect(cfg: SystemConfig, sim: SimConfig) -> SimResult:
    """Simulate with one switch lifetime W governing every switching.

    The system survives ``t`` iff some ``i`` has ``S_i <= t < S_i + T_{i+1}``
    with ``i = 0`` or ``W > S_i``.
    """
    if not isinstance(cfg.switch, Imperfect):
        raise DomainError("simulate_imperfect needs an Imperfect switch")
    return _summarize(failure_times(cfg, sim), sim)
