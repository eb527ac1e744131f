"""Reliability and MTTF of a 1-out-of-n cold-standby system.

Three evaluators of the perfect-switch reliability ``P(S_n > t)``:

* ``reliability_perfect_closed``: the closed triple sum, valid for integer
  shapes. Term (i, j, k) is the probability that i units have failed, j of
  them alpha-type, and the Poisson(theta t) count exceeds their total shape
  by k.
* ``reliability_perfect_quadrature``: ``r(t) + sum_i int_0^t f_{S_i}(u) r(t-u) du``
  by adaptive quadrature, for any real shapes.
* ``reliability_exponential`` / ``reliability_lindley`` for the reductions.

``reliability_imperfect_lower`` gives the lower bound
``r(t) + r_s(t) (R_perfect(t) - r(t))`` for a switch with its own GLD lifetime.
"""
from __future__ import annotations

import enum
import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy import integrate

from . import gld
from .errors import DomainError, NumericalError, UnsupportedError
from .gld import GldParams
from .sumdist import mixture_pdf, sum_distribution

__all__ = [
    "Perfect",
    "Imperfect",
    "SwitchModel",
    "SystemConfig",
    "CurveMethod",
    "Curve",
    "LindleyDiagnostic",
    "reliability_perfect_closed",
    "reliability_perfect_quadrature",
    "reliability_perfect",
    "reliability_exponential",
    "reliability_lindley",
    "lindley_printed_formula",
    "mttf_perfect",
    "reliability_imperfect_lower",
    "reliability_curve",
    "time_grid",
]

QUAD_ABS_TOL = 1e-10
QUAD_REL_TOL = 1e-10
# scipy's QUADPACK uses 21 evaluations per subinterval
QUAD_MAX_EVALS = 10**6
_QUAD_LIMIT = QUAD_MAX_EVALS // 21
_BOUND_SLACK = 1e-12


@dataclass(frozen=True)
class Perfect:
    pass


@dataclass(frozen=True)
class Imperfect:
    params: GldParams


SwitchModel = Perfect | Imperfect


@dataclass(frozen=True)
class SystemConfig:
    n: int
    component: GldParams
    switch: SwitchModel = field(default_factory=Perfect)

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 1:
            raise DomainError(f"n must be a positive integer, got {self.n}")

    def with_n(self, n: int) -> "SystemConfig":
        return SystemConfig(n, self.component, self.switch)

    def with_component(self, component: GldParams) -> "SystemConfig":
        return SystemConfig(self.n, component, self.switch)


class CurveMethod(enum.Enum):
    CLOSED = "closed"
    QUADRATURE = "quadrature"
    SIMULATION = "simulation"


@dataclass(frozen=True)
class Curve:
    t: tuple[float, ...]
    values: tuple[float, ...]
    label: str
    method: CurveMethod

    def __post_init__(self):
        if len(self.t) != len(self.values):
            raise DomainError("curve grid and values differ in length")
        if any(b <= a for a, b in zip(self.t, self.t[1:])):
            raise DomainError("curve grid must be strictly increasing")
        if not all(math.isfinite(v) for v in self.values):
            raise DomainError("curve values must be finite")

    def __iter__(self):
        return iter(zip(self.t, self.values))


def _check_t(t: float) -> float:
    t = float(t)
    if math.isnan(t) or t < 0.0:
        raise DomainError(f"mission time must be >= 0, got {t}")
    return t


def _require_perfect(cfg: SystemConfig) -> None:
    if not isinstance(cfg.switch, Perfect):
        raise DomainError("this evaluator applies to a perfect switch only")


def _clamp_probability(value: float, what: str) -> float:
    if -_BOUND_SLACK <= value < 0.0:
        return 0.0
    if 1.0 < value <= 1.0 + _BOUND_SLACK:
        return 1.0
    if not (0.0 <= value <= 1.0):
        raise NumericalError(f"{what} evaluated to {value!r}, outside [0, 1]")
    return value


def reliability_perfect_closed(cfg: SystemConfig, t: float) -> float:
    """Closed-form reliability for integer alpha and beta (perfect switch)."""
    _require_perfect(cfg)
    p = cfg.component
    if not p.integer_shapes:
        raise UnsupportedError(
            f"closed form needs integer shapes, got alpha={p.alpha}, beta={p.beta}; "
            "use reliability_perfect_quadrature"
        )
    t = _check_t(t)
    x = p.theta * t
    if x == 0.0:
        return 1.0
    a, b = int(p.alpha), int(p.beta)
    p1, p2 = gld.mixture_weights(p)
    lp1, lp2 = math.log(p1), math.log(p2)
    lx = math.log(x)
    terms = []
    for i in range(cfg.n):
        lfact_i = math.lgamma(i + 1.0)
        for j in range(i + 1):
            lw = lfact_i - math.lgamma(j + 1.0) - math.lgamma(i - j + 1.0) + j * lp1 + (i - j) * lp2
            base = j * a + (i - j) * b
            for lead, shape in ((lp1, a), (lp2, b)):
                for k in range(shape):
                    s = base + k
                    terms.append(lead + lw + s * lx - x - math.lgamma(s + 1.0))
    value = math.fsum(math.exp(v) for v in terms)
    return _clamp_probability(value, "closed-form reliability")


def _quad(fun: Callable[[float], float], lo: float, hi: float, label: str) -> float:
    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        try:
            val, _err = integrate.quad(
                fun, lo, hi, epsabs=QUAD_ABS_TOL, epsrel=QUAD_REL_TOL, limit=_QUAD_LIMIT
            )
        except integrate.IntegrationWarning as exc:
            raise NumericalError(f"quadrature failed for {label}: {exc}") from exc
    return val


def reliability_perfect_quadrature(cfg: SystemConfig, t: float) -> float:
    """Perfect-switch reliability via the convolution integrals; any real shapes."""
    _require_perfect(cfg)
    t = _check_t(t)
    p = cfg.component
    total = gld.survival(p, t)
    if t == 0.0:
        return _clamp_probability(total, "quadrature reliability")
    for i in range(1, cfg.n):
        m = sum_distribution(p, i)
        total += _quad(
            lambda u, m=m: mixture_pdf(m, u) * gld.survival(p, t - u), 0.0, t, f"i={i}"
        )
    return _clamp_probability(total, "quadrature reliability")


def reliability_perfect(cfg: SystemConfig, t: float) -> float:
    """Closed form when both shapes are integers, quadrature otherwise."""
    if cfg.component.integer_shapes:
        return reliability_perfect_closed(cfg, t)
    return reliability_perfect_quadrature(cfg, t)


def reliability_exponential(n: int, theta: float, t: float) -> float:
    """Poisson partial sum ``exp(-theta t) sum_{i<n} (theta t)^i / i!``."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if theta <= 0:
        raise DomainError(f"theta must be > 0, got {theta}")
    x = theta * _check_t(t)
    term = math.exp(-x)
    total = term
    for i in range(1, n):
        term *= x / i
        total += term
    return min(total, 1.0)


@dataclass(frozen=True)
class LindleyDiagnostic:
    value: float
    printed: float
    discrepancy: float


def lindley_printed_formula(n: int, theta: float, t: float) -> float:
    """The Lindley special case exactly as printed in the source derivation.

    Kept for comparison only: at ``n = 1`` it gives ``(1 + t) exp(-theta t)``
    rather than the Lindley survival ``(1 + theta + theta t) exp(-theta t) / (1 + theta)``.
    """
    t = _check_t(t)
    c = theta**2 / (1.0 + theta)
    total = 0.0
    for i in range(n):
        for j in range(i + 1):
            s = i + j
            total += c**i * math.comb(i, j) * t**s / math.factorial(s) * (1.0 + t / (s + 1))
    return math.exp(-theta * t) * total


def reliability_lindley(n: int, theta: float, t: float, diagnostics: bool = False):
    """Perfect-switch reliability for one-parameter Lindley(theta) components.

    Evaluated through the general closed form with (2, 1, theta, 1, 1). With
    ``diagnostics=True`` a ``LindleyDiagnostic`` is returned that also carries
    the printed-formula value and its difference from the closed form.
    """
    cfg = SystemConfig(n, GldParams(2.0, 1.0, theta, 1.0, 1.0))
    value = reliability_perfect_closed(cfg, t)
    if not diagnostics:
        return value
    printed = lindley_printed_formula(n, theta, t)
    return LindleyDiagnostic(value, printed, printed - value)


def mttf_perfect(cfg: SystemConfig) -> float:
    _require_perfect(cfg)
    p = cfg.component
    th_eta = p.theta**p.eta
    return cfg.n / p.theta * (p.gamma_w * p.alpha + p.beta * th_eta) / (p.gamma_w + th_eta)


def reliability_imperfect_lower(cfg: SystemConfig, t: float) -> float:
    """Lower bound on reliability with a GLD-distributed switch lifetime."""
    if not isinstance(cfg.switch, Imperfect):
        raise DomainError("reliability_imperfect_lower needs an Imperfect switch")
    t = _check_t(t)
    r = gld.survival(cfg.component, t)
    if cfg.n == 1:
        return r
    rs = gld.survival(cfg.switch.params, t)
    perfect = reliability_perfect(SystemConfig(cfg.n, cfg.component), t)
    # perfect >= r up to rounding of the two evaluators
    return r + rs * max(perfect - r, 0.0)


def time_grid(mission: float, points: int = 201) -> np.ndarray:
    if not mission > 0:
        raise DomainError(f"mission must be > 0, got {mission}")
    if points < 2:
        raise DomainError(f"need at least 2 grid points, got {points}")
    return np.linspace(0.0, float(mission), int(points))


def reliability_curve(
    cfg: SystemConfig,
    grid: Sequence[float],
    lower_bound: bool = False,
    threads: int | None = None,
) -> Curve:
    """Evaluate the system reliability on ``grid``.

    ``lower_bound`` selects the imperfect-switch bound (cfg must carry an
    Imperfect switch); otherwise the perfect-switch value is used. Grid
    points are independent and may be evaluated on ``threads`` workers;
    the output order always follows ``grid``.
    """
    if lower_bound:
        fn = reliability_imperfect_lower
        label = f"lower_n{cfg.n}"
    else:
        cfg = SystemConfig(cfg.n, cfg.component)
        fn = reliability_perfect
        label = f"perfect_n{cfg.n}"
    ts = [float(t) for t in grid]
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(lambda t: fn(cfg, t), ts))
    else:
        values = [fn(cfg, t) for t in ts]
    method = CurveMethod.CLOSED if cfg.component.integer_shapes else CurveMethod.QUADRATURE
    return Curve(tuple(ts), tuple(values), label, method)
