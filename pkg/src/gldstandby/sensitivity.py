"""Parameter sensitivity of MTTF and reliability.

MTTF = (n/theta) (gamma*alpha + beta*theta**eta) / (gamma + theta**eta) is
differentiated in closed form. Reliability partials are central finite
differences of the perfect-switch reliability with a step-halving check.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError
from .gld import GldParams
from .sysrel import Perfect, SystemConfig, mttf_perfect, reliability_perfect

__all__ = [
    "ParamId",
    "Target",
    "Method",
    "ReliabilityPartial",
    "SensitivityRow",
    "SensitivityTable",
    "mttf_partial",
    "reliability_partial",
    "default_step",
    "sensitivity_table",
]


class ParamId(enum.Enum):
    ALPHA = "alpha"
    BETA = "beta"
    THETA = "theta"
    GAMMA_W = "gamma"
    ETA = "eta"

    @property
    def field(self) -> str:
        return "gamma_w" if self is ParamId.GAMMA_W else self.value

    def get(self, p: GldParams) -> float:
        return getattr(p, self.field)

    def set(self, p: GldParams, value: float) -> GldParams:
        return p.replace(**{self.field: value})

    @property
    def lower_bound(self) -> float:
        # inclusive bound for gamma and eta, exclusive (0) for the rest
        return 1.0 if self in (ParamId.GAMMA_W, ParamId.ETA) else 0.0


class Target(enum.Enum):
    MTTF = "mttf"
    RELIABILITY = "reliability"


class Method(enum.Enum):
    ANALYTIC = "analytic"
    FINITE_DIFFERENCE = "finite_difference"


def mttf_partial(cfg: SystemConfig, param: ParamId) -> float:
    if not isinstance(cfg.switch, Perfect):
        raise DomainError("MTTF sensitivity is defined for a perfect switch")
    p = cfg.component
    n, a, b, th, g, e = cfg.n, p.alpha, p.beta, p.theta, p.gamma_w, p.eta
    te = th**e
    d = g + te
    if param is ParamId.ALPHA:
        return n * g / (th * d)
    if param is ParamId.BETA:
        return n * te / (th * d)
    if param is ParamId.GAMMA_W:
        return n * te * (a - b) / (th * d * d)
    if param is ParamId.ETA:
        return n * g * te * math.log(th) * (b - a) / (th * d * d)
    # theta: M = n N / (theta D) with N = g a + b te, N' = b e te/th, D' = e te/th
    num = g * a + b * te
    dnum = b * e * te / th
    dden = e * te / th
    return n * (dnum / (th * d) - num / (th * th * d) - num * dden / (th * d * d))


@dataclass(frozen=True)
class ReliabilityPartial:
    value: float
    step: float
    one_sided: bool
    halving_change: float
    warning: str | None = None


def default_step(value: float) -> float:
    return 1e-5 * max(1.0, abs(value))


def _difference(cfg: SystemConfig, t: float, param: ParamId, h: float) -> tuple[float, bool]:
    p = cfg.component
    v = param.get(p)

    def r(x):
        return reliability_perfect(cfg.with_component(param.set(p, x)), t)

    lo = param.lower_bound
    strict = lo == 0.0
    below_ok = v - h > lo if strict else v - h >= lo
    if below_ok:
        return (r(v + h) - r(v - h)) / (2 * h), False
    # second-order forward difference at the domain edge
    return (-3 * r(v) + 4 * r(v + h) - r(v + 2 * h)) / (2 * h), True


def reliability_partial(
    cfg: SystemConfig, t: float, param: ParamId, step: float | None = None
) -> ReliabilityPartial:
    """Finite-difference ``dR/dparam`` at mission time ``t`` (perfect switch).

    Shape perturbations leave the integers, so alpha and beta partials run
    through the quadrature evaluator.
    """
    if t < 0:
        raise DomainError(f"t must be >= 0, got {t}")
    cfg = SystemConfig(cfg.n, cfg.component)
    h = default_step(param.get(cfg.component)) if step is None else float(step)
    if not h > 0:
        raise DomainError(f"step must be > 0, got {step}")
    if t == 0:
        return ReliabilityPartial(0.0, h, False, 0.0)
    full, one_sided = _difference(cfg, t, param, h)
    half, _ = _difference(cfg, t, param, h / 2)
    scale = max(abs(full), abs(half))
    change = abs(full - half) / scale if scale > 0 else 0.0
    warning = None
    if change >= 0.01:
        warning = f"halving the step changed dR/d{param.value} by {change:.2%}"
    return ReliabilityPartial(half if change < 0.01 else full, h, one_sided, change, warning)


@dataclass(frozen=True)
class SensitivityRow:
    param_value: float
    n: int
    derivative: float


@dataclass(frozen=True)
class SensitivityTable:
    target: Target
    param: ParamId
    rows: tuple[SensitivityRow, ...]
    method: Method
    t: float | None = None

    def grid(self) -> tuple[list[float], list[int], list[list[float]]]:
        """Rows = parameter values, columns = n, in first-seen order."""
        values = list(dict.fromkeys(r.param_value for r in self.rows))
        ns = list(dict.fromkeys(r.n for r in self.rows))
        cell = {(r.param_value, r.n): r.derivative for r in self.rows}
        return values, ns, [[cell[(v, n)] for n in ns] for v in values]


def sensitivity_table(
    target: Target,
    param: ParamId,
    param_values: Sequence[float],
    n_values: Sequence[int],
    base: SystemConfig,
    t: float | None = None,
) -> SensitivityTable:
    """Tabulate partials with parameter values as rows and n as columns.

    MTTF cells are analytic; reliability cells use ``reliability_partial``
    at mission time ``t``.
    """
    if not param_values or not n_values:
        raise DomainError("parameter and n grids must be non-empty")
    if target is Target.RELIABILITY and t is None:
        raise DomainError("reliability sensitivity needs a mission time t")
    rows = []
    for v in param_values:
        comp = param.set(base.component, float(v))
        for n in n_values:
            cfg = SystemConfig(int(n), comp)
            if target is Target.MTTF:
                d = mttf_partial(cfg, param)
            else:
                d = reliability_partial(cfg, t, param).value
            rows.append(SensitivityRow(float(v), int(n), d))
    method = Method.ANALYTIC if target is Target.MTTF else Method.FINITE_DIFFERENCE
    return SensitivityTable(target, param, tuple(rows), method, t if target is Target.RELIABILITY else None)
