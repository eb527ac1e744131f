"""Five-parameter Generalized Lindley lifetime distribution.

A GLD(alpha, beta, theta, gamma, eta) law is the two-component mixture

    p1 * Gamma(alpha, theta) + p2 * Gamma(beta, theta),
    p1 = gamma / (gamma + theta**eta),  p2 = theta**eta / (gamma + theta**eta),

with ``theta`` a rate. Exponential(theta) is alpha = beta = 1 and the
one-parameter Lindley(theta) law is (2, 1, theta, 1, 1).
"""
from __future__ import annotations

import enum
import math
import numbers
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NumericalError
from .specfun import gamma_sample, reg_gamma_lower, reg_gamma_upper

__all__ = [
    "GldParams",
    "SpecialCase",
    "Classification",
    "mixture_weights",
    "gamma_logpdf",
    "pdf",
    "cdf",
    "survival",
    "hazard",
    "mean",
    "sample",
    "classify",
    "REFERENCE_COMPONENT",
    "REFERENCE_SWITCH",
]

_SURVIVAL_FLOOR = 1e-300


@dataclass(frozen=True)
class GldParams:
    alpha: float
    beta: float
    theta: float
    gamma_w: float = 1.0
    eta: float = 1.0

    def __post_init__(self):
        vals = (self.alpha, self.beta, self.theta, self.gamma_w, self.eta)
        if not all(isinstance(v, numbers.Real) and math.isfinite(v) for v in vals):
            raise DomainError(f"GLD parameters must be finite reals, got {vals}")
        if self.alpha <= 0 or self.beta <= 0 or self.theta <= 0:
            raise DomainError(
                f"alpha, beta, theta must be > 0, got {self.alpha}, {self.beta}, {self.theta}"
            )
        if self.gamma_w < 1 or self.eta < 1:
            raise DomainError(f"gamma and eta must be >= 1, got {self.gamma_w}, {self.eta}")

    def replace(self, **changes) -> "GldParams":
        fields = dict(
            alpha=self.alpha, beta=self.beta, theta=self.theta, gamma_w=self.gamma_w, eta=self.eta
        )
        fields.update(changes)
        return GldParams(**fields)

    @property
    def integer_shapes(self) -> bool:
        return float(self.alpha).is_integer() and float(self.beta).is_integer()


# Numerical example used throughout the tables and figures.
REFERENCE_COMPONENT = GldParams(alpha=2.0, beta=3.0, theta=0.5, gamma_w=1.5, eta=2.2)
REFERENCE_SWITCH = GldParams(alpha=4.0, beta=4.0, theta=0.005, gamma_w=1.0, eta=1.0)


class SpecialCase(enum.Enum):
    EXPONENTIAL = "exponential"
    LINDLEY = "lindley"
    GENERAL = "general"


@dataclass(frozen=True)
class Classification:
    case: SpecialCase
    theta: float


def mixture_weights(p: GldParams) -> tuple[float, float]:
    """Return ``(p1, p2)``, the weights of the alpha- and beta-shape gamma terms."""
    th_eta = p.theta**p.eta
    denom = p.gamma_w + th_eta
    p1 = p.gamma_w / denom
    return p1, 1.0 - p1


def gamma_logpdf(x: float, shape: float, rate: float) -> float:
    """Log of the gamma density ``rate^k x^(k-1) e^(-rate x) / Gamma(k)``."""
    if x == 0.0:
        if shape < 1.0:
            return math.inf
        if shape == 1.0:
            return math.log(rate)
        return -math.inf
    return shape * math.log(rate) + (shape - 1.0) * math.log(x) - rate * x - math.lgamma(shape)


def _check_t(t: float) -> float:
    t = float(t)
    if math.isnan(t) or t < 0.0:
        raise DomainError(f"time must be >= 0, got {t}")
    return t


def pdf(p: GldParams, t: float) -> float:
    t = _check_t(t)
    p1, p2 = mixture_weights(p)
    la = math.log(p1) + gamma_logpdf(t, p.alpha, p.theta)
    lb = math.log(p2) + gamma_logpdf(t, p.beta, p.theta)
    return math.exp(np.logaddexp(la, lb))


def _upper(shape: float, x: float) -> float:
    # integer shapes take the finite Poisson sum; others the incomplete gamma
    if float(shape).is_integer() and shape <= 170:
        if x == 0.0:
            return 1.0
        lx = math.log(x)
        return sum(math.exp(k * lx - x - math.lgamma(k + 1.0)) for k in range(int(shape)))
    return reg_gamma_upper(shape, x)


def survival(p: GldParams, t: float) -> float:
    """Probability the component is still working at time ``t``."""
    t = _check_t(t)
    p1, p2 = mixture_weights(p)
    x = p.theta * t
    return p1 * _upper(p.alpha, x) + p2 * _upper(p.beta, x)


def cdf(p: GldParams, t: float) -> float:
    t = _check_t(t)
    p1, p2 = mixture_weights(p)
    x = p.theta * t
    return p1 * reg_gamma_lower(p.alpha, x) + p2 * reg_gamma_lower(p.beta, x)


def hazard(p: GldParams, t: float) -> float:
    """Failure rate ``pdf / survival``.

    Raises NumericalError once survival drops below 1e-300, where the ratio
    is dominated by rounding rather than by the distribution.
    """
    t = _check_t(t)
    if t == 0.0:
        if min(p.alpha, p.beta) < 1.0:
            raise DomainError("hazard diverges at t=0 when a shape is below 1")
        return pdf(p, 0.0)
    s = survival(p, t)
    if s < _SURVIVAL_FLOOR:
        raise NumericalError(f"survival underflow at t={t}; hazard cannot be evaluated reliably")
    return pdf(p, t) / s


def mean(p: GldParams) -> float:
    p1, p2 = mixture_weights(p)
    return (p1 * p.alpha + p2 * p.beta) / p.theta


def sample(p: GldParams, rng: np.random.Generator, size=None):
    """Draw lifetimes: a Gamma(alpha, theta) draw with probability p1, else Gamma(beta, theta)."""
    p1, _ = mixture_weights(p)
    pick_alpha = rng.random(size) < p1
    shapes = np.where(pick_alpha, p.alpha, p.beta)
    return gamma_sample(shapes, p.theta, rng)


def classify(p: GldParams) -> Classification:
    if p.alpha == 1 and p.beta == 1:
        return Classification(SpecialCase.EXPONENTIAL, p.theta)
    if (p.alpha, p.beta, p.gamma_w, p.eta) == (2, 1, 1, 1):
        return Classification(SpecialCase.LINDLEY, p.theta)
    return Classification(SpecialCase.GENERAL, p.theta)
