"""Law of the sum of n iid GLD lifetimes as a binomial-weighted gamma mixture.

Expanding the n-th power of the GLD moment generating function gives

    S_n ~ sum_i C(n, i) p1^i p2^(n-i) Gamma(i*alpha + (n-i)*beta, theta),

so one mixture object serves the density, cdf and MGF of S_n.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .gld import GldParams, gamma_logpdf, mixture_weights
from .specfun import reg_gamma_lower, reg_gamma_upper

__all__ = [
    "GammaComponent",
    "GammaMixture",
    "sum_distribution",
    "mixture_pdf",
    "mixture_cdf",
    "mixture_survival",
    "mixture_mgf",
    "mixture_mean",
    "MAX_TERMS",
]

MAX_TERMS = 10_000


@dataclass(frozen=True)
class GammaComponent:
    weight: float
    shape: float
    rate: float


@dataclass(frozen=True)
class GammaMixture:
    components: tuple[GammaComponent, ...]
    n_terms: int

    def __post_init__(self):
        if not self.components:
            raise DomainError("a mixture needs at least one component")
        for c in self.components:
            if not (0.0 <= c.weight <= 1.0):
                raise DomainError(f"weight {c.weight} outside [0, 1]")
            if c.shape <= 0 or c.rate <= 0:
                raise DomainError(f"component shape and rate must be > 0, got {c}")
        total = math.fsum(c.weight for c in self.components)
        if abs(total - 1.0) > 1e-12:
            raise DomainError(f"mixture weights sum to {total!r}, not 1")

    @property
    def weights(self) -> np.ndarray:
        return np.array([c.weight for c in self.components])

    @property
    def shapes(self) -> np.ndarray:
        return np.array([c.shape for c in self.components])

    @property
    def min_rate(self) -> float:
        return min(c.rate for c in self.components)


def _log_binom(n: int, k: int) -> float:
    return math.lgamma(n + 1.0) - math.lgamma(k + 1.0) - math.lgamma(n - k + 1.0)


def sum_distribution(p: GldParams, n: int) -> GammaMixture:
    """Mixture law of ``X_1 + ... + X_n``; component i carries i alpha-type summands."""
    if isinstance(n, bool) or int(n) != n or not (1 <= n <= MAX_TERMS):
        raise DomainError(f"n must be an integer in [1, {MAX_TERMS}], got {n}")
    n = int(n)
    p1, p2 = mixture_weights(p)
    lp1, lp2 = math.log(p1), math.log(p2)
    logw = np.array([_log_binom(n, i) + i * lp1 + (n - i) * lp2 for i in range(n + 1)])
    # lgamma(n) rounding grows with n; renormalizing keeps the weights a probability vector
    logw -= np.logaddexp.reduce(logw)
    comps = [
        GammaComponent(min(1.0, math.exp(lw)), i * p.alpha + (n - i) * p.beta, p.theta)
        for i, lw in enumerate(logw)
    ]
    return GammaMixture(tuple(comps), n)


def _check_x(x: float) -> float:
    x = float(x)
    if math.isnan(x) or x < 0.0:
        raise DomainError(f"x must be >= 0, got {x}")
    return x


def mixture_pdf(m: GammaMixture, x: float) -> float:
    x = _check_x(x)
    logs = [math.log(c.weight) + gamma_logpdf(x, c.shape, c.rate) for c in m.components if c.weight > 0]
    return float(np.exp(np.logaddexp.reduce(logs)))


def mixture_cdf(m: GammaMixture, x: float) -> float:
    x = _check_x(x)
    return math.fsum(c.weight * reg_gamma_lower(c.shape, c.rate * x) for c in m.components)


def mixture_survival(m: GammaMixture, x: float) -> float:
    x = _check_x(x)
    return math.fsum(c.weight * reg_gamma_upper(c.shape, c.rate * x) for c in m.components)


def mixture_mgf(m: GammaMixture, t: float) -> float:
    """``E[exp(t S)] = sum_i w_i (1 - t/rate_i)^(-shape_i)``, finite only for ``t < min rate``."""
    t = float(t)
    if not t < m.min_rate:
        raise DomainError(f"MGF diverges for t >= {m.min_rate}, got {t}")
    return math.fsum(c.weight * (1.0 - t / c.rate) ** (-c.shape) for c in m.components)


def mixture_mean(m: GammaMixture) -> float:
    return math.fsum(c.weight * c.shape / c.rate for c in m.components)
