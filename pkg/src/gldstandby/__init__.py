"""Reliability of 1-out-of-n cold-standby systems with Generalized Lindley lifetimes."""

__version__ = "0.1.0"

from .errors import DomainError, NumericalError, UnsupportedError
from .gld import REFERENCE_COMPONENT, REFERENCE_SWITCH, GldParams
from .mcsim import SimConfig, SimResult, simulate_imperfect, simulate_perfect
from .sensitivity import ParamId, Target, mttf_partial, reliability_partial, sensitivity_table
from .sumdist import GammaMixture, sum_distribution
from .sysrel import (
    Imperfect,
    Perfect,
    SystemConfig,
    mttf_perfect,
    reliability_imperfect_lower,
    reliability_perfect,
    reliability_perfect_closed,
    reliability_perfect_quadrature,
)

__all__ = [
    "DomainError",
    "NumericalError",
    "UnsupportedError",
    "GldParams",
    "REFERENCE_COMPONENT",
    "REFERENCE_SWITCH",
    "GammaMixture",
    "sum_distribution",
    "Perfect",
    "Imperfect",
    "SystemConfig",
    "reliability_perfect",
    "reliability_perfect_closed",
    "reliability_perfect_quadrature",
    "reliability_imperfect_lower",
    "mttf_perfect",
    "SimConfig",
    "SimResult",
    "simulate_perfect",
    "simulate_imperfect",
    "ParamId",
    "Target",
    "mttf_partial",
    "reliability_partial",
    "sensitivity_table",
]
