"""
Core distribution package initialization.

This package provides the Amoroso and log-gamma families and their catalog:
- specfun: Log-gamma, regularized incomplete gamma and polygamma functions
- sampling: Standard gamma variates
- amoroso / loggamma: Density, cdf, quantile, moments and sampling per family
- catalog: Named special cases, synonyms, limits and classification
"""

from .amoroso import AmorosoParams
from .errors import (
    ConstraintViolationError,
    ConvergenceError,
    DistributionError,
    DomainError,
    InsufficientSampleError,
    InvalidParameterError,
    NotConstructibleError,
    UnknownDistributionError,
)
from .loggamma import LogGammaParams
from .models import DistributionSummary, SideCondition, Support

__all__ = [
    'AmorosoParams',
    'LogGammaParams',
    'Support',
    'SideCondition',
    'DistributionSummary',
    'DistributionError',
    'DomainError',
    'InvalidParameterError',
    'UnknownDistributionError',
    'ConstraintViolationError',
    'NotConstructibleError',
    'InsufficientSampleError',
    'ConvergenceError',
]
