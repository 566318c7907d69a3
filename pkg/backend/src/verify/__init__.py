"""
Verification package initialization.

This package checks the closed forms against independent oracles:
- oracles: Double-exponential quadrature, KS test, moment divergence detection
- identities: Distributional identities between members, by simulation
- limits: Convergence toward the log-gamma, normal, log-normal and power-law limits
- runner: SuiteRunner grouping the checks into reproducible suites
"""

from .report import CheckReport
from .runner import SUITES, SuiteRunner

__all__ = ['CheckReport', 'SuiteRunner', 'SUITES']
