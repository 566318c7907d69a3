"""Limiting forms reached by walking a parameter toward its limit.

Each check evaluates the family member at every point of a limit grid,
measures the sup-norm distance to the limiting density on a fixed x grid, and
requires the distances to shrink strictly along the grid and the last one to
fall under a cap. A report whose distances do not shrink carries statistic
+inf, so ``passed`` still reads as statistic ≤ threshold.
"""

import logging
import math
from functools import partial
from typing import Callable, List, Sequence

import numpy as np

from core import amoroso, catalog, loggamma
from core.catalog import Family
from core.loggamma import LogGammaParams
from verify.references import lognormal_pdf, normal_pdf
from verify.report import CheckReport

logger = logging.getLogger(__name__)

_X_POINTS = 41

LOGGAMMA_BETAS = (10.0, 100.0, 1000.0)
NORMAL_ALPHAS = (10.0, 100.0, 1000.0, 10000.0)
LOGNORMAL_BETAS = (0.25, 0.125, 0.0625)
POWER_LAW_BETAS = (0.1, 0.01, 0.001)


def _sup_distance(member_pdf: Callable[[float], float], limit_pdf: Callable[[float], float], grid: Sequence[float]) -> float:
    return max(abs(member_pdf(x) - limit_pdf(x)) for x in grid)


def _limit_report(name: str, distances: List[float], cap: float, steps: Sequence[float]) -> CheckReport:
    shrinking = all(later < earlier for earlier, later in zip(distances, distances[1:]))
    statistic = distances[-1] if shrinking else math.inf
    trail = ", ".join(f"{step:g}:{distance:.3g}" for step, distance in zip(steps, distances))
    if not shrinking:
        logger.warning(f"{name}: distances do not decrease ({trail})")
    return CheckReport.evaluate(name, statistic, cap, detail=f"distances {trail}")


def limit_loggamma(
    alpha: float = 1.0,
    lam: float = 1.0,
    nu: float = 0.0,
    betas: Sequence[float] = LOGGAMMA_BETAS,
    cap: float = 1e-3,
) -> CheckReport:
    """Amoroso(ν − βλ, βλ, α, β) → LogGamma(ν, λ, α) as β → ∞."""
    target = LogGammaParams(nu=nu, lam=lam, alpha=alpha)
    grid = [loggamma.quantile(target, q) for q in np.linspace(0.001, 0.999, _X_POINTS)]
    values = {"nu": nu, "lambda": lam, "alpha": alpha}
    distances = []
    for beta in betas:
        member = catalog.limit_member("log-gamma", values, beta)
        distances.append(
            _sup_distance(lambda x: amoroso.pdf(member, x), lambda x: loggamma.pdf(target, x), grid)
        )
    name = f"limit_loggamma(nu={nu:g}, lambda={lam:g}, alpha={alpha:g})"
    return _limit_report(name, distances, cap, betas)


def _normal_grid(mu: float, sigma: float) -> List[float]:
    return [mu + sigma * t for t in np.linspace(-4.0, 4.0, _X_POINTS)]


def _normal_cap(sigma: float) -> float:
    return 1e-2 / (sigma * math.sqrt(2.0 * math.pi))


def limit_normal(
    mu: float = 0.0,
    sigma: float = 1.0,
    alphas: Sequence[float] = NORMAL_ALPHAS,
) -> CheckReport:
    """Amoroso(μ − σ√α, σ/√α, α, 1) → Normal(μ, σ) as α → ∞."""
    grid = _normal_grid(mu, sigma)
    distances = []
    for alpha in alphas:
        member = catalog.limit_member("normal", {"mu": mu, "sigma": sigma}, alpha)
        distances.append(_sup_distance(lambda x: amoroso.pdf(member, x), lambda x: normal_pdf(mu, sigma, x), grid))
    name = f"limit_normal(mu={mu:g}, sigma={sigma:g})"
    return _limit_report(name, distances, _normal_cap(sigma), alphas)


def limit_normal_loggamma(
    mu: float = 0.0,
    sigma: float = 1.0,
    alphas: Sequence[float] = NORMAL_ALPHAS,
) -> CheckReport:
    """LogGamma(μ − σ√α ln α, σ√α, α) → Normal(μ, σ) as α → ∞."""
    grid = _normal_grid(mu, sigma)
    distances = []
    for alpha in alphas:
        member = catalog.limit_member("normal", {"mu": mu, "sigma": sigma}, alpha, family=Family.LOGGAMMA)
        distances.append(_sup_distance(lambda x: loggamma.pdf(member, x), lambda x: normal_pdf(mu, sigma, x), grid))
    name = f"limit_normal_loggamma(mu={mu:g}, sigma={sigma:g})"
    return _limit_report(name, distances, _normal_cap(sigma), alphas)


def limit_lognormal(
    vartheta: float = 1.0,
    sigma: float = 1.0,
    betas: Sequence[float] = LOGNORMAL_BETAS,
    a: float = 0.0,
) -> CheckReport:
    """Amoroso(a, ϑ(βσ)^{2/β}, 1/(βσ)², β) → LogNormal(a, ϑ, σ) as β → 0.

    The cap is a tenth of the log-normal peak height on the grid.
    """
    grid = [a + vartheta * math.exp(sigma * t) for t in np.linspace(-3.0, 3.0, _X_POINTS)]
    peak = max(lognormal_pdf(a, vartheta, sigma, x) for x in grid)
    values = {"a": a, "vartheta": vartheta, "sigma": sigma}
    distances = []
    for beta in betas:
        member = catalog.limit_member("log-normal", values, beta)
        distances.append(
            _sup_distance(lambda x: amoroso.pdf(member, x), lambda x: lognormal_pdf(a, vartheta, sigma, x), grid)
        )
    name = f"limit_lognormal(a={a:g}, vartheta={vartheta:g}, sigma={sigma:g})"
    return _limit_report(name, distances, 0.1 * peak, betas)


def _power_law_log_kernel(a: float, beta: float) -> Callable[[float], float]:
    """ln of (x−a)^{−1}·exp(−(x−a)^β), the α = 0 kernel of the p = 1 limit."""

    def log_kernel(x: float) -> float:
        z = math.log(x - a)
        return -z - math.exp(beta * z)

    return log_kernel


def limit_power_law(
    p: float,
    a: float = 0.0,
    betas: Sequence[float] = POWER_LAW_BETAS,
    cap: float = 1e-2,
) -> CheckReport:
    """Amoroso(a, 1, (1−p)/β, β) → (x − a)^{−p} in shape as β → 0.

    The power law is improper, so shapes are compared through the ratio
    f(x)/f(a + 1) on x − a ∈ [1, 2], formed as a difference of log densities
    (f underflows once α = (1−p)/β reaches the thousands). β approaches 0
    from the side where α is positive; at p = 1 there is no such side and the
    unnormalized α = 0 kernel is used.
    """
    grid = [a + u for u in np.linspace(1.0, 2.0, _X_POINTS)]
    anchor = a + 1.0
    steps = [abs(beta) if p < 1.0 else -abs(beta) for beta in betas]
    distances = []
    for beta in steps:
        if p == 1.0:
            log_shape = _power_law_log_kernel(a, abs(beta))
        else:
            member = catalog.limit_member("power law", {"a": a, "p": p}, beta)
            log_shape = partial(amoroso.log_pdf, member)
        base = log_shape(anchor)
        distances.append(max(abs(math.exp(log_shape(x) - base) - (x - a) ** -p) for x in grid))
    name = f"limit_power_law(p={p:g}, a={a:g})"
    return _limit_report(name, distances, cap, steps)
