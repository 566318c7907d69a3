"""The log-gamma family: the logarithm of a standard gamma variate.

LogGamma(ν, λ, α) is the law of ν + λ·ln G with G ~ StdGamma(α). Its density

    p(x) = 1/(Γ(α)|λ|) · exp{α(x−ν)/λ − exp((x−ν)/λ)}

lives on the whole real line, so unlike the Amoroso family none of its moments
carries a side condition. Moments come from the polygamma functions.

Example:
    >>> gumbel = LogGammaParams(nu=0.0, lam=-1.0, alpha=1.0)   # standard Gumbel
    >>> round(mean(gumbel), 10)   # Euler's constant
    0.5772156649
"""

import logging
import math

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from core.errors import DomainError
from core.models import DistributionSummary, Support
from core.sampling import log_standard_gamma
from core.specfun import digamma, inv_reg_gamma_p, inv_reg_gamma_q, polygamma, reg_gamma_p, reg_gamma_q

logger = logging.getLogger(__name__)

_EXP_LIMIT = 709.0


class LogGammaParams(BaseModel):
    """The three real parameters (ν, λ, α) of a log-gamma distribution.

    ``lam`` is also accepted, and serialized, under the name ``lambda``.

    Attributes:
        nu (float): Location
        lam (float): Scale, non-zero; λ < 0 mirrors the density about ν
        alpha (float): Shape, strictly positive
    """

    model_config = ConfigDict(frozen=True, allow_inf_nan=False, populate_by_name=True)

    nu: float = 0.0
    lam: float = Field(alias="lambda")
    alpha: float = Field(gt=0.0)

    @field_validator("lam")
    @classmethod
    def _non_zero(cls, value: float) -> float:
        if value == 0.0:
            raise ValueError("lambda must be non-zero")
        return value


def _reduced(p: LogGammaParams, x: float) -> float:
    return (x - p.nu) / p.lam


def support(p: LogGammaParams) -> Support:
    return Support(lower=-math.inf, upper=math.inf, lower_closed=False, upper_closed=False)


def log_pdf(p: LogGammaParams, x: float) -> float:
    """ln p(x); −inf only where the density underflows or x is infinite."""
    if math.isnan(x):
        return math.nan
    u = _reduced(p, x)
    if math.isinf(u) or u > _EXP_LIMIT:
        return -math.inf
    return p.alpha * u - math.exp(u) - math.lgamma(p.alpha) - math.log(abs(p.lam))


def pdf(p: LogGammaParams, x: float) -> float:
    return math.exp(log_pdf(p, x))


def _gamma_argument(p: LogGammaParams, x: float) -> float:
    u = _reduced(p, x)
    if u > _EXP_LIMIT:
        return math.inf
    return math.exp(u)


def cdf(p: LogGammaParams, x: float) -> float:
    """1 − Q(α, e^{(x−ν)/λ}) for λ > 0 and Q(α, e^{(x−ν)/λ}) for λ < 0."""
    if math.isnan(x):
        return math.nan
    w = _gamma_argument(p, x)
    return reg_gamma_p(p.alpha, w) if p.lam > 0.0 else reg_gamma_q(p.alpha, w)


def survival(p: LogGammaParams, x: float) -> float:
    if math.isnan(x):
        return math.nan
    w = _gamma_argument(p, x)
    return reg_gamma_q(p.alpha, w) if p.lam > 0.0 else reg_gamma_p(p.alpha, w)


def quantile(p: LogGammaParams, q: float) -> float:
    """The x with cdf(p, x) = q.

    Raises:
        DomainError: If q is not in the open interval (0, 1)
    """
    if not 0.0 < q < 1.0:
        raise DomainError(f"quantile requires 0 < q < 1, got {q}")
    w = inv_reg_gamma_p(p.alpha, q) if p.lam > 0.0 else inv_reg_gamma_q(p.alpha, q)
    return p.nu + p.lam * math.log(w)


def mode(p: LogGammaParams) -> float:
    """ν + λ ln α, the stationary point of the log-density."""
    return p.nu + p.lam * math.log(p.alpha)


def mean(p: LogGammaParams) -> float:
    return p.nu + p.lam * digamma(p.alpha)


def variance(p: LogGammaParams) -> float:
    return p.lam * p.lam * polygamma(1, p.alpha)


def skew(p: LogGammaParams) -> float:
    """sgn(λ)·ψ₂(α)/ψ₁(α)^{3/2}."""
    return math.copysign(1.0, p.lam) * polygamma(2, p.alpha) / polygamma(1, p.alpha) ** 1.5


def kurtosis(p: LogGammaParams) -> float:
    """Excess kurtosis ψ₃(α)/ψ₁(α)², which tends to 0 in the normal limit α → ∞."""
    return polygamma(3, p.alpha) / polygamma(1, p.alpha) ** 2


def cgf(p: LogGammaParams, t: float) -> float:
    """Cumulant generating function νt + ln Γ(α+λt) − ln Γ(α).

    Raises:
        DomainError: If α + λt ≤ 0, where E[e^{tX}] diverges
    """
    shifted = p.alpha + p.lam * t
    if not shifted > 0.0:
        raise DomainError(f"cgf requires alpha + lambda*t > 0, got {shifted}")
    return p.nu * t + math.lgamma(shifted) - math.lgamma(p.alpha)


def entropy(p: LogGammaParams) -> float:
    """ln(Γ(α)|λ|) − αψ(α) + α."""
    return math.lgamma(p.alpha) + math.log(abs(p.lam)) - p.alpha * digamma(p.alpha) + p.alpha


def sample(p: LogGammaParams, rng: np.random.Generator, n: int) -> np.ndarray:
    """n independent draws ν + λ·ln G with G ~ StdGamma(α)."""
    return p.nu + p.lam * log_standard_gamma(p.alpha, rng, n)


def summary(p: LogGammaParams) -> DistributionSummary:
    logger.debug(f"Summarizing LogGamma{(p.nu, p.lam, p.alpha)}")
    return DistributionSummary(
        support=support(p),
        mode=mode(p),
        mean=mean(p),
        variance=variance(p),
        skew=skew(p),
        kurtosis=kurtosis(p),
        entropy=entropy(p),
    )
