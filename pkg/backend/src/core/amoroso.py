"""The Amoroso (generalized gamma) distribution.

The density of Amoroso(a, θ, α, β) is

    p(x) = |β/θ| / Γ(α) · z^{αβ−1} · exp(−z^β),    z = (x − a)/θ,

supported on x ≥ a when θ > 0 and on x ≤ a when θ < 0. Everything is computed
in log space with z^β evaluated as exp(β ln z), since β ranges over both signs
and αβ reaches values where the direct product overflows.

Parameters are validated once, when an ``AmorosoParams`` is built; the
operations below never re-check them.

Example:
    >>> p = AmorosoParams(a=0.0, theta=1.0, alpha=1.0, beta=1.0)   # exponential
    >>> round(cdf(p, math.log(2.0)), 12)
    0.5
    >>> round(mean(p), 12), round(variance(p), 12)
    (1.0, 1.0)
"""

import logging
import math
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator

from core.errors import DomainError
from core.models import DistributionSummary, SideCondition, Support
from core.sampling import log_standard_gamma
from core.specfun import digamma, inv_reg_gamma_p, inv_reg_gamma_q, reg_gamma_p, reg_gamma_q

logger = logging.getLogger(__name__)

_EXP_LIMIT = 709.0


class AmorosoParams(BaseModel):
    """The four real parameters (a, θ, α, β) of an Amoroso distribution.

    Attributes:
        a (float): Location, the finite end of the support
        theta (float): Scale, non-zero; its sign picks the side of the support
        alpha (float): Shape, strictly positive
        beta (float): Weibull shape, non-zero; β < 0 gives the inverse variants

    Example:
        >>> AmorosoParams(a=0.0, theta=2.0, alpha=3.0, beta=1.0)   # chi-square, k=6
        AmorosoParams(a=0.0, theta=2.0, alpha=3.0, beta=1.0)
    """

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    a: float = 0.0
    theta: float
    alpha: float = Field(gt=0.0)
    beta: float

    @field_validator("theta", "beta")
    @classmethod
    def _non_zero(cls, value: float, info: ValidationInfo) -> float:
        if value == 0.0:
            raise ValueError(f"{info.field_name} must be non-zero")
        return value

    @property
    def ascending(self) -> bool:
        """True when the cdf uses the lower regularized gamma P (β/θ > 0)."""
        return (self.beta > 0.0) == (self.theta > 0.0)


def _exp(value: float) -> float:
    if value > _EXP_LIMIT:
        return math.inf
    return math.exp(value)


def _gamma_ratio(alpha: float, shift: float) -> float:
    """Γ(α + shift)/Γ(α), assuming α + shift > 0."""
    return _exp(math.lgamma(alpha + shift) - math.lgamma(alpha))


def _standardize(p: AmorosoParams, x: float) -> float:
    return (x - p.a) / p.theta


def _log_norm(p: AmorosoParams) -> float:
    return math.log(abs(p.beta / p.theta)) - math.lgamma(p.alpha)


def support(p: AmorosoParams) -> Support:
    """[a, ∞) when θ > 0 and (−∞, a] when θ < 0, closed at a."""
    if p.theta > 0.0:
        return Support(lower=p.a, upper=math.inf, lower_closed=True, upper_closed=False)
    return Support(lower=-math.inf, upper=p.a, lower_closed=False, upper_closed=True)


def log_pdf(p: AmorosoParams, x: float) -> float:
    """Natural log of the density at x.

    Outside the support the result is −∞. At the boundary x = a the density
    is 0, finite or infinite according to the sign of αβ − 1 (and is 0 for
    every β < 0, where exp(−z^β) vanishes faster than any power).

    Args:
        p (AmorosoParams): Distribution parameters
        x (float): Evaluation point

    Returns:
        float: ln p(x), possibly ±inf
    """
    if math.isnan(x):
        return math.nan
    z = _standardize(p, x)
    if z < 0.0 or math.isinf(z):
        return -math.inf
    if z == 0.0:
        shape = p.alpha * p.beta
        if p.beta < 0.0 or shape > 1.0:
            return -math.inf
        if shape < 1.0:
            return math.inf
        return _log_norm(p)
    log_z = math.log(z)
    power = p.beta * log_z
    if power > _EXP_LIMIT:
        return -math.inf
    return _log_norm(p) + (p.alpha * p.beta - 1.0) * log_z - math.exp(power)


def pdf(p: AmorosoParams, x: float) -> float:
    """Density at x; +inf at an integrable boundary singularity."""
    return _exp(log_pdf(p, x))


def _gamma_argument(p: AmorosoParams, x: float) -> Optional[float]:
    """w = z^β for x inside the support, None at or beyond the finite end."""
    z = _standardize(p, x)
    if z <= 0.0:
        return None
    if math.isinf(z):
        return math.inf if p.beta > 0.0 else 0.0
    power = p.beta * math.log(z)
    return 0.0 if power < -745.0 else _exp(power)


def cdf(p: AmorosoParams, x: float) -> float:
    """P(X ≤ x): 1 − Q(α, z^β) when β/θ > 0 and Q(α, z^β) when β/θ < 0.

    Example:
        >>> round(cdf(AmorosoParams(theta=1.0, alpha=1.0, beta=-1.0), 1.0), 10)
        0.3678794412
    """
    if math.isnan(x):
        return math.nan
    w = _gamma_argument(p, x)
    if w is None:
        return 0.0 if p.theta > 0.0 else 1.0
    return reg_gamma_p(p.alpha, w) if p.ascending else reg_gamma_q(p.alpha, w)


def survival(p: AmorosoParams, x: float) -> float:
    """P(X > x), taken from the complementary gamma tail without subtraction."""
    if math.isnan(x):
        return math.nan
    w = _gamma_argument(p, x)
    if w is None:
        return 1.0 if p.theta > 0.0 else 0.0
    return reg_gamma_q(p.alpha, w) if p.ascending else reg_gamma_p(p.alpha, w)


def quantile(p: AmorosoParams, q: float) -> float:
    """The x with cdf(p, x) = q, for 0 < q < 1.

    Raises:
        DomainError: If q is not in the open interval (0, 1)
    """
    if not 0.0 < q < 1.0:
        raise DomainError(f"quantile requires 0 < q < 1, got {q}")
    w = inv_reg_gamma_p(p.alpha, q) if p.ascending else inv_reg_gamma_q(p.alpha, q)
    return p.a + p.theta * _exp(math.log(w) / p.beta)


def mode(p: AmorosoParams) -> float:
    """Location of the density maximum.

    a + θ(α − 1/β)^{1/β} for a bell-shaped profile, a when the density is
    L- or J-shaped. Every β < 0 member is bell shaped: its density vanishes
    at the boundary.
    """
    base = p.alpha - 1.0 / p.beta
    if base > 0.0 and (p.beta < 0.0 or p.alpha * p.beta >= 1.0):
        return p.a + p.theta * _exp(math.log(base) / p.beta)
    return p.a


def _moment_exists(p: AmorosoParams, r: int) -> bool:
    return p.alpha + r / p.beta > 0.0


def std_moment(p: AmorosoParams, r: int) -> Optional[float]:
    """E[Z^r] = Γ(α + r/β)/Γ(α) of the standardized member (a = 0, θ = 1).

    Returns ``None`` when α + r/β ≤ 0, where the moment diverges.

    Raises:
        DomainError: If r is not a positive integer
    """
    if isinstance(r, bool) or int(r) != r or r < 1:
        raise DomainError(f"moment order must be a positive integer, got {r}")
    if not _moment_exists(p, r):
        return None
    return _gamma_ratio(p.alpha, r / p.beta)


def mean(p: AmorosoParams) -> Optional[float]:
    """a + θΓ(α+1/β)/Γ(α), or ``None`` when α + 1/β ≤ 0."""
    first = std_moment(p, 1)
    if first is None:
        return None
    return p.a + p.theta * first


def variance(p: AmorosoParams) -> Optional[float]:
    """θ²[Γ(α+2/β)/Γ(α) − Γ(α+1/β)²/Γ(α)²], or ``None`` when α + 2/β ≤ 0."""
    if not _moment_exists(p, 2):
        return None
    first = _gamma_ratio(p.alpha, 1.0 / p.beta)
    # ratio of the two terms is exp(excess); expm1 keeps the difference accurate
    excess = (
        math.lgamma(p.alpha + 2.0 / p.beta)
        + math.lgamma(p.alpha)
        - 2.0 * math.lgamma(p.alpha + 1.0 / p.beta)
    )
    return max(0.0, p.theta * p.theta * first * first * math.expm1(excess))


def entropy(p: AmorosoParams) -> float:
    """Differential entropy in nats, ln(|θ|Γ(α)/|β|) + α + (1/β − α)ψ(α)."""
    return (
        math.log(abs(p.theta))
        + math.lgamma(p.alpha)
        - math.log(abs(p.beta))
        + p.alpha
        + (1.0 / p.beta - p.alpha) * digamma(p.alpha)
    )


def sample(p: AmorosoParams, rng: np.random.Generator, n: int) -> np.ndarray:
    """n independent draws a + θ·G^{1/β} with G ~ StdGamma(α).

    Args:
        p (AmorosoParams): Distribution parameters
        rng (np.random.Generator): Caller-owned random stream
        n (int): Number of draws

    Returns:
        np.ndarray: Draws, all inside ``support(p)``
    """
    log_g = log_standard_gamma(p.alpha, rng, n)
    with np.errstate(over="ignore"):
        return p.a + p.theta * np.exp(log_g / p.beta)


def reciprocal(p: AmorosoParams) -> AmorosoParams:
    """Distribution of 1/X for X ~ Amoroso(0, θ, α, β): Amoroso(0, 1/θ, α, −β).

    Raises:
        DomainError: If the location a is not zero
    """
    if p.a != 0.0:
        raise DomainError(f"reciprocal requires a = 0, got a = {p.a}")
    return AmorosoParams(a=0.0, theta=1.0 / p.theta, alpha=p.alpha, beta=-p.beta)


def summary(p: AmorosoParams) -> DistributionSummary:
    """Support, mode, gated mean and variance, entropy and the side conditions."""
    conditions = [
        SideCondition(quantity="mean", condition="alpha + 1/beta > 0", satisfied=_moment_exists(p, 1)),
        SideCondition(quantity="variance", condition="alpha + 2/beta > 0", satisfied=_moment_exists(p, 2)),
    ]
    logger.debug(f"Summarizing Amoroso{(p.a, p.theta, p.alpha, p.beta)}")
    return DistributionSummary(
        support=support(p),
        mode=mode(p),
        mean=mean(p),
        variance=variance(p),
        entropy=entropy(p),
        side_conditions=conditions,
    )
