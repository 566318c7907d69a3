"""Independent numerical oracles used to validate the closed forms.

Nothing here calls the closed-form moment, entropy or mode operations: the
quadrature sees only a density and the Kolmogorov-Smirnov test sees only
draws and a cdf.

Quadrature uses the double-exponential family of substitutions: tanh-sinh on
a finite interval, exp-sinh on a ray and sinh-sinh on the whole line. Each
level halves the step and reuses the previous sum, and the loop stops when two
consecutive levels agree to within the tolerance.
"""

import logging
import math
from functools import partial
from typing import Callable, Dict, Iterable, Optional, Tuple

import numpy as np
from scipy import stats

from core import amoroso
from core.amoroso import AmorosoParams
from core.errors import ConvergenceError, InsufficientSampleError
from core.models import Support
from verify.report import CheckReport

logger = logging.getLogger(__name__)

_HALF_PI = 0.5 * math.pi
_MIN_LEVEL = 3
_MAX_LEVEL = 12
# half-width of the trapezoid range in t for each substitution
_T_MAX = {"finite": 3.5, "ray": 6.0, "line": 5.0}
_MIN_KS_SAMPLES = 100

Integrand = Callable[[float], float]
Node = Tuple[float, float]


def _finite_node(lo: float, hi: float) -> Callable[[float], Node]:
    half = 0.5 * (hi - lo)

    def node(t: float) -> Node:
        s = _HALF_PI * math.sinh(t)
        # distance to the nearer endpoint, formed without cancellation
        gap = 2.0 * half / (math.exp(2.0 * abs(s)) + 1.0)
        x = hi - gap if t > 0.0 else lo + gap
        weight = half * _HALF_PI * math.cosh(t) / math.cosh(s) ** 2
        return x, weight

    return node


def _ray_node(origin: float, scale: float, direction: float) -> Callable[[float], Node]:
    def node(t: float) -> Node:
        offset = scale * math.exp(_HALF_PI * math.sinh(t))
        return origin + direction * offset, offset * _HALF_PI * math.cosh(t)

    return node


def _line_node(center: float, scale: float) -> Callable[[float], Node]:
    def node(t: float) -> Node:
        s = _HALF_PI * math.sinh(t)
        return center + scale * math.sinh(s), scale * math.cosh(s) * _HALF_PI * math.cosh(t)

    return node


def _contribution(f: Integrand, node: Callable[[float], Node], t: float, endpoints: Tuple[float, ...]) -> float:
    x, weight = node(t)
    if weight == 0.0 or math.isinf(x):
        return 0.0
    value = f(x)
    if not math.isfinite(value):
        if x in endpoints:
            # node collapsed onto an integrable endpoint singularity
            return 0.0
        raise ConvergenceError(f"integrand is not finite at x={x}")
    return value * weight


def _substitution(support: Support, center: Optional[float], scale: float) -> Tuple[str, Callable[[float], Node], Tuple[float, ...]]:
    lower_finite = math.isfinite(support.lower)
    upper_finite = math.isfinite(support.upper)
    if lower_finite and upper_finite:
        return "finite", _finite_node(support.lower, support.upper), (support.lower, support.upper)
    if lower_finite:
        return "ray", _ray_node(support.lower, scale, 1.0), (support.lower,)
    if upper_finite:
        return "ray", _ray_node(support.upper, scale, -1.0), (support.upper,)
    return "line", _line_node(0.0 if center is None else center, scale), ()


def quad_integral(
    f: Integrand,
    support: Support,
    tol: float = 1e-10,
    center: Optional[float] = None,
    scale: float = 1.0,
) -> float:
    """Integrate f over an interval, a ray or the whole line.

    Args:
        f (Callable[[float], float]): Integrand, finite inside the support
        support (Support): Integration domain
        tol (float): Target agreement between successive levels, relative to
            max(1, |integral|)
        center (float, optional): Bulk location for whole-line integrals
        scale (float): Typical width of the integrand (distance from the
            finite end for rays, spread for the whole line)

    Returns:
        float: The integral estimate

    Raises:
        ConvergenceError: If successive levels still disagree after the
            finest level, or the integrand is not finite inside the support

    Example:
        >>> ray = Support(lower=0.0, upper=math.inf, lower_closed=True, upper_closed=False)
        >>> round(quad_integral(lambda x: math.exp(-x), ray), 12)
        1.0
    """
    if scale <= 0.0 or not math.isfinite(scale):
        raise ValueError(f"scale must be positive and finite, got {scale}")
    if support.lower == support.upper:
        return 0.0
    kind, node, endpoints = _substitution(support, center, scale)
    t_max = _T_MAX[kind]

    h = 1.0
    total = _contribution(f, node, 0.0, endpoints)
    k = 1
    while k * h <= t_max:
        total += _contribution(f, node, k * h, endpoints) + _contribution(f, node, -k * h, endpoints)
        k += 1
    estimate = h * total

    for level in range(1, _MAX_LEVEL + 1):
        h *= 0.5
        # only the odd multiples of the new step are new nodes
        k = 1
        while k * h <= t_max:
            total += _contribution(f, node, k * h, endpoints) + _contribution(f, node, -k * h, endpoints)
            k += 2
        refined = h * total
        change = abs(refined - estimate)
        estimate = refined
        if level >= _MIN_LEVEL and change <= tol * max(1.0, abs(refined)):
            logger.debug(f"{kind} quadrature converged at level {level} (h={h}, change={change:.3g})")
            return refined
    raise ConvergenceError(f"{kind} quadrature did not reach tol={tol} (last change {change:.3g})")


def numeric_moments(
    pdf: Integrand,
    support: Support,
    center: Optional[float] = None,
    scale: float = 1.0,
    tol: float = 1e-10,
) -> Dict[str, float]:
    """Mean, variance, skew, excess kurtosis and entropy of a density by quadrature.

    Returns:
        Dict[str, float]: Keys ``norm``, ``mean``, ``variance``, ``skew``,
        ``kurtosis`` and ``entropy``
    """

    def integrate(g: Integrand) -> float:
        return quad_integral(g, support, tol=tol, center=center, scale=scale)

    def weighted(origin: float, r: int) -> Integrand:
        # (x − origin)^r·pdf(x) in log form: far tail nodes reach |x| ~ 1e300
        def integrand(x: float) -> float:
            value = pdf(x)
            offset = x - origin
            if value <= 0.0 or offset == 0.0:
                return 0.0
            magnitude = math.exp(r * math.log(abs(offset)) + math.log(value))
            return -magnitude if (offset < 0.0 and r % 2) else magnitude

        return integrand

    def entropy_density(x: float) -> float:
        value = pdf(x)
        return -value * math.log(value) if value > 0.0 else 0.0

    norm = integrate(pdf)
    mean = integrate(weighted(0.0, 1)) / norm
    central = [integrate(weighted(mean, r)) / norm for r in (2, 3, 4)]
    variance = central[0]
    return {
        "norm": norm,
        "mean": mean,
        "variance": variance,
        "skew": central[1] / variance ** 1.5,
        "kurtosis": central[2] / variance ** 2 - 3.0,
        "entropy": integrate(entropy_density),
    }


def tail_moment_diverges(
    pdf: Integrand,
    origin: float,
    direction: float,
    r: int,
    start: float = 1.0,
    doublings: int = 60,
) -> bool:
    """Detect a divergent r-th absolute moment from the growth of tail slices.

    Integrates |x − origin|^r·pdf over [L, 2L], [2L, 4L], ... along
    ``direction`` from ``origin``. For a power tail the slice ratio tends to
    2^{s}, where s is the exponent of the integrand tail plus one; the moment
    diverges iff s ≥ 0. The ratio over the last slices is compared against
    2^{-0.02} to allow for slow approach to the asymptotic regime.

    Returns:
        bool: True when the moment integral diverges
    """
    slices = []
    lower = start
    for _ in range(doublings):
        span = Support(
            lower=lower,
            upper=2.0 * lower,
            lower_closed=True,
            upper_closed=True,
        )
        slices.append(
            quad_integral(lambda d: d ** r * pdf(origin + direction * d), span, tol=1e-12, scale=lower)
        )
        lower *= 2.0
    tail = slices[-4:]
    if tail[0] == 0.0:
        return False
    ratios = [b / a for a, b in zip(tail, tail[1:]) if a > 0.0]
    threshold = 2.0 ** -0.02
    diverges = bool(ratios) and min(ratios) >= threshold
    logger.debug(f"moment r={r}: last slice ratios {ratios} -> diverges={diverges}")
    return diverges


def moment_diverges(params: AmorosoParams, r: int) -> bool:
    """Whether E|X − a|^r is infinite for an Amoroso member, judged from its density alone.

    Example:
        >>> moment_diverges(AmorosoParams(theta=1.0, alpha=1.0, beta=-1.0), 1)   # inverse exponential
        True
    """
    return tail_moment_diverges(
        partial(amoroso.pdf, params),
        origin=params.a,
        direction=math.copysign(1.0, params.theta),
        r=r,
        start=abs(params.theta),
    )


def kolmogorov_survival(y: float) -> float:
    """P(K > y) for the limiting Kolmogorov distribution."""
    return float(stats.kstwobign.sf(y))


def kolmogorov_critical(significance: float) -> float:
    """The y with kolmogorov_survival(y) = significance."""
    if not 0.0 < significance < 1.0:
        raise ValueError(f"significance must lie in (0, 1), got {significance}")
    return float(stats.kstwobign.isf(significance))


def _effective_root_n(n: int) -> float:
    # Stephens' small-sample correction to the asymptotic distribution
    root = math.sqrt(n)
    return root + 0.12 + 0.11 / root


def ks_two_way(
    samples: Iterable[float],
    cdf: Callable[[float], float],
    significance: float = 0.01,
    check_name: str = "ks",
    expect_mismatch: bool = False,
) -> CheckReport:
    """One-sample, two-sided Kolmogorov-Smirnov test of draws against a cdf.

    Args:
        samples (Iterable[float]): The draws
        cdf (Callable[[float], float]): Analytic cdf of the hypothesised law
        significance (float): Test level
        check_name (str): Name carried by the report
        expect_mismatch (bool): Negative control; the report passes only if
            the test rejects

    Returns:
        CheckReport: statistic D_n against the critical value at ``significance``

    Raises:
        InsufficientSampleError: If fewer than 100 draws are given
    """
    x = np.sort(np.asarray(list(samples) if not isinstance(samples, np.ndarray) else samples, dtype=float))
    n = x.size
    if n < _MIN_KS_SAMPLES:
        raise InsufficientSampleError(f"KS test needs at least {_MIN_KS_SAMPLES} draws, got {n}")
    fitted = np.fromiter((cdf(float(v)) for v in x), dtype=float, count=n)
    ranks = np.arange(1, n + 1, dtype=float)
    d_plus = float(np.max(ranks / n - fitted))
    d_minus = float(np.max(fitted - (ranks - 1.0) / n))
    statistic = max(d_plus, d_minus)
    root_n = _effective_root_n(n)
    threshold = kolmogorov_critical(significance) / root_n
    p_value = kolmogorov_survival(root_n * statistic)
    detail = f"n={n}, p={p_value:.4g}, significance={significance}"
    logger.debug(f"{check_name}: D={statistic:.5g}, critical={threshold:.5g}, {detail}")
    return CheckReport.evaluate(
        check_name,
        statistic,
        threshold,
        detail=detail,
        mode="lower" if expect_mismatch else "upper",
    )
