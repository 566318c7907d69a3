"""Reference laws written out directly, independent of the catalog."""

import math

_ROOT_TWO = math.sqrt(2.0)
_ROOT_TWO_PI = math.sqrt(2.0 * math.pi)


def normal_pdf(mu: float, sigma: float, x: float) -> float:
    z = (x - mu) / sigma
    return math.exp(-0.5 * z * z) / (sigma * _ROOT_TWO_PI)


def normal_cdf(mu: float, sigma: float, x: float) -> float:
    return 0.5 * math.erfc(-(x - mu) / (sigma * _ROOT_TWO))


def lognormal_pdf(a: float, vartheta: float, sigma: float, x: float) -> float:
    """1/((x−a)√(2πσ²)) · exp(−ln²((x−a)/ϑ)/(2σ²)) for x > a, else 0."""
    if x <= a:
        return 0.0
    u = math.log((x - a) / vartheta)
    return math.exp(-u * u / (2.0 * sigma * sigma)) / ((x - a) * sigma * _ROOT_TWO_PI)


def lognormal_cdf(a: float, vartheta: float, sigma: float, x: float) -> float:
    if x <= a:
        return 0.0
    return normal_cdf(0.0, sigma, math.log((x - a) / vartheta))
