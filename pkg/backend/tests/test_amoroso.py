import math

import numpy as np
import pytest
from pydantic import ValidationError
from scipy import optimize, stats

from core import amoroso
from core.amoroso import AmorosoParams
from core.errors import DomainError
from core.specfun import EULER_GAMMA, reg_gamma_q
from verify.oracles import ks_two_way, moment_diverges, numeric_moments, quad_integral


def params(a, theta, alpha, beta):
    return AmorosoParams(a=a, theta=theta, alpha=alpha, beta=beta)


def median_offset(p):
    return abs(amoroso.quantile(p, 0.5) - p.a)


def partial_pdf(p):
    return lambda x: amoroso.pdf(p, x)


# One member per shape of the density: exponential, gamma, singular boundary,
# chi-type, Weibull-type, inverse and reflected variants
SWEEP = [
    params(0.0, 1.0, 1.0, 1.0),
    params(0.0, 2.0, 3.0, 1.0),
    params(0.0, 1.0, 0.5, 1.0),
    params(0.0, 1.0, 4.0, 1.0),
    params(0.0, math.sqrt(2.0), 0.5, 2.0),
    params(0.0, math.sqrt(2.0), 1.0, 2.0),
    params(0.0, math.sqrt(2.0), 1.5, 2.0),
    params(0.0, 1.0, 2.0, 3.0),
    params(0.0, 1.0, 1.0, 0.5),
    params(0.0, 1.0, 1.0, -1.0),
    params(0.0, 1.0, 0.5, -1.0),
    params(0.0, 1.0, 3.0, -2.0),
    params(2.0, -1.0, 2.0, 1.0),
    params(-1.0, 1.5, 0.7, -2.0),
    params(1.0, -0.5, 1.5, 2.5),
]

# Full shape grid: both sides of the support, β on either side of zero, α below and above 1
SHAPE_BETAS = (-2.0, -1.0, -0.5, 0.5, 1.0, 2.0, 3.0)
SHAPE_ALPHAS = (0.3, 0.5, 1.0, 1.5, 2.0, math.pi / 2.0, 10.0)
GRID = [
    params(0.0, theta, alpha, beta)
    for beta in SHAPE_BETAS
    for alpha in SHAPE_ALPHAS
    for theta in (1.0, -2.5)
]
# numeric_moments integrates up to r = 4; keep members whose fourth moment is finite with margin
MOMENT_GRID = [
    p for p in GRID if p.alpha in (0.3, 1.0, math.pi / 2.0, 10.0) and (p.beta > 0.0 or p.alpha * abs(p.beta) >= 5.0)
]


def test_params_validation():
    with pytest.raises(ValidationError):
        AmorosoParams(theta=0.0, alpha=1.0, beta=1.0)
    with pytest.raises(ValidationError):
        AmorosoParams(theta=1.0, alpha=1.0, beta=0.0)
    with pytest.raises(ValidationError):
        AmorosoParams(theta=1.0, alpha=0.0, beta=1.0)
    with pytest.raises(ValidationError):
        AmorosoParams(theta=1.0, alpha=math.inf, beta=1.0)


def test_params_are_immutable():
    p = params(0.0, 1.0, 1.0, 1.0)
    with pytest.raises(ValidationError):
        p.theta = 2.0


def test_support_sides():
    right = amoroso.support(params(0.0, 1.0, 1.0, 1.0))
    assert (right.lower, right.upper, right.lower_closed) == (0.0, math.inf, True)
    left = amoroso.support(params(5.0, -2.0, 1.0, 1.0))
    assert (left.lower, left.upper, left.upper_closed) == (-math.inf, 5.0, True)


def test_log_pdf_examples():
    assert amoroso.log_pdf(params(0.0, 2.0, 3.0, 1.0), 4.0) == pytest.approx(-2.0, rel=1e-14)
    assert amoroso.pdf(params(0.0, math.sqrt(2.0), 0.5, 2.0), 1.0) == pytest.approx(
        math.sqrt(2.0 / math.pi) * math.exp(-0.5), rel=1e-13
    )


def test_log_pdf_outside_support():
    p = params(1.0, 1.0, 2.0, 1.0)
    assert amoroso.log_pdf(p, 0.5) == -math.inf
    assert amoroso.pdf(p, 0.5) == 0.0
    assert amoroso.pdf(params(1.0, -1.0, 2.0, 1.0), 1.5) == 0.0


def test_boundary_convention():
    # 0, finite, +inf at x = a by the sign of αβ − 1; every β < 0 member vanishes there
    assert amoroso.pdf(params(0.0, 1.0, 2.0, 1.0), 0.0) == 0.0
    assert amoroso.pdf(params(0.0, 2.0, 1.0, 1.0), 0.0) == pytest.approx(0.5)
    assert amoroso.pdf(params(0.0, 1.0, 0.5, 1.0), 0.0) == math.inf
    assert amoroso.pdf(params(0.0, 1.0, 0.5, -1.0), 0.0) == 0.0


def test_log_pdf_no_overflow_for_large_shape():
    p = params(0.0, 1.0, 200.0, 3.0)
    x = amoroso.quantile(p, 0.5)
    assert math.isfinite(amoroso.log_pdf(p, x))
    assert amoroso.log_pdf(p, 1e120) == -math.inf


@pytest.mark.parametrize("p", SWEEP)
def test_matches_generalized_gamma(p):
    reference = stats.gengamma(p.alpha, p.beta, loc=p.a, scale=abs(p.theta))
    sign = math.copysign(1.0, p.theta)
    for q in np.linspace(0.02, 0.98, 25):
        u = float(reference.ppf(q))
        x = p.a + sign * (u - p.a)
        assert amoroso.pdf(p, x) == pytest.approx(reference.pdf(u), rel=1e-10)
        expected_cdf = reference.cdf(u) if p.theta > 0 else reference.sf(u)
        assert amoroso.cdf(p, x) == pytest.approx(expected_cdf, rel=1e-10)


def test_cdf_examples():
    assert amoroso.cdf(params(0.0, 1.0, 1.0, 1.0), math.log(2.0)) == pytest.approx(0.5, rel=1e-14)
    assert amoroso.cdf(params(0.0, 1.0, 1.0, -1.0), 1.0) == pytest.approx(math.exp(-1.0), rel=1e-13)
    assert amoroso.cdf(params(0.0, 2.0, 1.0, 1.0), 2.0) == pytest.approx(1.0 - math.exp(-1.0), rel=1e-13)


def test_cdf_limits_and_monotonicity():
    for p in SWEEP:
        lower, upper = amoroso.support(p).lower, amoroso.support(p).upper
        if p.theta > 0:
            assert amoroso.cdf(p, lower) == 0.0
            assert amoroso.cdf(p, lower - 1.0) == 0.0
        else:
            assert amoroso.cdf(p, upper) == 1.0
            assert amoroso.cdf(p, upper + 1.0) == 1.0
        xs = [amoroso.quantile(p, q) for q in np.linspace(0.01, 0.99, 30)]
        values = [amoroso.cdf(p, x) for x in sorted(xs)]
        assert all(b >= a for a, b in zip(values, values[1:]))


def test_survival_examples():
    assert amoroso.survival(params(0.0, 1.0, 1.0, 1.0), 20.0) == pytest.approx(math.exp(-20.0), rel=1e-10)
    assert amoroso.survival(params(0.0, 1.0, 1.0, 1.0), 0.0) == 1.0
    assert amoroso.survival(params(0.0, 1.0, 2.0, 1.0), 1.0) == pytest.approx(2.0 * math.exp(-1.0), rel=1e-13)


@pytest.mark.parametrize("p", SWEEP)
def test_survival_complements_cdf(p):
    for q in (0.01, 0.3, 0.7, 0.99):
        x = amoroso.quantile(p, q)
        assert amoroso.cdf(p, x) + amoroso.survival(p, x) == pytest.approx(1.0, abs=1e-14)


def test_quantile_examples():
    assert amoroso.quantile(params(0.0, 1.0, 1.0, 1.0), 0.5) == pytest.approx(math.log(2.0), rel=1e-13)
    assert amoroso.quantile(params(0.0, 1.0, 1.0, 2.0), 1.0 - math.exp(-1.0)) == pytest.approx(1.0, rel=1e-13)
    assert amoroso.quantile(params(1.0, -1.0, 1.0, 1.0), 0.5) == pytest.approx(1.0 - math.log(2.0), rel=1e-13)


@pytest.mark.parametrize("q", [0.01, 0.05, 0.5, 0.95, 0.99])
def test_quantile_of_inverse_exponential(q):
    # F(x) = exp(-1/x)
    assert amoroso.quantile(params(0.0, 1.0, 1.0, -1.0), q) == pytest.approx(-1.0 / math.log(q), rel=1e-12)


@pytest.mark.parametrize("p", SWEEP)
def test_quantile_round_trip(p):
    levels = [1e-6] + list(np.linspace(0.01, 0.99, 99)) + [1.0 - 1e-6]
    previous = -math.inf
    for q in levels:
        x = amoroso.quantile(p, float(q))
        assert amoroso.cdf(p, x) == pytest.approx(q, abs=1e-9)
        assert x >= previous
        previous = x


@pytest.mark.parametrize("q", [0.0, 1.0, -0.1, 2.0])
def test_quantile_rejects_levels_outside_unit_interval(q):
    with pytest.raises(DomainError):
        amoroso.quantile(params(0.0, 1.0, 1.0, 1.0), q)


@pytest.mark.parametrize("p", SWEEP)
def test_cdf_derivative_is_pdf(p):
    for q in (0.1, 0.35, 0.6, 0.9):
        x = amoroso.quantile(p, q)
        h = 1e-5 * max(median_offset(p), 1e-3)
        slope = (amoroso.cdf(p, x + h) - amoroso.cdf(p, x - h)) / (2.0 * h)
        assert slope == pytest.approx(amoroso.pdf(p, x), rel=1e-6)


@pytest.mark.parametrize("p", SWEEP + GRID)
def test_normalization(p):
    total = quad_integral(partial_pdf(p), amoroso.support(p), scale=median_offset(p))
    assert total == pytest.approx(1.0, abs=1e-8)


@pytest.mark.parametrize("p", SWEEP)
def test_reflection(p):
    mirrored = params(p.a, -p.theta, p.alpha, p.beta)
    for q in (0.05, 0.5, 0.95):
        x = amoroso.quantile(p, q)
        assert amoroso.pdf(mirrored, 2.0 * p.a - x) == pytest.approx(amoroso.pdf(p, x), rel=1e-12)


@pytest.mark.parametrize("c", [0.25, 3.0, 1e3])
def test_scaling(c):
    base = params(0.0, 1.5, 2.0, 1.5)
    scaled = params(0.0, 1.5 * c, 2.0, 1.5)
    for x in (0.2, 1.0, 2.5):
        assert c * amoroso.pdf(scaled, c * x) == pytest.approx(amoroso.pdf(base, x), rel=1e-12)


def test_mode_examples():
    assert amoroso.mode(params(0.0, 2.0, 3.0, 1.0)) == pytest.approx(4.0, rel=1e-14)
    assert amoroso.mode(params(0.0, math.sqrt(2.0), 1.0, 2.0)) == pytest.approx(1.0, rel=1e-14)
    assert amoroso.mode(params(0.0, 1.0, 0.5, 1.0)) == 0.0


@pytest.mark.parametrize(
    "p",
    [
        params(0.0, 2.0, 3.0, 1.0),
        params(0.0, math.sqrt(2.0), 1.0, 2.0),
        params(1.0, -1.0, 2.0, 2.0),
        params(0.0, 1.0, 2.0, 3.0),
        params(0.0, 1.0, 2.0, -1.0),
        params(-1.0, 1.5, 0.7, -2.0),
    ],
)
def test_mode_is_density_argmax(p):
    lo, hi = sorted((amoroso.quantile(p, 0.001), amoroso.quantile(p, 0.999)))
    found = optimize.minimize_scalar(
        lambda x: -amoroso.log_pdf(p, x), bounds=(lo, hi), method="bounded", options={"xatol": 1e-10}
    )
    assert amoroso.mode(p) == pytest.approx(found.x, abs=1e-6)


def test_mode_increases_with_shape():
    modes = [amoroso.mode(params(0.0, 1.0, alpha, 2.0)) for alpha in (0.6, 1.0, 2.0, 5.0, 20.0)]
    assert all(b > a for a, b in zip(modes, modes[1:]))


def test_std_moment_examples():
    assert amoroso.std_moment(params(0.0, 1.0, 3.0, 1.0), 1) == pytest.approx(3.0, rel=1e-13)
    assert amoroso.std_moment(params(0.0, 1.0, 1.0, 2.0), 2) == pytest.approx(1.0, rel=1e-13)
    assert amoroso.std_moment(params(0.0, 1.0, 0.5, -1.0), 1) is None


@pytest.mark.parametrize("r", [0, -1, 1.5])
def test_std_moment_rejects_bad_order(r):
    with pytest.raises(DomainError):
        amoroso.std_moment(params(0.0, 1.0, 1.0, 1.0), r)


def test_mean_examples():
    maxwell = params(0.0, math.sqrt(2.0), 1.5, 2.0)
    assert amoroso.mean(maxwell) == pytest.approx(2.0 * math.sqrt(2.0 / math.pi), rel=1e-13)
    assert amoroso.mean(params(0.0, 3.5, 1.0, 1.0)) == pytest.approx(3.5, rel=1e-14)
    assert amoroso.mean(params(0.0, 1.0, 0.5, -1.0)) is None


def test_variance_examples():
    assert amoroso.variance(params(0.0, 1.0, 3.0, 1.0)) == pytest.approx(3.0, rel=1e-12)
    assert amoroso.variance(params(0.0, 2.0, 1.0, 1.0)) == pytest.approx(4.0, rel=1e-12)
    assert amoroso.variance(params(0.0, 1.0, 0.5, -1.0)) is None


def test_moment_gate_at_equality_is_absent():
    # α + 1/β = 0 exactly: the moment integral diverges logarithmically
    assert amoroso.mean(params(0.0, 1.0, 1.0, -1.0)) is None
    assert amoroso.variance(params(0.0, 1.0, 2.0, -1.0)) is None
    assert amoroso.mean(params(0.0, 1.0, 2.0, -1.0)) == pytest.approx(1.0, rel=1e-13)


@pytest.mark.parametrize(
    "p",
    [
        params(0.0, 1.0, 1.0, 1.0),
        params(0.0, 1.0, 1.0, -1.0),
        params(0.0, 1.0, 0.5, -1.0),
        params(0.0, 1.0, 2.0, -1.0),
        params(0.0, 1.0, 3.0, -1.0),
        params(0.0, 2.0, 0.5, -2.0),
        params(0.0, 1.0, 3.0, -2.0),
        params(1.0, -1.0, 2.0, -1.0),
    ],
)
def test_moment_gates_agree_with_divergence(p):
    assert (amoroso.mean(p) is None) == moment_diverges(p, 1)
    assert (amoroso.variance(p) is None) == moment_diverges(p, 2)


def test_entropy_examples():
    assert amoroso.entropy(params(0.0, 1.0, 1.0, 1.0)) == pytest.approx(1.0, rel=1e-14)
    assert amoroso.entropy(params(0.0, 2.0, 1.0, 1.0)) == pytest.approx(1.0 + math.log(2.0), rel=1e-14)
    assert amoroso.entropy(params(0.0, math.sqrt(2.0), 0.5, 2.0)) == pytest.approx(0.7257913526447274, rel=1e-12)


def test_entropy_is_reflection_invariant():
    p = params(0.0, 1.7, 2.2, -1.3)
    assert amoroso.entropy(params(0.0, -1.7, 2.2, -1.3)) == pytest.approx(amoroso.entropy(p), rel=1e-14)
    # inverse exponential: ln Γ(1) + 1 + 2γ
    assert amoroso.entropy(params(0.0, 1.0, 1.0, -1.0)) == pytest.approx(1.0 + 2.0 * EULER_GAMMA, rel=1e-13)


@pytest.mark.parametrize(
    "p",
    [
        params(0.0, 2.0, 3.0, 1.0),
        params(0.0, math.sqrt(2.0), 1.5, 2.0),
        params(0.0, 1.0, 0.5, 1.0),
        params(0.0, 1.0, 6.0, -1.0),
        params(1.0, -2.0, 2.0, 1.5),
    ]
    + MOMENT_GRID,
)
def test_closed_forms_match_quadrature(p):
    numeric = numeric_moments(partial_pdf(p), amoroso.support(p), scale=median_offset(p), tol=1e-12)
    assert numeric["norm"] == pytest.approx(1.0, abs=1e-8)
    assert amoroso.mean(p) == pytest.approx(numeric["mean"], rel=1e-7, abs=1e-9)
    assert amoroso.variance(p) == pytest.approx(numeric["variance"], rel=1e-6)
    assert amoroso.entropy(p) == pytest.approx(numeric["entropy"], rel=1e-7, abs=1e-9)


def test_sample_empty(rng):
    assert amoroso.sample(params(0.0, 1.0, 1.0, 1.0), rng, 0).size == 0


def test_sample_is_reproducible():
    p = params(0.0, 2.0, 0.5, -1.5)
    first = amoroso.sample(p, np.random.default_rng(7), 50)
    second = amoroso.sample(p, np.random.default_rng(7), 50)
    np.testing.assert_array_equal(first, second)


@pytest.mark.parametrize("p", SWEEP)
def test_sample_stays_in_support(p, rng):
    draws = amoroso.sample(p, rng, 5000)
    support = amoroso.support(p)
    assert all(support.contains(float(x)) for x in draws)
    if p.alpha * p.beta > 1.0 or p.beta < 0.0:
        assert not np.any(draws == p.a)


@pytest.mark.parametrize(
    "p",
    [
        params(0.0, 1.0, 0.5, -2.0),
        params(1.0, -1.5, 3.0, -2.0),
        params(0.0, 1.0, 0.3, -1.0),
        params(-2.0, 2.0, 1.5, -1.0),
        params(0.0, 1.0, 0.6, -0.5),
        params(0.0, 1.0, 0.7, 0.5),
        params(0.0, 1.0, 0.3, 1.0),
        params(0.0, -2.0, 0.8, 1.0),
        params(3.0, 1.0, 5.0, 1.0),
        params(0.0, 1.0, 0.5, 2.0),
        params(1.0, -1.0, 0.9, 2.0),
        params(0.0, 2.0, 2.5, 2.0),
        params(0.0, 1.0, 0.4, 3.0),
        params(-1.0, -0.5, 2.0, 3.0),
    ],
)
def test_sampler_matches_cdf(p, rng):
    draws = amoroso.sample(p, rng, 20_000)
    report = ks_two_way(draws, lambda x: amoroso.cdf(p, x), significance=1e-4)
    assert report.passed, report.detail


@pytest.mark.slow
def test_sample_mean_within_clt_band(rng):
    n = 100_000
    draws = amoroso.sample(params(0.0, 1.0, 1.0, 1.0), rng, n)
    assert abs(draws.mean() - 1.0) <= 4.0 / math.sqrt(n)


@pytest.mark.slow
def test_inverse_gamma_sample_passes_ks(rng):
    p = params(0.0, 1.0, 2.0, -1.0)
    draws = amoroso.sample(p, rng, 100_000)
    assert np.all(draws > 0.0)
    report = ks_two_way(draws, lambda x: amoroso.cdf(p, x), significance=0.01)
    assert report.passed


def test_reciprocal_examples():
    assert amoroso.reciprocal(params(0.0, 1.0, 1.0, 1.0)) == params(0.0, 1.0, 1.0, -1.0)
    assert amoroso.reciprocal(params(0.0, 2.0, 3.0, 1.0)) == params(0.0, 0.5, 3.0, -1.0)
    p = params(0.0, -1.25, 0.8, 2.5)
    assert amoroso.reciprocal(amoroso.reciprocal(p)) == p


def test_reciprocal_is_distribution_of_inverse():
    p = params(0.0, 2.0, 3.0, 1.5)
    inverse = amoroso.reciprocal(p)
    for x in (0.5, 1.0, 4.0):
        assert amoroso.cdf(inverse, 1.0 / x) == pytest.approx(amoroso.survival(p, x), rel=1e-12)


def test_reciprocal_requires_zero_location():
    with pytest.raises(DomainError):
        amoroso.reciprocal(params(1.0, 1.0, 1.0, 1.0))


def test_inverse_exponential_cdf_is_q():
    assert amoroso.cdf(params(0.0, 1.0, 1.0, -1.0), 1.0) == pytest.approx(reg_gamma_q(1.0, 1.0), rel=1e-14)


def test_summary_gates_and_conditions():
    summary = amoroso.summary(params(0.0, 1.0, 0.5, -1.0))
    assert summary.mean is None and summary.variance is None
    assert [c.satisfied for c in summary.side_conditions] == [False, False]
    assert summary.skew is None and summary.kurtosis is None
