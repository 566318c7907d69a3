"""Suite runner for the verification checks.

Every check gets its own random stream, derived from the run seed and the
check's key, so a suite reproduces exactly for a fixed seed regardless of the
order or concurrency the checks run with.
"""

import asyncio
import logging
import math
import zlib
from dataclasses import dataclass
from datetime import datetime
from typing import Callable, Dict, List

import numpy as np

from core.amoroso import AmorosoParams
from core.errors import DistributionError, DomainError
from verify import identities, limits
from verify.report import CheckReport

logger = logging.getLogger(__name__)

SUITES = ("identities", "limits", "all")
DEFAULT_SAMPLES = 100_000
_ERROR_DETAIL = "error: "

CheckCall = Callable[[np.random.Generator], CheckReport]


@dataclass(frozen=True)
class Check:
    """A named, not yet executed check."""

    key: str
    call: CheckCall


def check_stream(seed: int, key: str) -> np.random.Generator:
    """Independent generator for one check, a pure function of (seed, key)."""
    return np.random.default_rng([seed, zlib.crc32(key.encode("utf-8"))])


_AMOROSO_CASES = (
    AmorosoParams(a=0.0, theta=1.0, alpha=2.0, beta=-1.0),
    AmorosoParams(a=1.0, theta=-1.0, alpha=1.0, beta=2.0),
    AmorosoParams(a=0.0, theta=1.0, alpha=1.0, beta=1.0),
    AmorosoParams(a=0.0, theta=2.0, alpha=0.5, beta=3.0),
    AmorosoParams(a=-1.0, theta=1.5, alpha=0.7, beta=-2.0),
)

# (a, omega1, omega2, beta): Gumbel-type maxima, Weibull-type minima, Frechet, equal scales
_FT_CASES = (
    (0.0, -1.0, -1.0, 1.0),
    (0.0, 1.0, 2.0, 1.0),
    (0.0, 1.0, 2.0, -2.0),
    (1.0, 2.0, 2.0, 3.0),
    (0.0, -0.5, -2.0, -2.0),
)


class SuiteRunner:
    """Runs the identity and limit suites and tracks run metrics.

    Attributes:
        seed (int): Root seed for every check stream
        samples (int): Draws per KS check
        significance (float): KS test level
        jobs (int): Maximum number of checks in flight
        metrics (Dict): Counters and timings of the last run

    Example:
        >>> runner = SuiteRunner(seed=0, samples=20_000)
        >>> reports = runner.run("limits")
        >>> runner.get_metrics()['failed']
        0
    """

    def __init__(self, seed: int = 0, samples: int = DEFAULT_SAMPLES, significance: float = 0.01, jobs: int = 1):
        if seed < 0:
            raise DomainError(f"seed must be a non-negative integer, got {seed}")
        self.seed = seed
        self.samples = samples
        self.significance = significance
        self.jobs = max(1, jobs)
        self.metrics = {
            'suite': None,
            'total': 0,
            'passed': 0,
            'failed': 0,
            'errors': 0,
            'start_time': None,
            'end_time': None,
            'duration': 0.0,
        }

    def _ks_checks(self) -> List[Check]:
        n, level = self.samples, self.significance
        checks: List[Check] = []

        def add(key: str, build: Callable[[bool], CheckCall]) -> None:
            checks.append(Check(key, build(False)))
            checks.append(Check(f"{key}.control", build(True)))

        for theta, alpha1, alpha2 in ((1.0, 1.0, 1.0), (2.0, 0.5, 1.5), (0.5, 3.0, 2.0)):
            add(
                f"gamma_addition/{theta}/{alpha1}/{alpha2}",
                lambda control, t=theta, a1=alpha1, a2=alpha2: lambda rng: identities.identity_gamma_addition(
                    t, a1, a2, n, rng, level, control
                ),
            )
        for k in (1.0, 2.0, 3.0):
            add(
                f"chi_sqrt/{k}",
                lambda control, k=k: lambda rng: identities.identity_chi_sqrt(k, n, rng, level, control),
            )
        for sigma, beta in ((1.0, 1.0), (1.0, 2.0), (1.0, -1.0), (0.5, 3.0)):
            add(
                f"stacy_normal_power/{sigma}/{beta}",
                lambda control, s=sigma, b=beta: lambda rng: identities.identity_stacy_normal_power(
                    s, b, n, rng, level, control
                ),
            )
        for alpha in (0.5, 1.0, math.pi / 2.0, 10.0):
            add(
                f"loggamma_log/{alpha}",
                lambda control, a=alpha: lambda rng: identities.identity_loggamma_log(a, n, rng, level, control),
            )
        for params in _AMOROSO_CASES:
            add(
                f"amoroso_stdgamma/{params.a}/{params.theta}/{params.alpha}/{params.beta}",
                lambda control, p=params: lambda rng: identities.identity_amoroso_stdgamma(p, n, rng, level, control),
            )
        for a, vartheta, sigma in ((0.0, 1.0, 1.0), (1.0, 2.0, 0.5)):
            add(
                f"lognormal_exp/{a}/{vartheta}/{sigma}",
                lambda control, a=a, v=vartheta, s=sigma: lambda rng: identities.identity_lognormal_exp(
                    a, v, s, n, rng, level, control
                ),
            )
        return checks

    def _exact_checks(self) -> List[Check]:
        checks = [
            Check(
                f"ft_max/{a}/{w1}/{w2}/{beta}",
                lambda rng, a=a, w1=w1, w2=w2, beta=beta: identities.identity_ft_max(a, w1, w2, beta),
            )
            for a, w1, w2, beta in _FT_CASES
        ]
        checks.extend(
            Check(
                f"ft_printed_scale/{a}/{w1}/{w2}",
                lambda rng, a=a, w1=w1, w2=w2: identities.ft_printed_scale_discrepancy(a, w1, w2),
            )
            for a, w1, w2 in ((0.0, -1.0, -1.0), (0.0, 1.0, 2.0))
        )
        return checks

    def _limit_checks(self) -> List[Check]:
        checks = [
            Check(
                f"limit_loggamma/{lam}/{alpha}",
                lambda rng, lam=lam, alpha=alpha: limits.limit_loggamma(alpha, lam),
            )
            for lam in (1.0, -1.0)
            for alpha in (1.0, 2.0)
        ]
        for mu, sigma in ((0.0, 1.0), (3.0, 2.0)):
            checks.append(Check(f"limit_normal/{mu}/{sigma}", lambda rng, m=mu, s=sigma: limits.limit_normal(m, s)))
            checks.append(
                Check(f"limit_normal_loggamma/{mu}/{sigma}", lambda rng, m=mu, s=sigma: limits.limit_normal_loggamma(m, s))
            )
        for a, vartheta, sigma in ((0.0, 1.0, 1.0), (0.0, 1.0, 0.5), (2.0, 3.0, 1.0)):
            checks.append(
                Check(
                    f"limit_lognormal/{a}/{vartheta}/{sigma}",
                    lambda rng, a=a, v=vartheta, s=sigma: limits.limit_lognormal(v, s, a=a),
                )
            )
        for p in (0.0, 1.0, 2.0):
            checks.append(Check(f"limit_power_law/{p}", lambda rng, p=p: limits.limit_power_law(p)))
        return checks

    def checks(self, suite: str) -> List[Check]:
        """The checks a suite consists of, in reporting order.

        Raises:
            ValueError: If the suite name is unknown
        """
        if suite not in SUITES:
            raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
        planned: List[Check] = []
        if suite in ("identities", "all"):
            planned.extend(self._ks_checks())
            planned.extend(self._exact_checks())
        if suite in ("limits", "all"):
            planned.extend(self._limit_checks())
        return planned

    def _execute(self, check: Check) -> CheckReport:
        try:
            report = check.call(check_stream(self.seed, check.key))
        except (DistributionError, ArithmeticError) as e:
            logger.error(f"Check {check.key} raised: {str(e)}")
            return CheckReport.evaluate(check.key, float("inf"), 0.0, detail=f"{_ERROR_DETAIL}{e}")
        level = logging.INFO if report.passed else logging.WARNING
        logger.log(level, f"{report.check_name}: {'PASS' if report.passed else 'FAIL'} ({report.detail})")
        return report

    async def run_async(self, suite: str) -> List[CheckReport]:
        """Run a suite with at most ``jobs`` checks in flight."""
        planned = self.checks(suite)
        self._start(suite, len(planned))
        semaphore = asyncio.Semaphore(self.jobs)

        async def bounded(check: Check) -> CheckReport:
            async with semaphore:
                return await asyncio.to_thread(self._execute, check)

        reports = await asyncio.gather(*(bounded(check) for check in planned))
        return self._finish(list(reports))

    def run(self, suite: str) -> List[CheckReport]:
        """Run a suite and return its reports ordered by check name."""
        if self.jobs > 1:
            return asyncio.run(self.run_async(suite))
        planned = self.checks(suite)
        self._start(suite, len(planned))
        return self._finish([self._execute(check) for check in planned])

    def _start(self, suite: str, total: int) -> None:
        self.metrics.update(suite=suite, total=total, passed=0, failed=0, errors=0)
        self.metrics['start_time'] = datetime.now()
        self.metrics['end_time'] = None
        logger.info(
            f"Running suite '{suite}': {total} checks, seed={self.seed}, "
            f"samples={self.samples}, significance={self.significance}, jobs={self.jobs}"
        )

    def _finish(self, reports: List[CheckReport]) -> List[CheckReport]:
        self.metrics['passed'] = sum(1 for report in reports if report.passed)
        self.metrics['failed'] = len(reports) - self.metrics['passed']
        # _execute runs on worker threads, so errors are tallied once they have joined
        self.metrics['errors'] = sum(1 for report in reports if report.detail.startswith(_ERROR_DETAIL))
        self.metrics['end_time'] = datetime.now()
        self.metrics['duration'] = (self.metrics['end_time'] - self.metrics['start_time']).total_seconds()
        logger.info(
            f"Suite '{self.metrics['suite']}' finished in {self.metrics['duration']:.2f}s: "
            f"{self.metrics['passed']} passed, {self.metrics['failed']} failed, {self.metrics['errors']} errors"
        )
        return sorted(reports, key=lambda report: report.check_name)

    def get_metrics(self) -> Dict:
        """Snapshot of the counters and timings of the last run.

        Returns:
            Dict: suite, total, passed, failed, errors, start_time, end_time
            and duration (seconds)
        """
        return dict(self.metrics)
