"""Catalog of the named special cases of the Amoroso and log-gamma families.

Each named distribution is one declarative ``CatalogEntry``: its own
parameters with their constraints and defaults, the mapping into
``AmorosoParams`` or ``LogGammaParams``, the synonyms it is known by, and the
structural pattern that ``classify`` uses to recognise it from raw parameters.
Limit-only entries (log-normal, normal, power law) carry substitution rules
instead of a mapping; the log-gamma entry carries both.

Names are matched case-insensitively, with accents dropped and spaces,
hyphens and underscores treated alike ("Chi Square" = "chi-square" =
"chi_square", "Levy" = "Lévy").

Example:
    >>> construct("rayleigh", {"sigma": 1.0})
    AmorosoParams(a=0.0, theta=1.4142135623730951, alpha=1.0, beta=2.0)
    >>> lookup("Vinci").name
    'inverse gamma'
"""

import difflib
import json
import logging
import math
import re
import unicodedata
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, List, Mapping, Optional, Tuple, Union

import pandas as pd
from pydantic import ValidationError

from core.amoroso import AmorosoParams
from core.errors import (
    ConstraintViolationError,
    DomainError,
    InvalidParameterError,
    NotConstructibleError,
    UnknownDistributionError,
)
from core.loggamma import LogGammaParams

logger = logging.getLogger(__name__)

FamilyParams = Union[AmorosoParams, LogGammaParams]


class Family(str, Enum):
    AMOROSO = "amoroso"
    LOGGAMMA = "loggamma"
    LIMIT = "limit-only"


class Constraint(str, Enum):
    """Machine-checkable constraint on a named parameter."""

    REAL = "real"
    NONZERO = "non-zero"
    POSITIVE = "> 0"
    POSITIVE_INTEGER = "positive integer"

    def check(self, value: float) -> bool:
        if not math.isfinite(value):
            return False
        if self is Constraint.NONZERO:
            return value != 0.0
        if self is Constraint.POSITIVE:
            return value > 0.0
        if self is Constraint.POSITIVE_INTEGER:
            return value >= 1.0 and float(value).is_integer()
        return True


@dataclass(frozen=True)
class ParamSpec:
    name: str
    constraint: Constraint = Constraint.REAL
    default: float = 0.0


@dataclass(frozen=True)
class Condition:
    """One structural clause of a classification pattern.

    ``attr`` names the parameter. ``kind`` is ``pin`` (equal to ``value``),
    ``sign`` (same sign as ``value``), ``integer`` or ``half_integer``;
    ``custom`` clauses call ``test`` instead.
    """

    attr: str
    kind: str
    value: float = 0.0
    test: Optional[Callable[[FamilyParams, float], bool]] = field(default=None, compare=False)

    @property
    def weight(self) -> int:
        # exact anchors outrank sign and integrality clauses
        return 2 if self.kind == "pin" else 1

    def matches(self, params: FamilyParams, tol: float) -> bool:
        if self.kind == "custom":
            return bool(self.test(params, tol))
        actual = getattr(params, self.attr)
        if self.kind == "pin":
            return _close(actual, self.value, tol)
        if self.kind == "sign":
            return actual * self.value > 0.0
        if self.kind == "integer":
            return actual >= 1.0 - tol and _close(actual, round(actual), tol)
        if self.kind == "half_integer":
            return _close(2.0 * actual, round(2.0 * actual), tol)
        raise ValueError(f"unknown condition kind {self.kind!r}")


@dataclass(frozen=True)
class LimitRule:
    """A limiting substitution that approaches a named distribution.

    Attributes:
        family (Family): Family of the approximating members
        parameter (str): The parameter that is sent to the limit
        approaches (str): Limit point, e.g. ``"inf"`` or ``"0"``
        substitution (str): Human-readable substitution
        build (Callable): (named params, limit parameter value) -> family params
    """

    family: Family
    parameter: str
    approaches: str
    substitution: str
    build: Callable[[Mapping[str, float], float], FamilyParams] = field(compare=False, repr=False)


@dataclass(frozen=True)
class CatalogEntry:
    """A named special case or limit of the Amoroso / log-gamma families."""

    name: str
    family: Family
    params: Tuple[ParamSpec, ...]
    mapping: str
    anchor: str
    build: Optional[Callable[[Mapping[str, float]], FamilyParams]] = field(default=None, compare=False, repr=False)
    synonyms: Tuple[str, ...] = ()
    pattern: Tuple[Condition, ...] = ()
    parent: Optional[str] = None
    notes: str = ""
    limits: Tuple[LimitRule, ...] = ()
    improper: bool = False

    @property
    def param_names(self) -> List[str]:
        return [spec.name for spec in self.params]

    @property
    def constructible(self) -> bool:
        return self.build is not None

    @property
    def specificity(self) -> int:
        return sum(condition.weight for condition in self.pattern)

    def defaults(self) -> Dict[str, float]:
        return {spec.name: spec.default for spec in self.params}

    def constraints(self) -> List[str]:
        return [f"{spec.name}: {spec.constraint.value}" for spec in self.params]

    def to_dict(self) -> Dict:
        return {
            "name": self.name,
            "family": self.family.value,
            "synonyms": list(self.synonyms),
            "parameters": [
                {"name": spec.name, "constraint": spec.constraint.value, "default": spec.default}
                for spec in self.params
            ],
            "mapping": self.mapping,
            "anchor": self.anchor,
            "parent": self.parent,
            "notes": self.notes,
            "improper": self.improper,
            "limits": [
                {
                    "family": rule.family.value,
                    "parameter": rule.parameter,
                    "approaches": rule.approaches,
                    "substitution": rule.substitution,
                }
                for rule in self.limits
            ],
        }


def _close(actual: float, target: float, tol: float) -> bool:
    return abs(actual - target) <= tol * max(1.0, abs(target))


def normalize_name(name: str) -> str:
    """Canonical lookup key: accents stripped, case-folded, separators unified."""
    decomposed = unicodedata.normalize("NFKD", name)
    stripped = "".join(ch for ch in decomposed if not unicodedata.combining(ch))
    key = re.sub(r"[\s_\-]+", " ", stripped.casefold())
    key = re.sub(r"[^\w ]", "", key)
    return re.sub(r"\s+", " ", key).strip()


# -- parameter specs -------------------------------------------------------

A = ParamSpec("a", Constraint.REAL, 0.0)
THETA = ParamSpec("theta", Constraint.NONZERO, 1.0)
ALPHA = ParamSpec("alpha", Constraint.POSITIVE, 1.0)
BETA = ParamSpec("beta", Constraint.NONZERO, 1.0)
BETA_POS = ParamSpec("beta", Constraint.POSITIVE, 1.0)
BETA_BAR = ParamSpec("beta_bar", Constraint.POSITIVE, 1.0)
OMEGA = ParamSpec("omega", Constraint.NONZERO, 1.0)
N = ParamSpec("n", Constraint.POSITIVE_INTEGER, 1.0)
K = ParamSpec("k", Constraint.POSITIVE_INTEGER, 1.0)
SIGMA = ParamSpec("sigma", Constraint.POSITIVE, 1.0)
NU = ParamSpec("nu", Constraint.REAL, 0.0)
LAMBDA = ParamSpec("lambda", Constraint.NONZERO, 1.0)
LAMBDA_BAR = ParamSpec("lambda_bar", Constraint.NONZERO, 1.0)
U = ParamSpec("u", Constraint.REAL, 0.0)


def _pin(name: str, value: float) -> Condition:
    return Condition(name, "pin", value)


def _sign(name: str, sign: float) -> Condition:
    return Condition(name, "sign", sign)


_A0 = _pin("a", 0.0)
_THETA_POS = _sign("theta", 1.0)
_ALPHA_INT = Condition("alpha", "integer")
_ALPHA_HALF = Condition("alpha", "half_integer")
_PSEUDO_WEIBULL_ALPHA = Condition(
    "alpha", "custom", test=lambda p, tol: _close(p.alpha, 1.0 + 1.0 / p.beta, tol)
)


def _amoroso(a: float, theta: float, alpha: float, beta: float) -> AmorosoParams:
    return AmorosoParams(a=a, theta=theta, alpha=alpha, beta=beta)


def _loggamma(nu: float, lam: float, alpha: float) -> LogGammaParams:
    return LogGammaParams(nu=nu, lam=lam, alpha=alpha)


def _sigma_scale(sigma: float, beta: float) -> float:
    """θ = (2σ²)^{1/β}, the scale of the σ-parameterized chi-type entries."""
    return (2.0 * sigma * sigma) ** (1.0 / beta)


# -- limit rules -----------------------------------------------------------

def _lognormal_member(v: Mapping[str, float], beta: float) -> AmorosoParams:
    bs = beta * v["sigma"]
    return _amoroso(v["a"], v["vartheta"] * bs ** (2.0 / beta), 1.0 / (bs * bs), beta)


def _normal_amoroso_member(v: Mapping[str, float], alpha: float) -> AmorosoParams:
    root = math.sqrt(alpha)
    return _amoroso(v["mu"] - v["sigma"] * root, v["sigma"] / root, alpha, 1.0)


def _normal_loggamma_member(v: Mapping[str, float], alpha: float) -> LogGammaParams:
    root = math.sqrt(alpha)
    return _loggamma(v["mu"] - v["sigma"] * root * math.log(alpha), v["sigma"] * root, alpha)


def _power_law_member(v: Mapping[str, float], beta: float) -> AmorosoParams:
    alpha = (1.0 - v["p"]) / beta
    if not alpha > 0.0:
        raise DomainError(
            f"power law p={v['p']} has no Amoroso member at beta={beta}: alpha = (1-p)/beta must be > 0"
        )
    return _amoroso(v["a"], 1.0, alpha, beta)


def _loggamma_amoroso_member(v: Mapping[str, float], beta: float) -> AmorosoParams:
    return _amoroso(v["nu"] - beta * v["lambda"], beta * v["lambda"], v["alpha"], beta)


# -- the catalog -----------------------------------------------------------

_ENTRIES: Tuple[CatalogEntry, ...] = (
    CatalogEntry(
        name="Amoroso",
        family=Family.AMOROSO,
        params=(A, THETA, ALPHA, BETA),
        mapping="Amoroso(x | a, theta, alpha, beta)",
        anchor="Amoroso(x | a, theta, alpha, beta)",
        build=lambda v: _amoroso(v["a"], v["theta"], v["alpha"], v["beta"]),
        synonyms=("Amaroso", "Stacy-Mihram"),
    ),
    CatalogEntry(
        name="Stacy",
        family=Family.AMOROSO,
        params=(THETA, ALPHA, BETA),
        mapping="Amoroso(x | 0, theta, alpha, beta)",
        anchor="Stacy(x | theta, alpha, beta)",
        build=lambda v: _amoroso(0.0, v["theta"], v["alpha"], v["beta"]),
        synonyms=(
            "generalized gamma",
            "generalized inverse gamma",
            "generalized semi-normal",
            "hydrograph",
            "Leonard hydrograph",
            "hyper gamma",
            "Nukiyama-Tanasawa",
            "transformed gamma",
        ),
        pattern=(_A0,),
        notes="beta < 0 gives the generalized inverse gamma distribution",
    ),
    CatalogEntry(
        name="generalized Fisher-Tippett",
        family=Family.AMOROSO,
        params=(A, OMEGA, N, BETA),
        mapping="Amoroso(x | a, omega/n^(1/beta), n, beta)",
        anchor="GenFisherTippett(x | a, omega, n, beta)",
        build=lambda v: _amoroso(v["a"], v["omega"] / v["n"] ** (1.0 / v["beta"]), v["n"], v["beta"]),
        pattern=(_ALPHA_INT,),
        notes="nth maxima for beta/omega < 0, nth minima for beta/omega > 0",
    ),
    CatalogEntry(
        name="Fisher-Tippett",
        family=Family.AMOROSO,
        params=(A, OMEGA, BETA),
        mapping="Amoroso(x | a, omega, 1, beta)",
        anchor="FisherTippett(x | a, omega, beta)",
        build=lambda v: _amoroso(v["a"], v["omega"], 1.0, v["beta"]),
        synonyms=(
            "generalized extreme value",
            "GEV",
            "von Mises-Jenkinson",
            "von Mises extreme value",
        ),
        pattern=(_pin("alpha", 1.0),),
        notes="maxima for beta/omega < 0, minima for beta/omega > 0",
    ),
    CatalogEntry(
        name="Fréchet",
        family=Family.AMOROSO,
        params=(A, OMEGA, BETA_BAR),
        mapping="Amoroso(x | a, omega, 1, -beta_bar)",
        anchor="Frechet(x | a, omega, beta_bar)",
        build=lambda v: _amoroso(v["a"], v["omega"], 1.0, -v["beta_bar"]),
        synonyms=(
            "extreme value type II",
            "Fisher-Tippett type II",
            "Gumbel type II",
            "inverse Weibull",
        ),
        pattern=(_pin("alpha", 1.0), _sign("beta", -1.0)),
    ),
    CatalogEntry(
        name="generalized Fréchet",
        family=Family.AMOROSO,
        params=(A, OMEGA, N, BETA_BAR),
        mapping="Amoroso(x | a, omega*n^(1/beta_bar), n, -beta_bar)",
        anchor="GenFrechet(x | a, omega, n, beta_bar)",
        build=lambda v: _amoroso(v["a"], v["omega"] * v["n"] ** (1.0 / v["beta_bar"]), v["n"], -v["beta_bar"]),
        pattern=(_ALPHA_INT, _sign("beta", -1.0)),
    ),
    CatalogEntry(
        name="scaled inverse chi",
        family=Family.AMOROSO,
        params=(SIGMA, K),
        mapping="Amoroso(x | 0, 1/sqrt(2 sigma^2), k/2, -2)",
        anchor="ScaledInvChi(x | sigma, k)",
        build=lambda v: _amoroso(0.0, _sigma_scale(v["sigma"], -2.0), v["k"] / 2.0, -2.0),
        pattern=(_A0, _pin("beta", -2.0), _THETA_POS, _ALPHA_HALF),
    ),
    CatalogEntry(
        name="inverse chi",
        family=Family.AMOROSO,
        params=(K,),
        mapping="Amoroso(x | 0, 1/sqrt(2), k/2, -2)",
        anchor="InvChi(x | k)",
        build=lambda v: _amoroso(0.0, 1.0 / math.sqrt(2.0), v["k"] / 2.0, -2.0),
        pattern=(_A0, _pin("theta", 1.0 / math.sqrt(2.0)), _pin("beta", -2.0), _ALPHA_HALF),
    ),
    CatalogEntry(
        name="inverse Rayleigh",
        family=Family.AMOROSO,
        params=(SIGMA,),
        mapping="Amoroso(x | 0, 1/sqrt(2 sigma^2), 1, -2)",
        anchor="InvRayleigh(x | sigma)",
        build=lambda v: _amoroso(0.0, _sigma_scale(v["sigma"], -2.0), 1.0, -2.0),
        pattern=(_A0, _pin("alpha", 1.0), _pin("beta", -2.0), _THETA_POS),
    ),
    CatalogEntry(
        name="Pearson type V",
        family=Family.AMOROSO,
        params=(A, THETA, ALPHA),
        mapping="Amoroso(x | a, theta, alpha, -1)",
        anchor="PearsonV(x | a, theta, alpha)",
        build=lambda v: _amoroso(v["a"], v["theta"], v["alpha"], -1.0),
        pattern=(_pin("beta", -1.0),),
    ),
    CatalogEntry(
        name="inverse gamma",
        family=Family.AMOROSO,
        params=(THETA, ALPHA),
        mapping="Amoroso(x | 0, theta, alpha, -1)",
        anchor="InvGamma(x | theta, alpha)",
        build=lambda v: _amoroso(0.0, v["theta"], v["alpha"], -1.0),
        synonyms=("Vinci",),
        pattern=(_A0, _pin("beta", -1.0)),
    ),
    CatalogEntry(
        name="scaled inverse chi-square",
        family=Family.AMOROSO,
        params=(SIGMA, K),
        mapping="Amoroso(x | 0, 1/(2 sigma^2), k/2, -1)",
        anchor="ScaledInvChiSqr(x | sigma, k)",
        build=lambda v: _amoroso(0.0, _sigma_scale(v["sigma"], -1.0), v["k"] / 2.0, -1.0),
        pattern=(_A0, _pin("beta", -1.0), _THETA_POS, _ALPHA_HALF),
    ),
    CatalogEntry(
        name="inverse chi-square",
        family=Family.AMOROSO,
        params=(K,),
        mapping="Amoroso(x | 0, 1/2, k/2, -1)",
        anchor="InvChiSqr(x | k)",
        build=lambda v: _amoroso(0.0, 0.5, v["k"] / 2.0, -1.0),
        pattern=(_A0, _pin("theta", 0.5), _pin("beta", -1.0), _ALPHA_HALF),
    ),
    CatalogEntry(
        name="Lévy",
        family=Family.AMOROSO,
        params=(A, ParamSpec("c", Constraint.POSITIVE, 1.0)),
        mapping="Amoroso(x | a, c/2, 1/2, -1)",
        anchor="Levy(x | a, c)",
        build=lambda v: _amoroso(v["a"], v["c"] / 2.0, 0.5, -1.0),
        synonyms=("van der Waals profile",),
        pattern=(_pin("alpha", 0.5), _pin("beta", -1.0), _THETA_POS),
        notes="stable; mean and variance do not exist",
    ),
    CatalogEntry(
        name="inverse exponential",
        family=Family.AMOROSO,
        params=(THETA,),
        mapping="Amoroso(x | 0, theta, 1, -1)",
        anchor="InvExp(x | theta)",
        build=lambda v: _amoroso(0.0, v["theta"], 1.0, -1.0),
        pattern=(_A0, _pin("alpha", 1.0), _pin("beta", -1.0)),
    ),
    CatalogEntry(
        name="Pearson type III",
        family=Family.AMOROSO,
        params=(A, THETA, ALPHA),
        mapping="Amoroso(x | a, theta, alpha, 1)",
        anchor="PearsonIII(x | a, theta, alpha)",
        build=lambda v: _amoroso(v["a"], v["theta"], v["alpha"], 1.0),
        pattern=(_pin("beta", 1.0),),
    ),
    CatalogEntry(
        name="gamma",
        family=Family.AMOROSO,
        params=(THETA, ALPHA),
        mapping="Amoroso(x | 0, theta, alpha, 1)",
        anchor="Gamma(x | theta, alpha)",
        build=lambda v: _amoroso(0.0, v["theta"], v["alpha"], 1.0),
        synonyms=("Γ",),
        pattern=(_A0, _pin("beta", 1.0)),
    ),
    CatalogEntry(
        name="Erlang",
        family=Family.AMOROSO,
        params=(ParamSpec("theta", Constraint.POSITIVE, 1.0), N),
        mapping="Amoroso(x | 0, theta, n, 1)",
        anchor="Gamma(x | theta, n)",
        build=lambda v: _amoroso(0.0, v["theta"], v["n"], 1.0),
        synonyms=("m-Erlang",),
        pattern=(_A0, _pin("beta", 1.0), _THETA_POS, _ALPHA_INT),
        parent="gamma",
        notes="waiting time for n events of a Poisson process with rate 1/theta",
    ),
    CatalogEntry(
        name="standard gamma",
        family=Family.AMOROSO,
        params=(ALPHA,),
        mapping="Amoroso(x | 0, 1, alpha, 1)",
        anchor="StdGamma(x | alpha)",
        build=lambda v: _amoroso(0.0, 1.0, v["alpha"], 1.0),
        synonyms=("standard Amoroso",),
        pattern=(_A0, _pin("theta", 1.0), _pin("beta", 1.0)),
    ),
    CatalogEntry(
        name="scaled chi-square",
        family=Family.AMOROSO,
        params=(SIGMA, K),
        mapping="Amoroso(x | 0, 2 sigma^2, k/2, 1)",
        anchor="ScaledChiSqr(x | sigma, k)",
        build=lambda v: _amoroso(0.0, _sigma_scale(v["sigma"], 1.0), v["k"] / 2.0, 1.0),
        pattern=(_A0, _pin("beta", 1.0), _THETA_POS, _ALPHA_HALF),
    ),
    CatalogEntry(
        name="chi-square",
        family=Family.AMOROSO,
        params=(K,),
        mapping="Amoroso(x | 0, 2, k/2, 1)",
        anchor="ChiSqr(x | k)",
        build=lambda v: _amoroso(0.0, 2.0, v["k"] / 2.0, 1.0),
        synonyms=("χ²", "chi-squared"),
        pattern=(_A0, _pin("theta", 2.0), _pin("beta", 1.0), _ALPHA_HALF),
    ),
    CatalogEntry(
        name="shifted exponential",
        family=Family.AMOROSO,
        params=(A, THETA),
        mapping="Amoroso(x | a, theta, 1, 1)",
        anchor="ShiftExp(x | a, theta)",
        build=lambda v: _amoroso(v["a"], v["theta"], 1.0, 1.0),
        synonyms=("translated exponential",),
        pattern=(_pin("alpha", 1.0), _pin("beta", 1.0)),
    ),
    CatalogEntry(
        name="exponential",
        family=Family.AMOROSO,
        params=(THETA,),
        mapping="Amoroso(x | 0, theta, 1, 1)",
        anchor="Exp(x | theta)",
        build=lambda v: _amoroso(0.0, v["theta"], 1.0, 1.0),
        synonyms=("Pearson type X", "waiting time", "negative exponential"),
        pattern=(_A0, _pin("alpha", 1.0), _pin("beta", 1.0)),
        notes="memoryless",
    ),
    CatalogEntry(
        name="standard exponential",
        family=Family.AMOROSO,
        params=(),
        mapping="Amoroso(x | 0, 1, 1, 1)",
        anchor="Exp(x | 1)",
        build=lambda v: _amoroso(0.0, 1.0, 1.0, 1.0),
        pattern=(_A0, _pin("theta", 1.0), _pin("alpha", 1.0), _pin("beta", 1.0)),
        parent="exponential",
    ),
    CatalogEntry(
        name="Wien",
        family=Family.AMOROSO,
        params=(ParamSpec("T", Constraint.POSITIVE, 1.0),),
        mapping="Amoroso(x | 0, T, 4, 1)",
        anchor="Wien(x | T)",
        build=lambda v: _amoroso(0.0, v["T"], 4.0, 1.0),
        synonyms=("Vienna",),
        pattern=(_A0, _pin("alpha", 4.0), _pin("beta", 1.0)),
        parent="gamma",
        notes="Wien(x|T) = Gamma(x|T,4), i.e. a gamma distribution with alpha = 4",
    ),
    CatalogEntry(
        name="Nakagami",
        family=Family.AMOROSO,
        params=(A, THETA, ParamSpec("m", Constraint.POSITIVE, 1.0)),
        mapping="Amoroso(x | a, theta, m/2, 2)",
        anchor="Nakagami(x | a, theta, m)",
        build=lambda v: _amoroso(v["a"], v["theta"], v["m"] / 2.0, 2.0),
        synonyms=("generalized normal", "Nakagami-m"),
        pattern=(_pin("beta", 2.0),),
    ),
    CatalogEntry(
        name="scaled chi",
        family=Family.AMOROSO,
        params=(SIGMA, K),
        mapping="Amoroso(x | 0, sqrt(2 sigma^2), k/2, 2)",
        anchor="ScaledChi(x | sigma, k)",
        build=lambda v: _amoroso(0.0, _sigma_scale(v["sigma"], 2.0), v["k"] / 2.0, 2.0),
        synonyms=("generalized Rayleigh",),
        pattern=(_A0, _pin("beta", 2.0), _THETA_POS, _ALPHA_HALF),
    ),
    CatalogEntry(
        name="chi",
        family=Family.AMOROSO,
        params=(K,),
        mapping="Amoroso(x | 0, sqrt(2), k/2, 2)",
        anchor="Chi(x | k)",
        build=lambda v: _amoroso(0.0, math.sqrt(2.0), v["k"] / 2.0, 2.0),
        synonyms=("χ",),
        pattern=(_A0, _pin("theta", math.sqrt(2.0)), _pin("beta", 2.0), _ALPHA_HALF),
    ),
    CatalogEntry(
        name="half-normal",
        family=Family.AMOROSO,
        params=(SIGMA,),
        mapping="Amoroso(x | 0, sqrt(2 sigma^2), 1/2, 2)",
        anchor="HalfNormal(x | sigma)",
        build=lambda v: _amoroso(0.0, _sigma_scale(v["sigma"], 2.0), 0.5, 2.0),
        synonyms=("semi-normal", "positive definite normal", "one-sided normal"),
        pattern=(_A0, _pin("alpha", 0.5), _pin("beta", 2.0), _THETA_POS),
    ),
    CatalogEntry(
        name="Rayleigh",
        family=Family.AMOROSO,
        params=(SIGMA,),
        mapping="Amoroso(x | 0, sqrt(2 sigma^2), 1, 2)",
        anchor="Rayleigh(x | sigma)",
        build=lambda v: _amoroso(0.0, _sigma_scale(v["sigma"], 2.0), 1.0, 2.0),
        pattern=(_A0, _pin("alpha", 1.0), _pin("beta", 2.0), _THETA_POS),
    ),
    CatalogEntry(
        name="Maxwell",
        family=Family.AMOROSO,
        params=(SIGMA,),
        mapping="Amoroso(x | 0, sqrt(2 sigma^2), 3/2, 2)",
        anchor="Maxwell(x | sigma)",
        build=lambda v: _amoroso(0.0, _sigma_scale(v["sigma"], 2.0), 1.5, 2.0),
        synonyms=("Maxwell-Boltzmann", "Maxwell speed"),
        pattern=(_A0, _pin("alpha", 1.5), _pin("beta", 2.0), _THETA_POS),
    ),
    CatalogEntry(
        name="Wilson-Hilferty",
        family=Family.AMOROSO,
        params=(THETA, ALPHA),
        mapping="Amoroso(x | 0, theta, alpha, 3)",
        anchor="WilsonHilferty(x | theta, alpha)",
        build=lambda v: _amoroso(0.0, v["theta"], v["alpha"], 3.0),
        pattern=(_A0, _pin("beta", 3.0)),
    ),
    CatalogEntry(
        name="generalized Weibull",
        family=Family.AMOROSO,
        params=(A, OMEGA, N, BETA_POS),
        mapping="Amoroso(x | a, omega/n^(1/beta), n, beta)",
        anchor="GenWeibull(x | a, omega, n, beta)",
        build=lambda v: _amoroso(v["a"], v["omega"] / v["n"] ** (1.0 / v["beta"]), v["n"], v["beta"]),
        pattern=(_ALPHA_INT, _sign("beta", 1.0)),
    ),
    CatalogEntry(
        name="Weibull",
        family=Family.AMOROSO,
        params=(A, OMEGA, BETA_POS),
        mapping="Amoroso(x | a, omega, 1, beta)",
        anchor="Weibull(x | a, omega, beta)",
        build=lambda v: _amoroso(v["a"], v["omega"], 1.0, v["beta"]),
        synonyms=(
            "Fisher-Tippett type III",
            "Gumbel type III",
            "extreme value type III",
            "Rosin-Rammler",
            "Rosin-Rammler-Weibull",
            "Weibull-Gnedenko",
            "reversed Weibull",
        ),
        pattern=(_pin("alpha", 1.0), _sign("beta", 1.0)),
        notes="negative omega gives the reversed Weibull distribution of maxima",
    ),
    CatalogEntry(
        name="pseudo-Weibull",
        family=Family.AMOROSO,
        params=(THETA, BETA_POS),
        mapping="Amoroso(x | 0, theta, 1 + 1/beta, beta)",
        anchor="PseudoWeibull(x | theta, beta)",
        build=lambda v: _amoroso(0.0, v["theta"], 1.0 + 1.0 / v["beta"], v["beta"]),
        pattern=(_A0, _sign("beta", 1.0), _PSEUDO_WEIBULL_ALPHA),
    ),
    CatalogEntry(
        name="stretched exponential",
        family=Family.AMOROSO,
        params=(THETA, BETA_POS),
        mapping="Amoroso(x | 0, theta, 1, beta)",
        anchor="StretchedExp(x | theta, beta)",
        build=lambda v: _amoroso(0.0, v["theta"], 1.0, v["beta"]),
        pattern=(_A0, _pin("alpha", 1.0), _sign("beta", 1.0)),
    ),
    CatalogEntry(
        name="log-gamma",
        family=Family.LOGGAMMA,
        params=(NU, LAMBDA, ALPHA),
        mapping="LogGamma(x | nu, lambda, alpha)",
        anchor="LogGamma(x | nu, lambda, alpha)",
        build=lambda v: _loggamma(v["nu"], v["lambda"], v["alpha"]),
        synonyms=("Coale-McNeil", "generalized log-gamma"),
        limits=(
            LimitRule(
                family=Family.AMOROSO,
                parameter="beta",
                approaches="inf",
                substitution="Amoroso(x | nu - beta*lambda, beta*lambda, alpha, beta)",
                build=_loggamma_amoroso_member,
            ),
        ),
        notes="ln(Amoroso(0, e^nu, alpha, 1/lambda)) ~ LogGamma(nu, lambda, alpha)",
    ),
    CatalogEntry(
        name="standard log-gamma",
        family=Family.LOGGAMMA,
        params=(ALPHA,),
        mapping="LogGamma(x | 0, 1, alpha)",
        anchor="StdLogGamma(x | alpha)",
        build=lambda v: _loggamma(0.0, 1.0, v["alpha"]),
        pattern=(_pin("nu", 0.0), _pin("lam", 1.0)),
    ),
    CatalogEntry(
        name="log-chi-square",
        family=Family.LOGGAMMA,
        params=(K,),
        mapping="LogGamma(x | ln 2, 1, k/2)",
        anchor="LogChiSqr(x | k)",
        build=lambda v: _loggamma(math.log(2.0), 1.0, v["k"] / 2.0),
        pattern=(_pin("nu", math.log(2.0)), _pin("lam", 1.0), _ALPHA_HALF),
    ),
    CatalogEntry(
        name="generalized Gumbel",
        family=Family.LOGGAMMA,
        params=(U, LAMBDA_BAR, N),
        mapping="LogGamma(x | u + lambda_bar ln n, -lambda_bar, n)",
        anchor="GenGumbel(x | u, lambda_bar, n)",
        build=lambda v: _loggamma(v["u"] + v["lambda_bar"] * math.log(v["n"]), -v["lambda_bar"], v["n"]),
        pattern=(_ALPHA_INT,),
    ),
    CatalogEntry(
        name="Gumbel",
        family=Family.LOGGAMMA,
        params=(U, LAMBDA_BAR),
        mapping="LogGamma(x | u, -lambda_bar, 1)",
        anchor="Gumbel(x | u, lambda_bar)",
        build=lambda v: _loggamma(v["u"], -v["lambda_bar"], 1.0),
        synonyms=(
            "Fisher-Tippett type I",
            "Fisher-Tippett-Gumbel",
            "FTG",
            "Gumbel-Fisher-Tippett",
            "Gumbel type I",
            "log-Weibull",
            "extreme value",
            "extreme value type I",
            "doubly exponential",
            "double exponential",
        ),
        pattern=(_pin("alpha", 1.0),),
        notes="maxima for lambda_bar > 0, minima for lambda_bar < 0; "
        "'double exponential' may also mean the Laplace distribution",
    ),
    CatalogEntry(
        name="BHP",
        family=Family.LOGGAMMA,
        params=(NU, LAMBDA),
        mapping="LogGamma(x | nu, lambda, pi/2)",
        anchor="BHP(x | nu, lambda)",
        build=lambda v: _loggamma(v["nu"], v["lambda"], math.pi / 2.0),
        synonyms=("Bramwell-Holdsworth-Pinton",),
        pattern=(_pin("alpha", math.pi / 2.0),),
    ),
    CatalogEntry(
        name="standard Gumbel",
        family=Family.LOGGAMMA,
        params=(),
        mapping="LogGamma(x | 0, -1, 1)",
        anchor="StdGumbel(x)",
        build=lambda v: _loggamma(0.0, -1.0, 1.0),
        pattern=(_pin("nu", 0.0), _pin("lam", -1.0), _pin("alpha", 1.0)),
        parent="Gumbel",
    ),
    CatalogEntry(
        name="log-normal",
        family=Family.LIMIT,
        params=(A, ParamSpec("vartheta", Constraint.POSITIVE, 1.0), SIGMA),
        mapping="lim beta->0 Amoroso(x | a, vartheta (beta sigma)^(2/beta), 1/(beta sigma)^2, beta)",
        anchor="LogNormal(x | a, vartheta, sigma)",
        synonyms=(
            "Galton",
            "Galton-McAlister",
            "antilog-normal",
            "logarithmic-normal",
            "logarithmico-normal",
            "Cobb-Douglas",
            "Λ",
            "standard log-normal",
            "Gibrat",
            "log-normal, two parameter",
            "two-parameter log-normal",
        ),
        limits=(
            LimitRule(
                family=Family.AMOROSO,
                parameter="beta",
                approaches="0",
                substitution="Amoroso(x | a, vartheta (beta sigma)^(2/beta), 1/(beta sigma)^2, beta)",
                build=_lognormal_member,
            ),
        ),
        notes="LogNormal(a, vartheta, sigma) ~ exp(Normal(ln vartheta, sigma)) + a; "
        "a=0, vartheta=1, sigma=1 is the standard (Gibrat) log-normal",
    ),
    CatalogEntry(
        name="normal",
        family=Family.LIMIT,
        params=(ParamSpec("mu", Constraint.REAL, 0.0), SIGMA),
        mapping="lim alpha->inf Amoroso(x | mu - sigma sqrt(alpha), sigma/sqrt(alpha), alpha, 1)",
        anchor="Normal(x | mu, sigma)",
        synonyms=(
            "Gauss",
            "Gaussian",
            "bell curve",
            "Laplace-Gauss",
            "de Moivre",
            "error",
            "Laplace's second law of error",
            "law of error",
            "error function",
            "standard normal",
            "unit normal",
            "Φ",
            "z",
            "uniform",
            "flat",
            "delta",
            "degenerate",
        ),
        limits=(
            LimitRule(
                family=Family.AMOROSO,
                parameter="alpha",
                approaches="inf",
                substitution="Amoroso(x | mu - sigma sqrt(alpha), sigma/sqrt(alpha), alpha, 1)",
                build=_normal_amoroso_member,
            ),
            LimitRule(
                family=Family.LOGGAMMA,
                parameter="alpha",
                approaches="inf",
                substitution="LogGamma(x | mu - sigma sqrt(alpha) ln alpha, sigma sqrt(alpha), alpha)",
                build=_normal_loggamma_member,
            ),
        ),
        notes="mu=0, sigma=1 is the standard normal; sigma -> inf gives the unbounded uniform "
        "and sigma -> 0 the delta distribution",
    ),
    CatalogEntry(
        name="power law",
        family=Family.LIMIT,
        params=(A, ParamSpec("p", Constraint.REAL, 1.0)),
        mapping="lim beta->0 Amoroso(x | a, theta, (1-p)/beta, beta)",
        anchor="PowerLaw(x | p)",
        synonyms=("Pearson type XI", "fractal", "half-uniform", "Jeffreys"),
        limits=(
            LimitRule(
                family=Family.AMOROSO,
                parameter="beta",
                approaches="0",
                substitution="Amoroso(x | a, theta, (1-p)/beta, beta)",
                build=_power_law_member,
            ),
        ),
        improper=True,
        notes="improper, proportional to (x-a)^-p; p=0 is the half-uniform and p=1 the Jeffreys distribution",
    ),
)


def _build_index(entries: Tuple[CatalogEntry, ...]) -> Dict[str, CatalogEntry]:
    index: Dict[str, CatalogEntry] = {}
    for entry in entries:
        for alias in (entry.name, *entry.synonyms):
            key = normalize_name(alias)
            if key in index and index[key] is not entry:
                raise RuntimeError(f"catalog name {alias!r} is claimed by {index[key].name} and {entry.name}")
            index[key] = entry
    return index


_INDEX = _build_index(_ENTRIES)


def entries() -> List[CatalogEntry]:
    """All entries in catalog order."""
    return list(_ENTRIES)


def synonym_index() -> Dict[str, str]:
    """Every synonym mapped to the canonical name it resolves to."""
    return {synonym: entry.name for entry in _ENTRIES for synonym in entry.synonyms}


def lookup(name: str) -> CatalogEntry:
    """Resolve a canonical name or synonym to its entry.

    Raises:
        UnknownDistributionError: With up to three nearest known names
    """
    key = normalize_name(name)
    entry = _INDEX.get(key)
    if entry is None:
        display = {normalize_name(alias): alias for e in _ENTRIES for alias in (e.name, *e.synonyms)}
        close = difflib.get_close_matches(key, list(display), n=3, cutoff=0.6)
        raise UnknownDistributionError(name, [display[c] for c in close])
    return entry


def _check_params(entry: CatalogEntry, named: Mapping[str, float], strict: bool) -> Dict[str, float]:
    unknown = sorted(set(named) - set(entry.param_names))
    if unknown:
        raise ConstraintViolationError(
            f"{entry.name} has no parameter(s) {', '.join(unknown)}; expected: {', '.join(entry.param_names) or 'none'}"
        )
    values = entry.defaults()
    values.update({key: float(value) for key, value in named.items()})
    for spec in entry.params:
        constraint = spec.constraint
        if not strict and constraint is Constraint.POSITIVE_INTEGER:
            constraint = Constraint.POSITIVE
        if not constraint.check(values[spec.name]):
            raise ConstraintViolationError(
                f"{entry.name}: parameter {spec.name} must be {constraint.value}, got {values[spec.name]}"
            )
    return values


def construct(name: str, named_params: Optional[Mapping[str, float]] = None, strict: bool = True) -> FamilyParams:
    """Build the family parameters of a named distribution.

    Missing parameters take their documented defaults.

    Args:
        name (str): Canonical name or synonym
        named_params (Mapping[str, float], optional): The entry's own parameters
        strict (bool): When False, integer constraints (k, n) are relaxed to
            positivity, giving the underlying member with real shape

    Returns:
        AmorosoParams | LogGammaParams: Parameters of the resolved family

    Raises:
        UnknownDistributionError: If the name does not resolve
        NotConstructibleError: For limit-only entries
        ConstraintViolationError: If a parameter breaks its constraint
        InvalidParameterError: If the mapped parameters are not representable
    """
    entry = lookup(name)
    if not entry.constructible:
        raise NotConstructibleError(
            f"{entry.name} is a limiting form ({entry.mapping}), not a member of either family"
        )
    values = _check_params(entry, named_params or {}, strict)
    try:
        params = entry.build(values)
    except (ValidationError, OverflowError, ZeroDivisionError) as exc:
        raise InvalidParameterError(f"{entry.name}{values} maps to invalid parameters: {exc}") from exc
    logger.debug(f"Constructed {entry.name} {values} -> {params!r}")
    return params


def limit_entries() -> List[CatalogEntry]:
    """Entries that carry limiting substitution rules."""
    return [entry for entry in _ENTRIES if entry.limits]


def limit_member(
    name: str,
    named_params: Optional[Mapping[str, float]],
    value: float,
    family: Family = Family.AMOROSO,
) -> FamilyParams:
    """Member of ``family`` approaching the named limit at limit-parameter ``value``.

    Raises:
        DomainError: If the entry has no limit rule in ``family``
    """
    entry = lookup(name)
    for rule in entry.limits:
        if rule.family is family:
            values = _check_params(entry, named_params or {}, strict=True)
            return rule.build(values, value)
    raise DomainError(f"{entry.name} has no limit rule within the {family.value} family")


def classify(params: FamilyParams, tol: float = 1e-9) -> List[str]:
    """Names of every entry whose structural pattern matches, most specific first.

    Args:
        params (AmorosoParams | LogGammaParams): Parameters to classify
        tol (float): Relative tolerance for pinned values and integrality

    Returns:
        List[str]: Matching canonical names; the family's own root name last

    Example:
        >>> classify(AmorosoParams(a=1.3, theta=0.7, alpha=2.1, beta=1.7))
        ['Amoroso']
    """
    family = Family.AMOROSO if isinstance(params, AmorosoParams) else Family.LOGGAMMA
    root = "Amoroso" if family is Family.AMOROSO else "log-gamma"
    matched = [
        entry
        for entry in _ENTRIES
        if entry.family is family
        and entry.pattern
        and all(condition.matches(params, tol) for condition in entry.pattern)
    ]
    matched.sort(key=lambda entry: -entry.specificity)
    return [entry.name for entry in matched] + [root]


def export_table(output_format: str = "json") -> str:
    """The catalog as a JSON document or a plain-text table.

    The JSON document is a list of objects with keys ``name``, ``family``,
    ``synonyms``, ``parameters`` (name, constraint, default), ``mapping``,
    ``anchor``, ``parent``, ``notes``, ``improper`` and ``limits``. The text
    table has one row per entry with columns name, family, parameters,
    mapping and synonyms.
    """
    if output_format == "json":
        return json.dumps([entry.to_dict() for entry in _ENTRIES], indent=2, ensure_ascii=False)
    if output_format not in ("text", "csv"):
        raise DomainError(f"unsupported catalog format {output_format!r}")
    frame = pd.DataFrame(
        [
            {
                "name": entry.name,
                "family": entry.family.value,
                "parameters": ", ".join(entry.constraints()) or "-",
                "mapping": entry.mapping,
                "synonyms": "; ".join(entry.synonyms) or "-",
            }
            for entry in _ENTRIES
        ]
    )
    if output_format == "csv":
        return frame.to_csv(index=False)
    return frame.to_string(index=False, justify="left")
