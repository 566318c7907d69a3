"""Family-agnostic operations over a resolved distribution.

The CLI and the HTTP routes both go through this module: a name and named
parameters resolve (via the catalog) to ``AmorosoParams`` or
``LogGammaParams``, and the operations below dispatch to the right family.
"""

import logging
from types import ModuleType
from typing import Dict, Iterable, List, Mapping, Optional, Sequence

import numpy as np
import pandas as pd

from core import amoroso, catalog, loggamma
from core.amoroso import AmorosoParams
from core.catalog import FamilyParams
from core.errors import DomainError
from core.models import DistributionSummary

logger = logging.getLogger(__name__)

QUANTITIES = ("pdf", "logpdf", "cdf", "sf", "quantile")

_FAMILY_FUNCTION = {
    "pdf": "pdf",
    "logpdf": "log_pdf",
    "cdf": "cdf",
    "sf": "survival",
    "quantile": "quantile",
}


def family_module(params: FamilyParams) -> ModuleType:
    return amoroso if isinstance(params, AmorosoParams) else loggamma


def family_name(params: FamilyParams) -> str:
    return "Amoroso" if isinstance(params, AmorosoParams) else "LogGamma"


def resolve(name: str, named_params: Optional[Mapping[str, float]] = None) -> FamilyParams:
    """Catalog lookup plus construction; see :func:`core.catalog.construct`."""
    return catalog.construct(name, named_params)


def canonical_params(params: FamilyParams) -> Dict[str, float]:
    """The family parameters by name, with the log-gamma scale keyed ``lambda``."""
    return params.model_dump(by_alias=True)


def evaluate(params: FamilyParams, quantity: str, xs: Iterable[float]) -> List[float]:
    """Evaluate one of pdf, logpdf, cdf, sf or quantile at every point.

    Raises:
        DomainError: For an unknown quantity, or a quantile level outside (0, 1)
    """
    if quantity not in _FAMILY_FUNCTION:
        raise DomainError(f"unknown quantity {quantity!r}; expected one of {', '.join(QUANTITIES)}")
    function = getattr(family_module(params), _FAMILY_FUNCTION[quantity])
    return [function(params, float(x)) for x in xs]


def describe(params: FamilyParams) -> DistributionSummary:
    return family_module(params).summary(params)


def draw(params: FamilyParams, n: int, seed: int) -> np.ndarray:
    """n draws from a PCG64 stream seeded with ``seed``."""
    if n < 0:
        raise DomainError(f"sample size must be non-negative, got {n}")
    if seed < 0:
        raise DomainError(f"seed must be a non-negative integer, got {seed}")
    rng = np.random.default_rng(seed)
    logger.debug(f"Drawing {n} variates from {family_name(params)} with seed {seed}")
    return family_module(params).sample(params, rng, n)


def curve(
    params: FamilyParams,
    start: float,
    stop: float,
    points: int,
    quantities: Sequence[str] = ("pdf",),
) -> pd.DataFrame:
    """Tabulate quantities on an evenly spaced grid of ``points`` values of x.

    ``quantile`` is not a function of x and is rejected here.

    Raises:
        DomainError: If points < 2, the grid is reversed, or a quantity is unknown
    """
    if points < 2:
        raise DomainError(f"a curve needs at least 2 points, got {points}")
    if not stop > start:
        raise DomainError(f"curve requires from < to, got {start} and {stop}")
    unknown = [q for q in quantities if q not in QUANTITIES or q == "quantile"]
    if unknown:
        raise DomainError(f"cannot tabulate {', '.join(unknown)} against x")
    xs = np.linspace(start, stop, points)
    frame = pd.DataFrame({"x": xs})
    for quantity in quantities:
        frame[quantity] = evaluate(params, quantity, xs)
    return frame
