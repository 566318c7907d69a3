from typing import Dict, List, Literal, Optional, Union

from pydantic import BaseModel, Field

from core.models import DistributionSummary
from verify.report import CheckReport

Quantity = Literal["pdf", "logpdf", "cdf", "sf", "quantile"]
JsonNumber = Union[float, str, None]


class DistributionRequest(BaseModel):
    """A distribution named by catalog name or synonym, with its parameters.

    Attributes:
        dist (str): Catalog name or synonym, e.g. "Weibull" or "chi_square"
        params (Dict[str, float]): The entry's own parameters; omitted ones
            take their catalog defaults

    Example:
        >>> request = DistributionRequest(dist="gamma", params={"theta": 2.0, "alpha": 3.0})
    """
    dist: str
    params: Dict[str, float] = Field(default_factory=dict)


class EvaluateRequest(DistributionRequest):
    """Request model for point evaluation.

    Attributes:
        x (List[float]): Evaluation points (quantile levels for ``quantile``)
        what (str): One of pdf, logpdf, cdf, sf, quantile
    """
    x: List[float] = Field(min_length=1)
    what: Quantity = "pdf"


class EvaluateResponse(BaseModel):
    """Values in the order of the request's points; non-finite values as strings."""
    what: Quantity
    x: List[float]
    values: List[JsonNumber]


class DescribeResponse(BaseModel):
    """Summary of a resolved distribution.

    Attributes:
        name (str): Canonical catalog name
        family (str): "Amoroso" or "LogGamma"
        parameters (Dict[str, float]): Canonical family parameters
        summary (DistributionSummary): Support, mode, gated moments, entropy
        matches (List[str]): Catalog entries matching the parameters, most
            specific first
    """
    name: str
    family: str
    parameters: Dict[str, float]
    summary: DistributionSummary
    matches: List[str]


class SampleRequest(DistributionRequest):
    """Request model for seeded sampling.

    Attributes:
        n (int): Number of draws, capped by the service configuration
        seed (int): Non-negative PCG64 seed
    """
    n: int = Field(default=10, ge=0)
    seed: int = Field(default=0, ge=0)


class SampleResponse(BaseModel):
    seed: int
    draws: List[JsonNumber]


class CurveRequest(DistributionRequest):
    """Request model for tabulating functions of x on an even grid."""
    start: float
    stop: float
    points: int = Field(default=101, ge=2)
    what: List[Literal["pdf", "logpdf", "cdf", "sf"]] = Field(default_factory=lambda: ["pdf"], min_length=1)


class CurveResponse(BaseModel):
    """One object per grid point with key ``x`` and one key per quantity."""
    rows: List[Dict[str, JsonNumber]]


class CheckRequest(BaseModel):
    """Request model for running verification suites.

    Attributes:
        suite (str): identities, limits or all
        seed (int): Root seed of the per-check random streams
        samples (int): Draws per KS check
        significance (float): KS test level
    """
    suite: Literal["identities", "limits", "all"] = "all"
    seed: int = Field(default=0, ge=0)
    samples: int = Field(default=100_000, ge=100)
    significance: float = Field(default=0.01, gt=0.0, lt=1.0)


class CheckResponse(BaseModel):
    """Suite outcome: ``passed`` is true iff every report passed."""
    passed: bool
    reports: List[CheckReport]
    metrics: Dict[str, Optional[Union[int, float, str]]]
