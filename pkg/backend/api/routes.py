from fastapi import APIRouter, HTTPException
from typing import Dict, List
import logging

import os
import sys

# Add the backend directory to Python path
backend_dir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
src_dir = os.path.join(backend_dir, 'src')
sys.path.insert(0, src_dir)

from core import catalog, distribution
from core.errors import ConvergenceError, DistributionError, UnknownDistributionError
from utils.formatting import frame_records, json_number
from verify.runner import SuiteRunner
from config.settings import load_service_config, validate_config
from .models import (
    CheckRequest,
    CheckResponse,
    CurveRequest,
    CurveResponse,
    DescribeResponse,
    DistributionRequest,
    EvaluateRequest,
    EvaluateResponse,
    SampleRequest,
    SampleResponse,
)

logger = logging.getLogger(__name__)

router = APIRouter()

# Load service configuration
service_config = load_service_config()
if error := validate_config(service_config):
    raise Exception(error)

MAX_SAMPLES = int(service_config['max_samples'])
MAX_CURVE_POINTS = int(service_config['max_curve_points'])


def _http_error(e: Exception) -> HTTPException:
    """Map library exceptions onto status codes.

    404 for an unknown name, 400 for any other rejected input, 422 when a
    numerical kernel fails to converge and 500 for everything else.
    """
    if isinstance(e, HTTPException):
        return e
    if isinstance(e, UnknownDistributionError):
        return HTTPException(status_code=404, detail={"message": str(e), "suggestions": e.suggestions})
    if isinstance(e, DistributionError):
        return HTTPException(status_code=400, detail=str(e))
    if isinstance(e, ConvergenceError):
        return HTTPException(status_code=422, detail=str(e))
    logger.error(f"Unexpected error: {str(e)}", exc_info=True)
    return HTTPException(status_code=500, detail=str(e))


@router.post("/evaluate", response_model=EvaluateResponse)
async def evaluate(request: EvaluateRequest) -> EvaluateResponse:
    """Evaluate pdf, logpdf, cdf, sf or quantile at each requested point.

    Raises:
        HTTPException:
            - 404: If the distribution name does not resolve
            - 400: For constraint violations or quantile levels outside (0, 1)

    Example:
        >>> response = await evaluate(EvaluateRequest(dist="exponential", x=[0.0]))
        >>> response.values
        [1.0]
    """
    try:
        params = distribution.resolve(request.dist, request.params)
        values = distribution.evaluate(params, request.what, request.x)
        return EvaluateResponse(what=request.what, x=request.x, values=[json_number(v) for v in values])
    except Exception as e:
        raise _http_error(e)


@router.post("/describe", response_model=DescribeResponse)
async def describe(request: DistributionRequest) -> DescribeResponse:
    """Support, mode, gated moments, entropy, canonical parameters and catalog matches."""
    try:
        entry = catalog.lookup(request.dist)
        params = distribution.resolve(request.dist, request.params)
        return DescribeResponse(
            name=entry.name,
            family=distribution.family_name(params),
            parameters=distribution.canonical_params(params),
            summary=distribution.describe(params),
            matches=catalog.classify(params),
        )
    except Exception as e:
        raise _http_error(e)


@router.post("/sample", response_model=SampleResponse)
async def sample(request: SampleRequest) -> SampleResponse:
    """Seeded draws; identical requests return identical draws.

    Raises:
        HTTPException: 400 if ``n`` exceeds the configured maximum
    """
    try:
        if request.n > MAX_SAMPLES:
            raise HTTPException(status_code=400, detail=f"n={request.n} exceeds the limit of {MAX_SAMPLES}")
        params = distribution.resolve(request.dist, request.params)
        draws = distribution.draw(params, request.n, request.seed)
        return SampleResponse(seed=request.seed, draws=[json_number(float(v)) for v in draws])
    except Exception as e:
        raise _http_error(e)


@router.post("/curve", response_model=CurveResponse)
async def curve(request: CurveRequest) -> CurveResponse:
    """Tabulate the requested quantities on an evenly spaced x grid."""
    try:
        if request.points > MAX_CURVE_POINTS:
            raise HTTPException(
                status_code=400, detail=f"points={request.points} exceeds the limit of {MAX_CURVE_POINTS}"
            )
        params = distribution.resolve(request.dist, request.params)
        frame = distribution.curve(params, request.start, request.stop, request.points, request.what)
        return CurveResponse(rows=frame_records(frame))
    except Exception as e:
        raise _http_error(e)


@router.get("/catalog")
async def list_catalog() -> List[Dict]:
    """Every catalog entry with synonyms, parameters, mapping and anchor."""
    return [entry.to_dict() for entry in catalog.entries()]


@router.get("/catalog/{name}")
async def get_catalog_entry(name: str) -> Dict:
    """Resolve one canonical name or synonym.

    Raises:
        HTTPException: 404 with suggestions if the name does not resolve
    """
    try:
        return catalog.lookup(name).to_dict()
    except Exception as e:
        raise _http_error(e)


@router.post("/check", response_model=CheckResponse)
async def check(request: CheckRequest) -> CheckResponse:
    """Run a verification suite and return every report.

    Raises:
        HTTPException: 400 if ``samples`` exceeds the configured maximum
    """
    try:
        if request.samples > MAX_SAMPLES:
            raise HTTPException(status_code=400, detail=f"samples={request.samples} exceeds the limit of {MAX_SAMPLES}")
        runner = SuiteRunner(seed=request.seed, samples=request.samples, significance=request.significance)
        reports = await runner.run_async(request.suite)
        metrics = {
            key: value.isoformat() if hasattr(value, 'isoformat') else value
            for key, value in runner.get_metrics().items()
        }
        return CheckResponse(passed=all(r.passed for r in reports), reports=reports, metrics=metrics)
    except Exception as e:
        raise _http_error(e)
