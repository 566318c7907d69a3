"""Rendering of numbers, summaries and curves for the CLI and the API."""

import json
import logging
import math
from typing import Any, Dict, List, Optional

import pandas as pd

from core.models import DistributionSummary

logger = logging.getLogger(__name__)

OUTPUT_DIGITS = 17
_FLOAT_FORMAT = f"%.{OUTPUT_DIGITS}g"


def format_number(value: Optional[float]) -> str:
    """Shortest faithful text for a float: 17 significant digits, ``inf``,
    ``-inf``, ``nan``, or ``undefined`` for a gated moment.

    Example:
        >>> format_number(0.1)
        '0.10000000000000001'
        >>> format_number(None)
        'undefined'
    """
    if value is None:
        return "undefined"
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return _FLOAT_FORMAT % value


def json_number(value: Optional[float]) -> Any:
    """JSON-safe float: non-finite values become strings, None stays null."""
    if value is None or math.isfinite(value):
        return value
    return format_number(value)


def summary_rows(summary: DistributionSummary) -> List[List[str]]:
    rows = [["support", str(summary.support)], ["mode", format_number(summary.mode)]]
    for quantity in ("mean", "variance", "skew", "kurtosis"):
        value = getattr(summary, quantity)
        if value is None and quantity in ("skew", "kurtosis"):
            continue
        rows.append([quantity, format_number(value)])
    rows.append(["entropy", format_number(summary.entropy)])
    for condition in summary.side_conditions:
        state = "holds" if condition.satisfied else "fails"
        rows.append([f"{condition.quantity} requires", f"{condition.condition} ({state})"])
    return rows


def summary_text(title: str, summary: DistributionSummary) -> str:
    rows = summary_rows(summary)
    width = max(len(label) for label, _ in rows)
    lines = [title] + [f"  {label.ljust(width)}  {value}" for label, value in rows]
    return "\n".join(lines)


def summary_json(title: str, summary: DistributionSummary) -> str:
    document = {"distribution": title, **summary.model_dump(mode="json")}
    return json.dumps(document, indent=2, ensure_ascii=False)


def frame_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, float_format=_FLOAT_FORMAT)


def frame_records(frame: pd.DataFrame) -> List[Dict[str, Any]]:
    return [{key: json_number(value) for key, value in row.items()} for row in frame.to_dict(orient="records")]


def frame_text(frame: pd.DataFrame) -> str:
    return frame.to_string(index=False, float_format=format_number)
