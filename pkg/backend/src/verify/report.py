"""Check results and their text and JSON renderings."""

import json
import math
from typing import Iterable, List, Literal

from pydantic import BaseModel, ConfigDict, field_serializer


class CheckReport(BaseModel):
    """Outcome of one verification check.

    ``mode="upper"`` checks pass when the statistic is at most the threshold.
    ``mode="lower"`` marks negative controls and discrepancy checks, which
    pass only when the statistic exceeds the threshold.

    Attributes:
        check_name (str): Stable, human-readable check identifier
        statistic (float): Observed statistic (KS distance, sup-norm, ...)
        threshold (float): Critical value or declared tolerance
        passed (bool): Outcome, always consistent with ``mode``
        detail (str): Free-form context for the log line
        mode (str): ``upper`` or ``lower``
    """

    model_config = ConfigDict(frozen=True)

    check_name: str
    statistic: float
    threshold: float
    passed: bool
    detail: str = ""
    mode: Literal["upper", "lower"] = "upper"

    @classmethod
    def evaluate(
        cls,
        check_name: str,
        statistic: float,
        threshold: float,
        detail: str = "",
        mode: Literal["upper", "lower"] = "upper",
    ) -> "CheckReport":
        if mode == "upper":
            passed = statistic <= threshold
        else:
            passed = statistic > threshold
        return cls(
            check_name=check_name,
            statistic=statistic,
            threshold=threshold,
            passed=bool(passed),
            detail=detail,
            mode=mode,
        )

    @field_serializer("statistic", "threshold")
    def _serialize_float(self, value: float) -> object:
        if math.isfinite(value):
            return value
        return str(value)

    def line(self) -> str:
        """``name  statistic  threshold  PASS|FAIL`` with 17 significant digits."""
        verdict = "PASS" if self.passed else "FAIL"
        relation = "<=" if self.mode == "upper" else ">"
        return f"{self.check_name}  {self.statistic:.17g}  {relation} {self.threshold:.17g}  {verdict}"


def render_lines(reports: Iterable[CheckReport]) -> str:
    return "\n".join(report.line() for report in reports)


def render_json(reports: Iterable[CheckReport]) -> str:
    items: List[CheckReport] = list(reports)
    document = {
        "passed": all(report.passed for report in items),
        "checks": [report.model_dump() for report in items],
    }
    return json.dumps(document, indent=2)
