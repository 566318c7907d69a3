"""Shared result models for the Amoroso and log-gamma families."""

import math
from typing import List, Optional, Union

from pydantic import BaseModel, ConfigDict, field_serializer


def _extended_real(value: float) -> Union[float, str]:
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return value


class Support(BaseModel):
    """Interval carrying a distribution, with boundary-inclusion flags.

    Attributes:
        lower (float): Lower end, ``-math.inf`` for an unbounded left side
        upper (float): Upper end, ``math.inf`` for an unbounded right side
        lower_closed (bool): Whether ``lower`` itself belongs to the support
        upper_closed (bool): Whether ``upper`` itself belongs to the support

    Example:
        >>> Support(lower=0.0, upper=math.inf, lower_closed=True, upper_closed=False).contains(0.0)
        True
    """

    model_config = ConfigDict(frozen=True)

    lower: float
    upper: float
    lower_closed: bool
    upper_closed: bool

    @field_serializer("lower", "upper")
    def _serialize_end(self, value: float) -> Union[float, str]:
        return _extended_real(value)

    @property
    def is_whole_line(self) -> bool:
        return math.isinf(self.lower) and math.isinf(self.upper)

    def contains(self, x: float) -> bool:
        above = x > self.lower or (self.lower_closed and x == self.lower)
        below = x < self.upper or (self.upper_closed and x == self.upper)
        return above and below

    def __str__(self) -> str:
        left = "[" if self.lower_closed else "("
        right = "]" if self.upper_closed else ")"
        return f"{left}{self.lower}, {self.upper}{right}"


class SideCondition(BaseModel):
    """A moment side condition and whether the parameters satisfy it."""

    model_config = ConfigDict(frozen=True)

    quantity: str
    condition: str
    satisfied: bool


class DistributionSummary(BaseModel):
    """Mode, moments and entropy of a distribution.

    Moments are ``None`` exactly when their side condition fails; skew and
    kurtosis are only populated by the log-gamma family, where kurtosis is the
    excess kurtosis.
    """

    model_config = ConfigDict(frozen=True)

    support: Support
    mode: float
    mean: Optional[float] = None
    variance: Optional[float] = None
    skew: Optional[float] = None
    kurtosis: Optional[float] = None
    entropy: float
    side_conditions: List[SideCondition] = []
