"""Exception hierarchy shared by the distribution library.

Every error raised on purpose by the library derives from
``DistributionError`` (a ``ValueError``) or ``ConvergenceError``
(an ``ArithmeticError``), so the CLI and the HTTP routes can map them to exit
codes and status codes without inspecting messages.
"""

from typing import List, Optional


class DistributionError(ValueError):
    """Base class for invalid input to a distribution operation."""


class DomainError(DistributionError):
    """An argument lies outside the domain of an operation."""


class InvalidParameterError(DistributionError):
    """A parameter record violates its invariants."""


class UnknownDistributionError(DistributionError):
    """A distribution name resolves to no catalog entry.

    Attributes:
        name (str): The name as given by the caller
        suggestions (List[str]): Closest canonical names or synonyms
    """

    def __init__(self, name: str, suggestions: Optional[List[str]] = None):
        self.name = name
        self.suggestions = list(suggestions or [])
        message = f"Unknown distribution: {name!r}"
        if self.suggestions:
            message += f" (did you mean: {', '.join(self.suggestions)}?)"
        super().__init__(message)


class ConstraintViolationError(DistributionError):
    """Named parameters break a catalog entry constraint."""


class NotConstructibleError(DistributionError):
    """A limit-only catalog entry was used as a concrete distribution."""


class InsufficientSampleError(DistributionError):
    """Too few draws for an asymptotic goodness-of-fit test."""


class ConvergenceError(ArithmeticError):
    """An iterative kernel or the quadrature failed to converge."""
