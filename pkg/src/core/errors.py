"""
Exception hierarchy shared by every service.

Services raise these; the verification runner turns them into FAIL rows
and the CLI turns them into exit codes.
"""

from typing import Optional


class DarbouxError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(DarbouxError, ValueError):
    """An argument lies outside the domain of the operation (x <= 0, |z| >= 1, b < 0, ...)."""


class UsageError(DarbouxError, ValueError):
    """A surface was used incorrectly (too few grid nodes, unknown operator id, ...)."""


class ConvergenceError(DarbouxError, ArithmeticError):
    """Self-convergence failed: doubling the nodes still moved the result.

    Attributes:
        last: Result at the finest resolution tried.
        previous: Result one doubling earlier.
        residual: |last - previous|.
    """

    def __init__(self, message: str, last: complex = float("nan"), previous: complex = float("nan")):
        super().__init__(message)
        self.last = last
        self.previous = previous
        self.residual = abs(last - previous)


class NumericOverflowError(DarbouxError, OverflowError):
    """A table or log-space exponentiation left the double range."""


class TruncationLossError(DarbouxError):
    """A coefficient map pushed non-zero mass past the series cap.

    Attributes:
        lost: Magnitude of the coefficient that no longer fits.
    """

    def __init__(self, message: str, lost: Optional[float] = None):
        super().__init__(message)
        self.lost = lost
