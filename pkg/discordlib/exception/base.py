# SPDX-License-Identifier: MIT
"""Base exception class for the library."""

from typing import Any

from pydantic import BaseModel


class ErrorDetail(BaseModel):
    """Error detail."""

    code: int
    message: str


class BaseException(Exception):
    """
    Base exception class for all custom exception in the library.

    Attributes:
        code: The error detail member from one of the error code classes.
        message: Optional additional message about the error.
        details: Optional extra error details, e.g. the offending residual.
    """

    def __init__(
        self,
        code: ErrorDetail,
        message: str | None = None,
        details: Any | None = None,
    ):
        """
        Initialize the exception.

        Args:
            code: The error code member.
            message: Optional additional message about the error.
            details: Optional extra error details.
        """
        self.code = code
        self.message = message
        self.details = details
        self.__post_init__()
        super().__init__(self.message)

    def __post_init__(self):
        if self.message is None:
            self.message = self.code.message

    def __str__(self) -> str:
        return f"[{self.code.code}] {self.message}"


class ArgumentErrorCode:
    """Invalid-input error codes."""

    PARAMETER_OUT_OF_RANGE = ErrorDetail(code=2001, message="Parameter out of range")
    NEGATIVE_PARAMETER = ErrorDetail(code=2002, message="Parameter must be non-negative")
    DIMENSION_MISMATCH = ErrorDetail(code=2003, message="Dimension mismatch")
    INVALID_GRID = ErrorDetail(code=2004, message="Invalid time grid")
    INVALID_SETTING = ErrorDetail(code=2005, message="Invalid measurement setting")
    INVALID_MANIFEST = ErrorDetail(code=2006, message="Invalid run manifest")


class NumericalErrorCode:
    """Numerical failure error codes."""

    NON_HERMITIAN = ErrorDetail(code=3001, message="Matrix is not Hermitian")
    NO_CONVERGENCE = ErrorDetail(code=3002, message="Eigensolver did not converge")
    NEGATIVE_EIGENVALUE = ErrorDetail(code=3003, message="Negative eigenvalue")
    TRACE_NOT_ONE = ErrorDetail(code=3004, message="Trace is not one")
    NOT_POSITIVE = ErrorDetail(code=3005, message="Matrix is not positive semidefinite")
    COMPLETENESS_VIOLATION = ErrorDetail(
        code=3006, message="Kraus operators violate completeness"
    )
    PATH_MISMATCH = ErrorDetail(
        code=3007, message="Operator-sum and closed-form evolution disagree"
    )
    INVARIANT_VIOLATION = ErrorDetail(code=3008, message="Trajectory invariant violated")


class ArgumentException(BaseException):
    """Raised when user-supplied input is invalid."""


class NumericalException(BaseException):
    """Raised when a numerical routine fails or a numerical invariant breaks."""
