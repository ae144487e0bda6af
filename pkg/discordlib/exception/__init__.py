"""Exception handling."""

from .base import (
    ArgumentErrorCode,
    ArgumentException,
    BaseException,
    ErrorDetail,
    NumericalErrorCode,
    NumericalException,
)

__all__ = [
    "ArgumentErrorCode",
    "ArgumentException",
    "BaseException",
    "ErrorDetail",
    "NumericalErrorCode",
    "NumericalException",
]
