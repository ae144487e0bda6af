# SPDX-License-Identifier: MIT
"""Exception handlers for the command line boundary."""

import textwrap
import traceback
from typing import Any

from discordlib.exception.base import (
    ArgumentException,
    BaseException,
    NumericalException,
)
from discordlib.logging import logger

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INVALID_ARGUMENT = 2
EXIT_NUMERICAL_FAILURE = 3


def log_exception(exc: Exception, context: dict[str, Any]) -> None:
    """
    Log exception with full context information.
    """
    logger.error(
        textwrap.dedent(
            f"""\
    Unhandled exception,
    exception_type: {type(exc).__name__},
    exception_message: {str(exc)},
    traceback: {traceback.format_exc()},
    context: {context},
    """
        )
    )


def exit_code_for(exc: Exception) -> int:
    """Map an exception to the command line exit status."""
    if isinstance(exc, ArgumentException):
        return EXIT_INVALID_ARGUMENT
    if isinstance(exc, NumericalException):
        return EXIT_NUMERICAL_FAILURE
    return EXIT_FAILURE


def handle_cli_exception(exc: Exception, context: dict[str, Any]) -> tuple[int, str]:
    """
    Handle an exception raised by a command.

    Args:
        exc: The raised exception.
        context: The parsed command arguments, logged alongside the error.

    Returns:
        The exit status and a one-line message for the user.
    """
    if isinstance(exc, BaseException):
        logger.error(
            f"{type(exc).__name__} code={exc.code.code} message={exc.message} "
            f"details={exc.details} context={context}"
        )
        return exit_code_for(exc), exc.message

    log_exception(exc, context)
    return EXIT_FAILURE, f"internal error: {exc}"
