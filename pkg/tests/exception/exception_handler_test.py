from discordlib.exception import (
    ArgumentErrorCode,
    ArgumentException,
    NumericalErrorCode,
    NumericalException,
)
from discordlib.exception.exception_handler import (
    EXIT_FAILURE,
    EXIT_INVALID_ARGUMENT,
    EXIT_NUMERICAL_FAILURE,
    exit_code_for,
    handle_cli_exception,
)


class TestExceptions:
    """Test the library exception types"""

    def test_default_message(self):
        """Test the code message is used when none is given"""
        exc = ArgumentException(ArgumentErrorCode.INVALID_GRID)

        assert exc.message == "Invalid time grid"
        assert str(exc) == "[2004] Invalid time grid"

    def test_details(self):
        """Test details travel with the exception"""
        exc = NumericalException(NumericalErrorCode.COMPLETENESS_VIOLATION, "broken", details=0.5)

        assert exc.details == 0.5
        assert exc.code.code == 3006


class TestExitCodes:
    """Test the command line exit status mapping"""

    def test_argument_error(self):
        """Test invalid input maps to 2"""
        exc = ArgumentException(ArgumentErrorCode.PARAMETER_OUT_OF_RANGE, "p must lie in [0, 0.5]")

        code, message = handle_cli_exception(exc, {"p": 0.7})

        assert code == EXIT_INVALID_ARGUMENT == 2
        assert message == "p must lie in [0, 0.5]"

    def test_numerical_error(self):
        """Test numerical failure maps to 3"""
        exc = NumericalException(NumericalErrorCode.NO_CONVERGENCE)

        assert exit_code_for(exc) == EXIT_NUMERICAL_FAILURE == 3

    def test_unexpected_error(self):
        """Test any other exception maps to 1"""
        code, message = handle_cli_exception(RuntimeError("boom"), {})

        assert code == EXIT_FAILURE == 1
        assert "boom" in message
