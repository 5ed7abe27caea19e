"""
Tests for the Error Handler Module
"""

import json

import pytest

from src.utils.error_handler import (
    EXIT_CHECK_FAILED,
    EXIT_INVALID_SPEC,
    exit_code_for,
    format_error_for_response,
    handle_error,
)
from src.utils.exceptions import (
    DualityFailure,
    InvalidSpec,
    NonSaturated,
    TruncationTooLarge,
)


class TestErrorHandler:
    """Tests for the error handler functions."""

    def test_handle_error_hypertoric_error(self):
        """Test handle_error with an error that carries context."""
        # Create an error with context
        error = TruncationTooLarge("degree 5 has 900 paths", {'degree': 5})

        # Handle the error
        result = handle_error(error, command="oracle")

        # Check the result
        assert result['command'] == "oracle"
        assert result['error'] == "degree 5 has 900 paths"
        assert result['error_type'] == "TruncationTooLarge"
        assert result['suggestion'] == "Lower --truncation or raise HTK_MAX_CELLS"
        assert result['context'] == {'degree': 5}

    def test_handle_error_json_decode_error(self):
        """Test handle_error with a JSONDecodeError."""
        error = json.JSONDecodeError("Expecting value", "", 0)

        result = handle_error(error, command="chambers")

        assert "Expecting value" in result['error']
        assert result['error_type'] == "JSONDecodeError"
        assert result['suggestion'] == "Check that the spec is valid JSON"
        assert result['context'] == {}

    def test_handle_error_generic_exception(self):
        """Test handle_error with a generic Exception."""
        result = handle_error(Exception("Something went wrong"))

        assert result['command'] == "unknown"
        assert result['error_type'] == "Exception"
        assert result['suggestion'] == "Check the logs for more information"

    @pytest.mark.parametrize("error,code", [
        (InvalidSpec("bad"), EXIT_INVALID_SPEC),
        (NonSaturated("not saturated"), EXIT_INVALID_SPEC),
        (FileNotFoundError("spec.json"), EXIT_INVALID_SPEC),
        (json.JSONDecodeError("Expecting value", "", 0), EXIT_INVALID_SPEC),
        (DualityFailure("pairs"), EXIT_CHECK_FAILED),
        (RuntimeError("boom"), EXIT_CHECK_FAILED),
    ])
    def test_exit_code_for(self, error, code):
        """Test the exit code of each error family."""
        assert exit_code_for(error) == code

    def test_format_error_for_response(self):
        """Test format_error_for_response."""
        # Format an invalid-spec error
        result = format_error_for_response(InvalidSpec("spec failed validation"), "quiver")

        # Check the result
        assert result['exit_code'] == EXIT_INVALID_SPEC
        assert result['passed'] is False
        assert result['command'] == "quiver"
        assert result['error']['error_type'] == "InvalidSpec"
