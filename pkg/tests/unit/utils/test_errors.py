"""Tests for error utilities."""

import json

from pydantic import BaseModel
from pydantic import ValidationError as PydanticValidationError

from app.core.exceptions import EvaluationError, NotFoundError, ParseError, ValidationError
from app.utils.errors import (
    EXIT_RUNTIME,
    EXIT_USAGE,
    describe_error,
    error_response,
    exit_code_for,
    handle_tool_errors,
)


class _Model(BaseModel):
    bins: int


def _pydantic_error() -> PydanticValidationError:
    try:
        _Model(bins="many")
    except PydanticValidationError as e:
        return e
    raise AssertionError("validation should fail")


def test_error_response_basic() -> None:
    """error_response returns valid JSON with error key."""
    result = error_response("Something went wrong")
    parsed = json.loads(result)
    assert parsed["error"] == "Something went wrong"
    assert "details" not in parsed


def test_error_response_with_details() -> None:
    """error_response includes details when provided."""
    details = [{"loc": ["field"], "msg": "required"}]
    result = error_response("Validation failed", details=details)
    parsed = json.loads(result)
    assert parsed["error"] == "Validation failed"
    assert parsed["details"] == details


def test_exit_code_usage_errors() -> None:
    """Validation, parse, not-found and pydantic errors map to exit code 2."""
    assert exit_code_for(ValidationError("bad")) == EXIT_USAGE
    assert exit_code_for(ParseError("bad", 3)) == EXIT_USAGE
    assert exit_code_for(NotFoundError("gone")) == EXIT_USAGE
    assert exit_code_for(_pydantic_error()) == EXIT_USAGE


def test_exit_code_runtime_errors() -> None:
    """Everything else is a runtime failure."""
    assert exit_code_for(EvaluationError("no evaluable classes")) == EXIT_RUNTIME
    assert exit_code_for(OSError("disk full")) == EXIT_RUNTIME


def test_describe_error_lists_fields() -> None:
    """Pydantic errors are flattened to 'field: message'."""
    text = describe_error(_pydantic_error())
    assert text.startswith("bins: ")


def test_parse_error_message_has_location() -> None:
    """ParseError prefixes path and line."""
    assert str(ParseError("zero-size box", 4, "labels/x.txt")) == "labels/x.txt:4: zero-size box"
    assert str(ParseError("zero-size box", 4)) == "line 4: zero-size box"


def test_handle_tool_errors_passes_result() -> None:
    """Successful tools return their own result."""

    @handle_tool_errors("ok_tool", log_success=True)
    def tool() -> str:
        return "done"

    assert tool() == "done"


def test_handle_tool_errors_domain_error() -> None:
    """Domain errors become a JSON error payload."""

    @handle_tool_errors("failing_tool")
    def tool() -> str:
        raise NotFoundError("manifest not found: x.yaml")

    assert json.loads(tool()) == {"error": "manifest not found: x.yaml"}


def test_handle_tool_errors_validation_details() -> None:
    """Pydantic errors carry per-field details."""

    @handle_tool_errors("validating_tool")
    def tool() -> str:
        _Model(bins="many")
        return "unreachable"

    parsed = json.loads(tool())
    assert parsed["error"] == "Validation failed"
    assert parsed["details"][0]["loc"] == ["bins"]


def test_handle_tool_errors_unexpected() -> None:
    """Unexpected exceptions are reported, not raised."""

    @handle_tool_errors("crashing_tool")
    def tool() -> str:
        raise RuntimeError("boom")

    assert json.loads(tool())["error"] == "Unexpected error: boom"
