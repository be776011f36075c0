"""Tests for logging configuration."""

import json
import logging

from app.utils.logging import JsonFormatter, configure_logging, get_logger


def _record(msg: str, **extra: object) -> logging.LogRecord:
    record = logging.LogRecord(
        name="test",
        level=logging.INFO,
        pathname="",
        lineno=0,
        msg=msg,
        args=(),
        exc_info=None,
    )
    for key, value in extra.items():
        setattr(record, key, value)
    return record


def test_get_logger() -> None:
    """get_logger returns a logger with correct name."""
    logger = get_logger("app.test")
    assert logger.name == "app.test"


def test_configure_logging_sets_level() -> None:
    """configure_logging sets root logger level."""
    configure_logging(log_level="WARNING")
    root = logging.getLogger()
    assert root.level == logging.WARNING
    # Restore for other tests
    configure_logging(log_level="INFO")


def test_json_formatter_produces_json() -> None:
    """JsonFormatter outputs valid JSON."""
    output = JsonFormatter().format(_record("hello"))
    parsed = json.loads(output)
    assert parsed["level"] == "INFO"
    assert parsed["message"] == "hello"
    assert "timestamp" in parsed
    assert "extra" not in parsed


def test_json_formatter_includes_extra() -> None:
    """Fields passed via extra= land under 'extra' as strings."""
    output = JsonFormatter().format(_record("split_written", train=1613, seed=0))
    parsed = json.loads(output)
    assert parsed["extra"] == {"train": "1613", "seed": "0"}
