"""Domain and application exceptions."""

from pathlib import Path


class DriftBenchError(Exception):
    """Base exception for the application."""

    pass


class NotFoundError(DriftBenchError):
    """File or directory not found."""

    pass


class ValidationError(DriftBenchError):
    """Validation error."""

    pass


class ParseError(ValidationError):
    """Malformed record in a label, prediction, manifest or drift-spec file."""

    def __init__(self, message: str, line: int, path: Path | str | None = None) -> None:
        self.reason = message
        self.line = line
        self.path = str(path) if path is not None else None
        where = f"{self.path}:{line}" if self.path else f"line {line}"
        super().__init__(f"{where}: {message}")


class EvaluationError(DriftBenchError):
    """Metrics cannot be computed for the given data."""

    pass
