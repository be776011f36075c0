"""Tests for the MCP tool functions."""

import json
from pathlib import Path
from typing import Callable
from unittest.mock import MagicMock

from app.mcp.tools.datasets import register_dataset_tools
from app.mcp.tools.drift import register_drift_tools
from app.mcp.tools.evaluation import register_evaluation_tools
from app.mcp.tools.health import register_health_tools


def _tools(*registrars: Callable) -> dict[str, Callable]:
    """Collect the functions each register_* call decorates."""
    found: dict[str, Callable] = {}
    mcp = MagicMock()
    mcp.tool.return_value = lambda fn: found.setdefault(fn.__name__, fn)
    for register in registrars:
        register(mcp)
    return found


def test_health_check() -> None:
    """health_check reports OK with library versions."""
    payload = json.loads(_tools(register_health_tools)["health_check"]())
    assert payload["status"] == "OK"
    assert set(payload["versions"]) == {"numpy", "scipy", "pillow"}


def test_dataset_statistics(micro_dir: Path) -> None:
    """dataset_statistics returns per-split counts as JSON."""
    payload = json.loads(_tools(register_dataset_tools)["dataset_statistics"](str(micro_dir / "data.yaml")))
    assert payload["total_images"] == 2
    assert payload["splits"]["val"]["boxes_by_class"] == {"a": 2, "b": 1}


def test_dataset_statistics_missing_manifest(tmp_path: Path) -> None:
    """Errors come back as a JSON error object."""
    payload = json.loads(_tools(register_dataset_tools)["dataset_statistics"](str(tmp_path / "none.yaml")))
    assert "error" in payload


def test_evaluate_and_compare(micro_dir: Path, tmp_path: Path) -> None:
    """evaluate_predictions writes a report that compare_reports can read."""
    tools = _tools(register_evaluation_tools)
    report = json.loads(tools["evaluate_predictions"](
        predictions_dir=str(micro_dir / "preds"),
        out_dir=str(tmp_path / "eval"),
        manifest_path=str(micro_dir / "data.yaml"),
        split="val",
        name="micro",
    ))
    assert report["name"] == "micro"
    assert report["macro"]["f1"] == 0.75

    metrics = str(tmp_path / "eval" / "metrics.json")
    payload = json.loads(tools["compare_reports"](metrics, metrics, "Validation", "Test"))
    assert payload["columns"] == ["Metric", "Validation", "Test", "Delta"]
    assert payload["rows"][0] == ["Precision", "0.7500", "0.7500", "0.0000"]


def test_evaluate_validation_error(micro_dir: Path, tmp_path: Path) -> None:
    """A manifest without a split fails validation with details."""
    payload = json.loads(_tools(register_evaluation_tools)["evaluate_predictions"](
        predictions_dir=str(micro_dir / "preds"),
        out_dir=str(tmp_path / "eval"),
        manifest_path=str(micro_dir / "data.yaml"),
    ))
    assert payload["error"] == "Validation failed"
    assert payload["details"]


def test_drift_score_identical(sign_dataset: Path) -> None:
    """A dataset against itself is not drifted."""
    payload = json.loads(_tools(register_drift_tools)["drift_score"](str(sign_dataset), str(sign_dataset)))
    assert payload["drifted"] is False
    assert set(payload["aggregate"]) == {"psi", "jsd", "w1"}
