"""Tests for metrics report schemas."""

import pytest
from pydantic import ValidationError

from app.evaluation.types import ClassMetrics, EvalConfig, MetricsReport, OperatingPoint
from app.schemas.report import ClassMetricsSchema, MetricsReportSchema


def _row(name: str, value: float) -> ClassMetrics:
    return ClassMetrics(name, 3, 4, value, value, value, value, value)


def test_from_report_keeps_rows_and_config() -> None:
    """from_report copies per-class rows, macro row, config and sweep point."""
    report = MetricsReport(
        classes=[_row("stop", 0.5), _row("yield", 1.0)],
        macro=_row("all", 0.75),
        config=EvalConfig(conf_threshold=0.25),
        best_f1=OperatingPoint(0.4, 0.8, 0.9, 0.85),
    )
    schema = MetricsReportSchema.from_report(report, name="Validation", split="val")
    assert [c.name for c in schema.classes] == ["stop", "yield"]
    assert schema.config.conf_threshold == 0.25
    assert schema.best_f1.conf_threshold == 0.4
    assert schema.headline() == (0.75, 0.75, 0.75, 0.75, 0.75)


def test_json_round_trip() -> None:
    """metrics.json written by model_dump_json validates back."""
    macro = ClassMetricsSchema(name="all", precision=0.9, recall=0.8, f1=0.85, map50=0.7, map50_95=0.5)
    schema = MetricsReportSchema(name="run", macro=macro)
    again = MetricsReportSchema.model_validate_json(schema.model_dump_json())
    assert again == schema
    assert again.config.iou_thresholds[0] == 0.5


@pytest.mark.parametrize("field", ["precision", "recall", "f1", "map50", "map50_95"])
def test_metric_out_of_range(field: str) -> None:
    """Metric values must lie in [0, 1]."""
    values = {"precision": 0.5, "recall": 0.5, "f1": 0.5, "map50": 0.5, "map50_95": 0.5, field: 1.2}
    with pytest.raises(ValidationError):
        ClassMetricsSchema(name="all", **values)


def test_name_required() -> None:
    """Reports need a non-empty name."""
    macro = ClassMetricsSchema(name="all", precision=0, recall=0, f1=0, map50=0, map50_95=0)
    with pytest.raises(ValidationError):
        MetricsReportSchema(name="", macro=macro)
