"""Tests for metric, confusion and drift renderings."""

import numpy as np

from app.dataset.types import ClassTable
from app.evaluation.types import ConfusionMatrix, PRPoint
from app.reports.tables import (
    aligned,
    render_confusion_csv,
    render_metrics_text,
    render_pr_curve_csv,
)
from app.schemas.report import ClassMetricsSchema, MetricsReportSchema, OperatingPointSchema


def _row(name: str, value: float) -> ClassMetricsSchema:
    return ClassMetricsSchema(name=name, num_gt=2, num_pred=3, precision=value, recall=value, f1=value,
                              map50=value, map50_95=value)


def test_aligned_columns() -> None:
    """First column padded on the right, the others on the left."""
    assert aligned([["a", "1"], ["long", "10"]]) == "a      1\nlong  10\n"


def test_metrics_text_includes_best_f1() -> None:
    """The text report has a title, a row per class plus 'all', and the best-F1 line."""
    report = MetricsReportSchema(
        name="Validation",
        split="val",
        classes=[_row("stop", 0.5)],
        macro=_row("all", 0.5),
        best_f1=OperatingPointSchema(conf_threshold=0.3, precision=0.8, recall=0.6, f1=0.6857),
    )
    lines = render_metrics_text(report).splitlines()
    assert lines[0] == "Validation (val, conf >= 0.2)"
    assert lines[2].split() == ["stop", "2", "3", "0.5000", "0.5000", "0.5000", "0.5000", "0.5000"]
    assert lines[3].split()[0] == "all"
    assert lines[4] == "best F1 0.6857 at conf 0.3000 (P 0.8000, R 0.6000)"


def test_confusion_csv_background_last() -> None:
    """Ground truth rows, prediction columns, background as the last index."""
    matrix = ConfusionMatrix(np.array([[2, 0, 1], [0, 0, 0], [3, 0, 0]]))
    lines = render_confusion_csv(matrix, ClassTable.of(["car", "sign"])).splitlines()
    assert lines == ["gt\\pred,car,sign,background", "car,2,0,1", "sign,0,0,0", "background,3,0,0"]


def test_pr_curve_csv() -> None:
    """One row per ranked prediction."""
    text = render_pr_curve_csv([PRPoint(confidence=0.9, precision=1.0, recall=0.5)])
    assert text == "confidence,precision,recall\n0.9,1.0,0.5\n"
