"""Distribution drift between image datasets (pixel histograms and divergences)."""

from app.gauge.histogram import (
    HistogramSummary,
    dataset_summary,
    format_summary,
    merge_summaries,
    parse_summary,
    summarize_image,
)
from app.gauge.report import DriftReport, DriftThresholds, drift_report
from app.gauge.scores import js_divergence, psi, wasserstein1d

__all__ = [
    "HistogramSummary",
    "summarize_image",
    "merge_summaries",
    "dataset_summary",
    "format_summary",
    "parse_summary",
    "psi",
    "js_divergence",
    "wasserstein1d",
    "DriftReport",
    "DriftThresholds",
    "drift_report",
]
