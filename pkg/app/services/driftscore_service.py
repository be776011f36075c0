"""Drift-score service - histogram summaries of two datasets and their drift report."""

from dataclasses import dataclass
from pathlib import Path

from app.core.config import settings
from app.core.exceptions import NotFoundError, ParseError
from app.dataset.manifest import scan_split
from app.gauge.histogram import HistogramSummary, dataset_summary, format_summary, parse_summary
from app.gauge.report import DriftReport, DriftThresholds, drift_report
from app.reports.tables import render_drift_csv, render_drift_text
from app.schemas.run import DriftScoreRunConfig
from app.services.output import OutputPlan
from app.utils.files import read_utf8
from app.utils.logging import get_logger

logger = get_logger(__name__)

REPORT_CSV = "drift_report.csv"
REPORT_TXT = "drift_report.txt"


@dataclass
class DriftScoreOutcome:
    report: DriftReport
    summary_a: HistogramSummary
    summary_b: HistogramSummary
    text: str


class DriftScoreService:
    """Summarizes both inputs (or loads cached summaries) and scores the drift."""

    def __init__(self, workers: int | None = None, thresholds: DriftThresholds | None = None) -> None:
        self._workers = workers or settings.workers
        self._thresholds = thresholds or DriftThresholds()

    def summarize(self, path: Path, bins: int) -> HistogramSummary:
        """A directory with images/ (a flat dataset or split) or a cached summary file."""
        path = Path(path)
        if path.is_file():
            try:
                return parse_summary(read_utf8(path))
            except ParseError as e:
                raise ParseError(e.reason, e.line, path) from None
        if not (path / "images").is_dir():
            raise NotFoundError(f"no images directory or summary file at {path}")
        images = [s.image_path for s in scan_split(path)]
        return dataset_summary(images, bins, self._workers)

    def run(self, cfg: DriftScoreRunConfig) -> DriftScoreOutcome:
        plan = OutputPlan(cfg.out, cfg.force, inputs=[cfg.a, cfg.b]) if cfg.out is not None else None
        a = self.summarize(cfg.a, cfg.bins)
        b = self.summarize(cfg.b, cfg.bins)
        report = drift_report(a, b, self._thresholds)
        text = render_drift_text(report)
        if plan is not None:
            plan.add_text(REPORT_CSV, render_drift_csv(report))
            plan.add_text(REPORT_TXT, text)
            plan.add_text("summary_a.txt", format_summary(a))
            plan.add_text("summary_b.txt", format_summary(b))
            plan.commit()
        logger.info(
            "drift_scored",
            extra={"aggregate": report.aggregate, "flags": report.flags},
        )
        return DriftScoreOutcome(report=report, summary_a=a, summary_b=b, text=text)
