"""Compare service - two metrics reports side by side."""

from dataclasses import dataclass

from app.reports.comparison import (
    ComparisonTable,
    comparison_from_reports,
    render_comparison_csv,
    render_comparison_text,
)
from app.reports.pdf_generator import generate_comparison_pdf
from app.reports.report_data import ComparisonContext
from app.schemas.report import MetricsReportSchema
from app.schemas.run import CompareRunConfig
from app.services.eval_service import read_report
from app.services.output import OutputPlan
from app.utils.logging import get_logger

logger = get_logger(__name__)

COMPARISON_CSV = "comparison.csv"
COMPARISON_TXT = "comparison.txt"
COMPARISON_PDF = "comparison.pdf"


@dataclass
class CompareOutcome:
    table: ComparisonTable
    text: str


class CompareService:
    """Builds the comparison table; optionally writes CSV, text and PDF."""

    def compare(
        self,
        reports: list[MetricsReportSchema],
        labels: list[str] | None = None,
    ) -> CompareOutcome:
        table = comparison_from_reports(reports, labels)
        return CompareOutcome(table=table, text=render_comparison_text(table))

    def run(self, cfg: CompareRunConfig) -> CompareOutcome:
        plan = OutputPlan(cfg.out, cfg.force, inputs=cfg.reports) if cfg.out is not None else None
        reports = [read_report(p) for p in cfg.reports]
        outcome = self.compare(reports, list(cfg.labels) if cfg.labels else None)
        if plan is not None:
            plan.add_text(COMPARISON_CSV, render_comparison_csv(outcome.table))
            plan.add_text(COMPARISON_TXT, outcome.text)
            if cfg.pdf:
                ctx = ComparisonContext.from_reports(outcome.table, reports)
                plan.add_bytes(COMPARISON_PDF, generate_comparison_pdf(ctx))
            plan.commit()
        logger.info("comparison_built", extra={"runs": list(outcome.table.columns)})
        return outcome
