"""Report rendering: aligned text, CSV and the comparison PDF."""

from app.reports.comparison import (
    METRIC_ROWS,
    ComparisonTable,
    comparison_from_reports,
    render_comparison_csv,
    render_comparison_text,
)
from app.reports.pdf_generator import generate_comparison_pdf
from app.reports.report_data import ComparisonContext

__all__ = [
    "METRIC_ROWS",
    "ComparisonTable",
    "ComparisonContext",
    "comparison_from_reports",
    "render_comparison_csv",
    "render_comparison_text",
    "generate_comparison_pdf",
]
