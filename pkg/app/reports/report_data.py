"""Data structures for PDF reports."""

from dataclasses import dataclass, field

from app.reports.comparison import ComparisonTable
from app.schemas.report import MetricsReportSchema


@dataclass
class RunSummary:
    """One evaluated run shown in the report header."""

    label: str
    name: str
    split: str
    conf_threshold: float
    classes: int


@dataclass
class ComparisonContext:
    """Full context for the comparison PDF."""

    title: str
    table: ComparisonTable
    runs: list[RunSummary]
    reports: dict[str, MetricsReportSchema] = field(default_factory=dict)

    @classmethod
    def from_reports(
        cls,
        table: ComparisonTable,
        reports: list[MetricsReportSchema],
        title: str = "Comparación de evaluaciones",
    ) -> "ComparisonContext":
        runs = [
            RunSummary(
                label=label,
                name=r.name,
                split=r.split or "-",
                conf_threshold=r.config.conf_threshold,
                classes=len(r.classes),
            )
            for label, r in zip(table.columns, reports)
        ]
        return cls(title=title, table=table, runs=runs, reports=dict(zip(table.columns, reports)))
