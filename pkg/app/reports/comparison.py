"""Side-by-side comparison of evaluation runs (Precision ... mAP50-95)."""

from dataclasses import dataclass

from app.core.exceptions import ValidationError
from app.reports.tables import aligned, to_csv
from app.schemas.report import MetricsReportSchema

METRIC_ROWS = ("Precision", "Recall", "F1-Score", "mAP50", "mAP50-95")
DECIMALS = 4


@dataclass(frozen=True)
class ComparisonTable:
    """Five metric rows by named run columns; cells in [0, 1]."""

    columns: tuple[str, ...]
    values: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        if len(self.values) != len(METRIC_ROWS):
            raise ValidationError(f"expected {len(METRIC_ROWS)} metric rows, got {len(self.values)}")
        if not self.columns:
            raise ValidationError("comparison needs at least one run")
        for row in self.values:
            if len(row) != len(self.columns):
                raise ValidationError("every row needs one value per run")
            if any(not 0.0 <= v <= 1.0 for v in row):
                raise ValidationError(f"metric values must be in [0, 1]: {row}")

    def deltas(self) -> tuple[float, ...]:
        """Last run minus first run, per metric."""
        out = []
        for row in self.values:
            d = row[-1] - row[0]
            out.append(0.0 if round(d, DECIMALS) == 0 else d)
        return tuple(out)


def comparison_from_reports(
    reports: list[MetricsReportSchema],
    labels: list[str] | None = None,
) -> ComparisonTable:
    labels = labels or [r.name for r in reports]
    if len(labels) != len(reports):
        raise ValidationError("one label per report is required")
    headlines = [r.headline() for r in reports]
    values = tuple(tuple(h[i] for h in headlines) for i in range(len(METRIC_ROWS)))
    return ComparisonTable(columns=tuple(labels), values=values)


def _cell(v: float) -> str:
    return f"{v:.{DECIMALS}f}"


def comparison_rows(table: ComparisonTable, with_delta: bool = True) -> list[list[str]]:
    """Header plus one rendered row per metric."""
    header = ["Metric", *table.columns]
    if with_delta:
        header.append("Delta")
    rows = [header]
    deltas = table.deltas()
    for name, values, d in zip(METRIC_ROWS, table.values, deltas):
        row = [name, *(_cell(v) for v in values)]
        if with_delta:
            row.append(_cell(d))
        rows.append(row)
    return rows


def render_comparison_text(table: ComparisonTable) -> str:
    return aligned(comparison_rows(table, with_delta=len(table.columns) > 1))


def render_comparison_csv(table: ComparisonTable) -> str:
    rows = comparison_rows(table, with_delta=len(table.columns) > 1)
    rows[0] = [c.lower() if c in ("Metric", "Delta") else c for c in rows[0]]
    return to_csv(rows)
