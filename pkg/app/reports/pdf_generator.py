"""PDF comparison report using ReportLab (native charts, no matplotlib)."""

import io
from typing import Any

from reportlab.graphics.charts.barcharts import VerticalBarChart
from reportlab.graphics.charts.legends import Legend
from reportlab.graphics.shapes import Drawing, String
from reportlab.lib import colors
from reportlab.lib.pagesizes import A4
from reportlab.lib.styles import getSampleStyleSheet
from reportlab.lib.units import cm
from reportlab.platypus import (
    Paragraph,
    SimpleDocTemplate,
    Spacer,
    Table,
    TableStyle,
)

from app.reports.comparison import METRIC_ROWS, comparison_rows
from app.reports.report_data import ComparisonContext
from app.schemas.report import MetricsReportSchema

APP_NAME = "DriftBench"
PAGE_WIDTH, PAGE_HEIGHT = A4
MARGIN = 1.5 * cm
SERIES_COLORS = ["#4472C4", "#C62828", "#2E7D32", "#ED7D31"]

_TABLE_STYLE = [
    ("BACKGROUND", (0, 0), (-1, 0), colors.HexColor("#4472C4")),
    ("TEXTCOLOR", (0, 0), (-1, 0), colors.whitesmoke),
    ("ALIGN", (0, 0), (0, -1), "LEFT"),
    ("ALIGN", (1, 0), (-1, -1), "RIGHT"),
    ("FONTNAME", (0, 0), (-1, 0), "Helvetica-Bold"),
    ("FONTSIZE", (0, 0), (-1, -1), 9),
    ("BOTTOMPADDING", (0, 0), (-1, 0), 6),
    ("ROWBACKGROUNDS", (0, 1), (-1, -1), [colors.white, colors.HexColor("#F2F2F2")]),
    ("GRID", (0, 0), (-1, -1), 0.5, colors.grey),
]


def _create_bar_chart_drawing(ctx: ComparisonContext) -> Drawing:
    """Grouped bars: one group per metric, one bar per run."""
    d = Drawing(440, 200)
    bc = VerticalBarChart()
    bc.x = 50
    bc.y = 40
    bc.width = 300
    bc.height = 130
    bc.data = [[row[i] for row in ctx.table.values] for i in range(len(ctx.table.columns))]
    bc.categoryAxis.categoryNames = list(METRIC_ROWS)
    bc.categoryAxis.labels.angle = 20
    bc.categoryAxis.labels.boxAnchor = "ne"
    bc.valueAxis.valueMin = 0
    bc.valueAxis.valueMax = 1
    bc.valueAxis.valueStep = 0.2
    bc.barSpacing = 2
    for i in range(len(ctx.table.columns)):
        bc.bars[i].fillColor = colors.HexColor(SERIES_COLORS[i % len(SERIES_COLORS)])
    d.add(bc)

    legend = Legend()
    legend.x = 365
    legend.y = 160
    legend.colorNamePairs = [
        (colors.HexColor(SERIES_COLORS[i % len(SERIES_COLORS)]), label)
        for i, label in enumerate(ctx.table.columns)
    ]
    d.add(legend)
    d.add(String(200, 185, "Métricas por evaluación", fontSize=10, textAnchor="middle"))
    return d


def _build_header(styles: dict) -> list:
    """Build header with app name and logo (styled table as logo placeholder)."""
    elements = []
    logo_table = Table([[" DB "]], colWidths=[2 * cm], rowHeights=[0.8 * cm])
    logo_table.setStyle(TableStyle([
        ("BACKGROUND", (0, 0), (-1, -1), colors.HexColor("#4472C4")),
        ("TEXTCOLOR", (0, 0), (-1, -1), colors.white),
        ("FONTNAME", (0, 0), (-1, -1), "Helvetica-Bold"),
        ("FONTSIZE", (0, 0), (-1, -1), 14),
        ("ALIGN", (0, 0), (-1, -1), "CENTER"),
        ("VALIGN", (0, 0), (-1, -1), "MIDDLE"),
    ]))
    elements.append(logo_table)
    elements.append(Spacer(1, 0.2 * cm))
    elements.append(Paragraph(f"<b>{APP_NAME}</b>", styles["Title"]))
    elements.append(Spacer(1, 0.3 * cm))
    return elements


def _build_runs(elements: list, ctx: ComparisonContext, styles: dict) -> None:
    """Add one line per compared run."""
    for run in ctx.runs:
        elements.append(Paragraph(
            f"<b>{run.label}:</b> {run.name} (split {run.split}, conf >= {run.conf_threshold:.2f}, "
            f"{run.classes} clases)",
            styles["Normal"],
        ))
    elements.append(Spacer(1, 0.5 * cm))


def _build_comparison_table(elements: list, ctx: ComparisonContext, styles: dict) -> None:
    elements.append(Paragraph("<b>Resumen</b>", styles["Heading2"]))
    rows = comparison_rows(ctx.table, with_delta=len(ctx.table.columns) > 1)
    t = Table(rows, colWidths=[4 * cm] + [3 * cm] * (len(rows[0]) - 1))
    t.setStyle(TableStyle(_TABLE_STYLE))
    elements.append(t)
    elements.append(Spacer(1, 0.5 * cm))


def _build_class_table(elements: list, label: str, report: MetricsReportSchema, styles: dict) -> None:
    """Add the per-class table of one run."""
    elements.append(Paragraph(f"<b>Por clase ({label})</b>", styles["Heading2"]))
    if not report.classes:
        elements.append(Paragraph("Sin detalle por clase.", styles["Normal"]))
        elements.append(Spacer(1, 0.5 * cm))
        return
    rows = [["Clase", "GT", "Pred", "P", "R", "F1", "mAP50", "mAP50-95"]]
    for r in [*report.classes, report.macro]:
        rows.append([
            r.name[:20],
            str(r.num_gt),
            str(r.num_pred),
            f"{r.precision:.4f}",
            f"{r.recall:.4f}",
            f"{r.f1:.4f}",
            f"{r.map50:.4f}",
            f"{r.map50_95:.4f}",
        ])
    t = Table(rows, colWidths=[3.5 * cm, 1.4 * cm, 1.4 * cm] + [2 * cm] * 5)
    t.setStyle(TableStyle([
        *_TABLE_STYLE,
        ("FONTNAME", (0, -1), (-1, -1), "Helvetica-Bold"),
        ("BACKGROUND", (0, -1), (-1, -1), colors.HexColor("#D9E1F2")),
    ]))
    elements.append(t)
    elements.append(Spacer(1, 0.5 * cm))


def _add_footer(canvas: Any, doc: Any) -> None:
    """Add footer with the compared run labels."""
    canvas.saveState()
    canvas.setFont("Helvetica", 8)
    canvas.drawString(MARGIN, 1 * cm, f"{doc.footer_text} - {APP_NAME}")
    canvas.restoreState()


def generate_comparison_pdf(ctx: ComparisonContext) -> bytes:
    """Comparison report PDF; byte-identical for identical input."""
    buf = io.BytesIO()
    doc = SimpleDocTemplate(buf, pagesize=A4, leftMargin=MARGIN, rightMargin=MARGIN,
                            topMargin=MARGIN, bottomMargin=2 * cm, invariant=1,
                            title=ctx.title, creator=APP_NAME)
    doc.footer_text = " vs ".join(ctx.table.columns)
    styles = getSampleStyleSheet()
    elements = []

    elements.extend(_build_header(styles))
    elements.append(Paragraph(f"<b>{ctx.title}</b>", styles["Heading1"]))
    elements.append(Spacer(1, 0.3 * cm))
    _build_runs(elements, ctx, styles)
    _build_comparison_table(elements, ctx, styles)
    elements.append(_create_bar_chart_drawing(ctx))
    elements.append(Spacer(1, 0.8 * cm))
    for label, report in ctx.reports.items():
        _build_class_table(elements, label, report, styles)

    doc.build(elements, onFirstPage=lambda c, d: _add_footer(c, doc),
              onLaterPages=lambda c, d: _add_footer(c, doc))
    return buf.getvalue()
