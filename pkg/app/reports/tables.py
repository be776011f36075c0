"""Text and CSV renderings of metrics, confusion matrices, PR curves and drift reports."""

import csv
import io

from app.dataset.types import ClassTable, DatasetStats
from app.evaluation.types import ConfusionMatrix, PRPoint
from app.gauge.report import DriftReport, report_rows
from app.schemas.report import MetricsReportSchema

METRIC_COLUMNS = ("class", "num_gt", "num_pred", "precision", "recall", "f1", "map50", "map50_95")


def to_csv(rows: list[list[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def aligned(rows: list[list[str]]) -> str:
    """First column left-aligned, the rest right-aligned."""
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    lines = []
    for row in rows:
        cells = [row[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(row[1:], widths[1:])]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def _metric_cells(row) -> list[str]:
    return [
        row.name,
        str(row.num_gt),
        str(row.num_pred),
        f"{row.precision:.4f}",
        f"{row.recall:.4f}",
        f"{row.f1:.4f}",
        f"{row.map50:.4f}",
        f"{row.map50_95:.4f}",
    ]


def metrics_rows(report: MetricsReportSchema) -> list[list[str]]:
    rows = [list(METRIC_COLUMNS)]
    rows += [_metric_cells(r) for r in report.classes]
    rows.append(_metric_cells(report.macro))
    return rows


def render_metrics_text(report: MetricsReportSchema) -> str:
    text = f"{report.name} ({report.split or 'dataset'}, conf >= {report.config.conf_threshold})\n"
    text += aligned(metrics_rows(report))
    if report.best_f1 is not None:
        b = report.best_f1
        text += f"best F1 {b.f1:.4f} at conf {b.conf_threshold:.4f} (P {b.precision:.4f}, R {b.recall:.4f})\n"
    return text


def render_metrics_csv(report: MetricsReportSchema) -> str:
    rows: list[list[object]] = [list(METRIC_COLUMNS)]
    for r in [*report.classes, report.macro]:
        rows.append([r.name, r.num_gt, r.num_pred, r.precision, r.recall, r.f1, r.map50, r.map50_95])
    return to_csv(rows)


def render_confusion_csv(matrix: ConfusionMatrix, classes: ClassTable) -> str:
    """Rows are ground truth, columns predictions; 'background' is the last index."""
    names = [*classes.names, "background"]
    rows: list[list[object]] = [["gt\\pred", *names]]
    for name, counts in zip(names, matrix.counts.tolist()):
        rows.append([name, *counts])
    return to_csv(rows)


def render_pr_curve_csv(curve: list[PRPoint]) -> str:
    rows: list[list[object]] = [["confidence", "precision", "recall"]]
    rows += [[p.confidence, p.precision, p.recall] for p in curve]
    return to_csv(rows)


def render_drift_csv(report: DriftReport) -> str:
    rows: list[list[object]] = [["channel", "score", "value", "flag"]]
    rows += [[ch, s, v, str(flag).lower()] for ch, s, v, flag in report_rows(report)]
    return to_csv(rows)


def render_drift_text(report: DriftReport) -> str:
    rows = [["channel", "score", "value", "flag"]]
    rows += [[ch, s, f"{v:.6f}", "DRIFT" if flag else "-"] for ch, s, v, flag in report_rows(report)]
    verdict = "drift detected" if report.drifted else "no drift"
    return aligned(rows) + f"{verdict} ({report.images_a} vs {report.images_b} images)\n"


def render_stats_text(stats: DatasetStats, classes: ClassTable) -> str:
    splits = list(stats.splits)
    rows = [["", *splits, "total"]]
    for name in classes.names:
        counts = [stats.splits[s].boxes_by_class.get(name, 0) for s in splits]
        rows.append([name, *map(str, counts), str(sum(counts))])
    images = [stats.splits[s].images for s in splits]
    unlabeled = [stats.splits[s].unlabeled_images for s in splits]
    rows.append(["images", *map(str, images), str(sum(images))])
    rows.append(["unlabeled", *map(str, unlabeled), str(sum(unlabeled))])
    return aligned(rows)
