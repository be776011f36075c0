"""Eval service - score a predictions directory against a dataset location."""

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from app.core.config import settings
from app.dataset.labels import read_predictions
from app.dataset.types import ClassTable, Prediction
from app.evaluation.confusion import confusion_matrix
from app.evaluation.metrics import class_pr_curve, evaluate
from app.evaluation.types import ConfusionMatrix, EvalConfig, GroundTruth, Predictions
from app.reports.tables import render_confusion_csv, render_metrics_csv, render_pr_curve_csv
from app.schemas.report import MetricsReportSchema
from app.schemas.run import EvalRunConfig
from app.services.datasets import resolve_location
from app.services.output import OutputPlan
from app.utils.files import read_utf8
from app.utils.logging import get_logger

logger = get_logger(__name__)

METRICS_JSON = "metrics.json"
METRICS_CSV = "metrics.csv"
CONFUSION_CSV = "confusion.csv"
PR_CURVES_DIR = "pr_curves"


@dataclass
class EvalOutcome:
    report: MetricsReportSchema
    confusion: ConfusionMatrix


def load_predictions(preds_dir: Path, stems: list[str], classes: ClassTable, workers: int) -> Predictions:
    """Prediction files for every ground-truth stem plus any extra stems found in the directory."""
    extra: list[str] = []
    if preds_dir.is_dir():
        known = set(stems)
        extra = sorted(p.stem for p in preds_dir.glob("*.txt") if p.stem not in known)
        if extra:
            logger.warning("predictions_without_images", extra={"stems": extra[:10], "count": len(extra)})
    all_stems = [*stems, *extra]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        lists: list[list[Prediction]] = list(
            pool.map(lambda s: read_predictions(preds_dir / f"{s}.txt", classes), all_stems)
        )
    return dict(zip(all_stems, lists))


def with_empty_images(gts: GroundTruth, preds: Predictions) -> GroundTruth:
    """Stems with predictions but no ground-truth entry become empty images."""
    return {**{stem: [] for stem in preds}, **gts}


class EvalService:
    """Computes and writes metrics, confusion matrix and PR curves."""

    def __init__(self, workers: int | None = None) -> None:
        self._workers = workers or settings.workers

    def evaluate(
        self,
        gts: GroundTruth,
        preds: Predictions,
        classes: ClassTable,
        config: EvalConfig,
        name: str,
        split: str = "",
        sweep: bool = False,
    ) -> EvalOutcome:
        gts = with_empty_images(gts, preds)
        report = evaluate(gts, preds, classes, config, sweep=sweep)
        matrix = confusion_matrix(gts, preds, len(classes), config.conf_threshold, config.map50_iou)
        return EvalOutcome(MetricsReportSchema.from_report(report, name, split), matrix)

    def run(self, cfg: EvalRunConfig) -> EvalOutcome:
        location = resolve_location(cfg.dataset)
        plan = OutputPlan(cfg.out, cfg.force, inputs=[location.split_dir, cfg.preds])
        gts = location.ground_truth()
        preds = load_predictions(cfg.preds, list(gts), location.classes, self._workers)
        config = EvalConfig(conf_threshold=cfg.conf)
        outcome = self.evaluate(gts, preds, location.classes, config, cfg.name, location.label, cfg.sweep)

        plan.add_text(METRICS_JSON, json.dumps(outcome.report.model_dump(mode="json"), indent=2) + "\n")
        plan.add_text(METRICS_CSV, render_metrics_csv(outcome.report))
        plan.add_text(CONFUSION_CSV, render_confusion_csv(outcome.confusion, location.classes))
        for class_id, class_name in enumerate(location.classes.names):
            curve = class_pr_curve(with_empty_images(gts, preds), preds, class_id, config.map50_iou)
            plan.add_text(f"{PR_CURVES_DIR}/{class_name}.csv", render_pr_curve_csv(curve))
        plan.commit()
        return outcome


def read_report(path: Path) -> MetricsReportSchema:
    """Load a metrics.json written by EvalService."""
    return MetricsReportSchema.model_validate_json(read_utf8(Path(path)))
