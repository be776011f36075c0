"""Dataset-level detection metrics: mAP50, mAP50-95, P/R/F1 and the max-F1 sweep.

Ground truth and predictions are dicts keyed by image stem. Matching for AP is
done per class with no confidence cut (the curve sweeps confidence); P/R/F1
use the configured operating point. Classes without ground truth are left out
of macro means.
"""

from dataclasses import dataclass

from app.core.exceptions import EvaluationError
from app.dataset.types import ClassTable
from app.evaluation.ap import average_precision, pr_curve
from app.evaluation.matching import match_greedy
from app.evaluation.types import (
    PRF,
    ClassAP,
    ClassMetrics,
    EvalConfig,
    GroundTruth,
    MatchedPrediction,
    MetricsReport,
    OperatingPoint,
    Predictions,
    PRPoint,
)
from app.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass
class ClassMatches:
    """All matched predictions of one class across the dataset, at one IoU threshold."""

    matches: list[MatchedPrediction]
    num_gt: int


def _stems(gts: GroundTruth, preds: Predictions) -> list[str]:
    return sorted(set(gts) | set(preds))


def class_ids(gts: GroundTruth, preds: Predictions) -> list[int]:
    ids = {b.class_id for boxes in gts.values() for b in boxes}
    ids |= {p.class_id for plist in preds.values() for p in plist}
    return sorted(ids)


def match_class(
    gts: GroundTruth,
    preds: Predictions,
    class_id: int,
    iou_thr: float,
    conf_thr: float = 0.0,
) -> ClassMatches:
    """Greedy-match one class image by image, in sorted stem order."""
    matches: list[MatchedPrediction] = []
    num_gt = 0
    for stem in _stems(gts, preds):
        gt_c = [b for b in gts.get(stem, []) if b.class_id == class_id]
        pred_c = [p for p in preds.get(stem, []) if p.class_id == class_id]
        result = match_greedy(gt_c, pred_c, iou_thr, conf_thr)
        matches.extend(result.predictions)
        num_gt += result.num_gt
    return ClassMatches(matches=matches, num_gt=num_gt)


def class_pr_curve(gts: GroundTruth, preds: Predictions, class_id: int, iou_thr: float) -> list[PRPoint]:
    cm = match_class(gts, preds, class_id, iou_thr)
    return pr_curve(cm.matches, cm.num_gt)


def _ap_per_class(
    gts: GroundTruth,
    preds: Predictions,
    iou_thr: float,
    num_classes: int | None,
) -> dict[int, float | None]:
    ids = range(num_classes) if num_classes is not None else class_ids(gts, preds)
    out: dict[int, float | None] = {}
    for c in ids:
        cm = match_class(gts, preds, c, iou_thr)
        out[c] = average_precision(pr_curve(cm.matches, cm.num_gt)) if cm.num_gt else None
    return out


def _macro(values: list[float]) -> float:
    return sum(values) / len(values)


def map_at(
    gts: GroundTruth,
    preds: Predictions,
    iou_thr: float,
    num_classes: int | None = None,
) -> ClassAP:
    """Per-class AP at one IoU threshold and its macro mean."""
    per_class = _ap_per_class(gts, preds, iou_thr, num_classes)
    evaluable = [ap for ap in per_class.values() if ap is not None]
    if not evaluable:
        raise EvaluationError("no evaluable classes")
    return ClassAP(per_class=per_class, mean=_macro(evaluable))


def map_range_per_class(
    gts: GroundTruth,
    preds: Predictions,
    thresholds: tuple[float, ...],
    num_classes: int | None = None,
) -> ClassAP:
    """Per-class AP averaged over thresholds, and its macro mean."""
    runs = [map_at(gts, preds, t, num_classes) for t in thresholds]
    per_class: dict[int, float | None] = {}
    for c, first in runs[0].per_class.items():
        per_class[c] = None if first is None else sum(r.per_class[c] for r in runs) / len(runs)
    evaluable = [ap for ap in per_class.values() if ap is not None]
    return ClassAP(per_class=per_class, mean=_macro(evaluable))


def map_range(
    gts: GroundTruth,
    preds: Predictions,
    thresholds: tuple[float, ...],
    num_classes: int | None = None,
) -> float:
    """Mean of map_at over the thresholds (mAP50-95 for 0.50:0.05:0.95)."""
    return sum(map_at(gts, preds, t, num_classes).mean for t in thresholds) / len(thresholds)


def prf(tp: int, fp: int, fn: int) -> PRF:
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    return PRF(precision, recall, f1_score(precision, recall), tp, fp, fn)


def f1_score(precision: float, recall: float) -> float:
    return 2 * precision * recall / (precision + recall) if precision + recall > 0 else 0.0


@dataclass
class PRFResult:
    per_class: dict[int, PRF]
    macro: PRF


def _macro_prf(per_class: dict[int, PRF]) -> PRF:
    rows = [r for r in per_class.values() if r.tp + r.fn > 0]
    if not rows:
        return PRF(0.0, 0.0, 0.0)
    p = _macro([r.precision for r in rows])
    r = _macro([r.recall for r in rows])
    return PRF(
        p,
        r,
        f1_score(p, r),
        sum(x.tp for x in rows),
        sum(x.fp for x in rows),
        sum(x.fn for x in rows),
    )


def prf_at_conf(
    gts: GroundTruth,
    preds: Predictions,
    conf_thr: float,
    iou_thr: float,
    num_classes: int | None = None,
) -> PRFResult:
    """Precision, recall and F1 per class and macro at a fixed confidence threshold."""
    ids = range(num_classes) if num_classes is not None else class_ids(gts, preds)
    per_class: dict[int, PRF] = {}
    for c in ids:
        cm = match_class(gts, preds, c, iou_thr, conf_thr)
        tp = sum(1 for m in cm.matches if m.is_tp)
        per_class[c] = prf(tp, len(cm.matches) - tp, cm.num_gt - tp)
    return PRFResult(per_class=per_class, macro=_macro_prf(per_class))


def best_f1_point(
    gts: GroundTruth,
    preds: Predictions,
    iou_thr: float,
    num_classes: int | None = None,
) -> OperatingPoint | None:
    """Confidence threshold maximizing macro F1 (ties go to the higher threshold).

    Greedy matching processes predictions by descending confidence, so the
    matches above any threshold t equal the no-threshold matches restricted to
    confidence >= t; one matching pass per class serves every candidate.
    """
    ids = list(range(num_classes)) if num_classes is not None else class_ids(gts, preds)
    per_class = {c: match_class(gts, preds, c, iou_thr) for c in ids}
    candidates = sorted({m.confidence for cm in per_class.values() for m in cm.matches}, reverse=True)
    best: OperatingPoint | None = None
    for t in candidates:
        rows: dict[int, PRF] = {}
        for c, cm in per_class.items():
            above = [m for m in cm.matches if m.confidence >= t]
            tp = sum(1 for m in above if m.is_tp)
            rows[c] = prf(tp, len(above) - tp, cm.num_gt - tp)
        macro = _macro_prf(rows)
        if best is None or macro.f1 > best.f1:
            best = OperatingPoint(t, macro.precision, macro.recall, macro.f1)
    return best


def evaluate(
    gts: GroundTruth,
    preds: Predictions,
    classes: ClassTable,
    config: EvalConfig | None = None,
    sweep: bool = False,
) -> MetricsReport:
    """Five-metric report per class and macro-averaged."""
    config = config or EvalConfig()
    n = len(classes)
    ap50 = map_at(gts, preds, config.map50_iou, n)
    ap_range = map_range_per_class(gts, preds, config.iou_thresholds, n)
    prf_result = prf_at_conf(gts, preds, config.conf_threshold, config.map50_iou, n)

    num_gt = {c: 0 for c in range(n)}
    num_pred = {c: 0 for c in range(n)}
    for boxes in gts.values():
        for b in boxes:
            num_gt[b.class_id] += 1
    for plist in preds.values():
        for p in plist:
            if p.confidence >= config.conf_threshold:
                num_pred[p.class_id] += 1

    rows: list[ClassMetrics] = []
    for c in range(n):
        r = prf_result.per_class[c]
        evaluable = ap50.per_class[c] is not None
        rows.append(
            ClassMetrics(
                name=classes.name(c),
                num_gt=num_gt[c],
                num_pred=num_pred[c],
                precision=r.precision,
                recall=r.recall,
                f1=r.f1,
                map50=ap50.per_class[c] or 0.0,
                map50_95=ap_range.per_class[c] or 0.0,
                evaluable=evaluable,
            )
        )
    m = prf_result.macro
    macro = ClassMetrics(
        name="all",
        num_gt=sum(num_gt.values()),
        num_pred=sum(num_pred.values()),
        precision=m.precision,
        recall=m.recall,
        f1=m.f1,
        map50=ap50.mean,
        map50_95=ap_range.mean,
    )
    best = best_f1_point(gts, preds, config.map50_iou, n) if sweep else None
    logger.info(
        "eval_completed",
        extra={"images": len(_stems(gts, preds)), "map50": round(ap50.mean, 4), "map50_95": round(ap_range.mean, 4)},
    )
    return MetricsReport(classes=rows, macro=macro, config=config, best_f1=best)
