"""IoU and greedy prediction-to-ground-truth matching."""

from app.dataset.types import NormBox, Prediction
from app.evaluation.types import MatchedPrediction, MatchResult


def iou(a: NormBox, b: NormBox) -> float:
    """Intersection over union in normalized space; class ids are ignored."""
    ax1, ay1, ax2, ay2 = a.corners()
    bx1, by1, bx2, by2 = b.corners()
    iw = min(ax2, bx2) - max(ax1, bx1)
    ih = min(ay2, by2) - max(ay1, by1)
    if iw <= 0.0 or ih <= 0.0:
        return 0.0
    inter = iw * ih
    union = (ax2 - ax1) * (ay2 - ay1) + (bx2 - bx1) * (by2 - by1) - inter
    return min(1.0, inter / union)


def ranked(preds: list[Prediction], conf_thr: float) -> list[tuple[int, Prediction]]:
    """Predictions at or above conf_thr, by descending confidence, ties in input order."""
    kept = [(i, p) for i, p in enumerate(preds) if p.confidence >= conf_thr]
    return sorted(kept, key=lambda item: -item[1].confidence)


def match_greedy(
    gts: list[NormBox],
    preds: list[Prediction],
    iou_thr: float,
    conf_thr: float = 0.0,
) -> MatchResult:
    """Match one image's predictions of one class against its ground truth.

    Each prediction, in descending confidence, takes the still-unmatched GT with
    the highest IoU when that IoU >= iou_thr (TP); otherwise it is a FP.
    """
    taken = [False] * len(gts)
    matched: list[MatchedPrediction] = []
    for index, pred in ranked(preds, conf_thr):
        best_iou = -1.0
        best_gt: int | None = None
        for g, gt in enumerate(gts):
            if taken[g]:
                continue
            overlap = iou(pred.box, gt)
            if overlap > best_iou:
                best_iou = overlap
                best_gt = g
        if best_gt is not None and best_iou >= iou_thr:
            taken[best_gt] = True
            matched.append(MatchedPrediction(index, pred.confidence, True, best_gt))
        else:
            matched.append(MatchedPrediction(index, pred.confidence, False, None))
    return MatchResult(
        predictions=matched,
        num_gt=len(gts),
        unmatched_gt=taken.count(False),
    )
