"""Class-agnostic confusion matrix (captures misclassification)."""

import numpy as np

from app.evaluation.matching import iou, ranked
from app.evaluation.types import ConfusionMatrix, GroundTruth, Predictions


def confusion_matrix(
    gts: GroundTruth,
    preds: Predictions,
    num_classes: int,
    conf_thr: float,
    iou_thr: float,
) -> ConfusionMatrix:
    """Match each prediction to the best unmatched GT of any class.

    matched pair -> (gt_class, pred_class); unmatched prediction ->
    (background, pred_class); unmatched GT -> (gt_class, background).
    """
    bg = num_classes
    counts = np.zeros((num_classes + 1, num_classes + 1), dtype=np.int64)
    for stem in sorted(set(gts) | set(preds)):
        gt_boxes = gts.get(stem, [])
        taken = [False] * len(gt_boxes)
        for _, pred in ranked(preds.get(stem, []), conf_thr):
            best_iou, best_gt = -1.0, None
            for g, gt in enumerate(gt_boxes):
                if taken[g]:
                    continue
                overlap = iou(pred.box, gt)
                if overlap > best_iou:
                    best_iou, best_gt = overlap, g
            if best_gt is not None and best_iou >= iou_thr:
                taken[best_gt] = True
                counts[gt_boxes[best_gt].class_id, pred.class_id] += 1
            else:
                counts[bg, pred.class_id] += 1
        for g, gt in enumerate(gt_boxes):
            if not taken[g]:
                counts[gt.class_id, bg] += 1
    return ConfusionMatrix(counts=counts)
