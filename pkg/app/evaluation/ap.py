"""Precision-recall curves and 101-point interpolated average precision."""

import numpy as np

from app.evaluation.types import AP_GRID_POINTS, MatchedPrediction, PRPoint

RECALL_GRID = np.arange(AP_GRID_POINTS, dtype=np.float64) / (AP_GRID_POINTS - 1)


def pr_curve(matches: list[MatchedPrediction], num_gt: int) -> list[PRPoint]:
    """Cumulative precision/recall down the confidence ranking.

    ``matches`` must be in dataset order (sorted stems, then per-image processing
    order); the stable sort keeps that order for equal confidences.
    """
    if num_gt == 0:
        return []
    ordered = sorted(matches, key=lambda m: -m.confidence)
    curve: list[PRPoint] = []
    tp = 0
    for k, m in enumerate(ordered, start=1):
        tp += int(m.is_tp)
        curve.append(PRPoint(confidence=m.confidence, precision=tp / k, recall=tp / num_gt))
    return curve


def average_precision(curve: list[PRPoint]) -> float:
    """Mean over recall r in {0, 0.01, ..., 1} of the max precision at recall >= r."""
    if not curve:
        return 0.0
    recall = np.array([p.recall for p in curve])
    precision = np.array([p.precision for p in curve])
    # Recall is non-decreasing along the ranking, so "recall >= r" is a suffix.
    envelope = np.maximum.accumulate(precision[::-1])[::-1]
    first = np.searchsorted(recall, RECALL_GRID, side="left")
    values = np.where(first < len(curve), envelope[np.minimum(first, len(curve) - 1)], 0.0)
    return float(values.sum() / AP_GRID_POINTS)
