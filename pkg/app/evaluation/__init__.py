"""Detection metrics engine - independent of CLI and MCP."""

from app.evaluation.ap import average_precision, pr_curve
from app.evaluation.confusion import confusion_matrix
from app.evaluation.matching import iou, match_greedy
from app.evaluation.metrics import (
    best_f1_point,
    evaluate,
    map_at,
    map_range,
    prf_at_conf,
)
from app.evaluation.types import EvalConfig, MetricsReport

__all__ = [
    "iou",
    "match_greedy",
    "pr_curve",
    "average_precision",
    "map_at",
    "map_range",
    "prf_at_conf",
    "best_f1_point",
    "confusion_matrix",
    "evaluate",
    "EvalConfig",
    "MetricsReport",
]
