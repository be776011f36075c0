"""Evaluation types - pure data, no I/O."""

from dataclasses import dataclass, field

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from app.core.config import settings
from app.dataset.types import NormBox, Prediction

AP_GRID_POINTS = 101
COCO_IOU_THRESHOLDS: tuple[float, ...] = tuple(round(0.5 + 0.05 * i, 2) for i in range(10))

GroundTruth = dict[str, list[NormBox]]
Predictions = dict[str, list[Prediction]]


class EvalConfig(BaseModel):
    """Operating point and IoU thresholds. The AP recall grid is fixed at 101 points."""

    model_config = ConfigDict(frozen=True)

    conf_threshold: float = Field(default_factory=lambda: settings.conf_threshold, ge=0.0, le=1.0)
    map50_iou: float = Field(default=0.5, gt=0.0, lt=1.0)
    iou_thresholds: tuple[float, ...] = COCO_IOU_THRESHOLDS

    @field_validator("iou_thresholds")
    @classmethod
    def strictly_increasing(cls, v: tuple[float, ...]) -> tuple[float, ...]:
        if not v:
            raise ValueError("at least one IoU threshold is required")
        if any(not 0.0 < t < 1.0 for t in v):
            raise ValueError("IoU thresholds must be in (0, 1)")
        if any(b <= a for a, b in zip(v, v[1:])):
            raise ValueError("IoU thresholds must be strictly increasing")
        return v


@dataclass(frozen=True)
class MatchedPrediction:
    """One prediction after greedy matching at a single IoU threshold."""

    index: int
    confidence: float
    is_tp: bool
    gt_index: int | None


@dataclass
class MatchResult:
    """Matching of one image/class at one threshold; predictions in processing order."""

    predictions: list[MatchedPrediction] = field(default_factory=list)
    num_gt: int = 0
    unmatched_gt: int = 0

    @property
    def tp(self) -> int:
        return sum(1 for p in self.predictions if p.is_tp)

    @property
    def fp(self) -> int:
        return sum(1 for p in self.predictions if not p.is_tp)


@dataclass(frozen=True)
class PRPoint:
    """Precision/recall after the k-th ranked prediction."""

    confidence: float
    precision: float
    recall: float


@dataclass(frozen=True)
class PRF:
    """Precision, recall and F1 with the counts they come from."""

    precision: float
    recall: float
    f1: float
    tp: int = 0
    fp: int = 0
    fn: int = 0


@dataclass
class ClassAP:
    """AP per class id (None when the class has no ground truth) and the macro mean."""

    per_class: dict[int, float | None]
    mean: float


@dataclass(frozen=True)
class ClassMetrics:
    """Five-metric row for one class (or the macro row)."""

    name: str
    num_gt: int
    num_pred: int
    precision: float
    recall: float
    f1: float
    map50: float
    map50_95: float
    evaluable: bool = True


@dataclass
class OperatingPoint:
    """Max-F1 confidence threshold found by a sweep."""

    conf_threshold: float
    precision: float
    recall: float
    f1: float


@dataclass
class MetricsReport:
    """Per-class rows plus the macro row over classes with ground truth."""

    classes: list[ClassMetrics]
    macro: ClassMetrics
    config: EvalConfig
    best_f1: OperatingPoint | None = None


@dataclass
class ConfusionMatrix:
    """(C+1)x(C+1) counts; rows = ground truth, columns = prediction, last index = background."""

    counts: np.ndarray

    @property
    def num_classes(self) -> int:
        return int(self.counts.shape[0]) - 1

    @property
    def total(self) -> int:
        return int(self.counts.sum())
