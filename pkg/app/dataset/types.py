"""Dataset value types - no I/O."""

import math
from dataclasses import dataclass, field
from pathlib import Path

from app.core.exceptions import ValidationError

EDGE_TOL = 1e-6
RATIO_TOL = 1e-9


@dataclass(frozen=True)
class ClassTable:
    """Ordered class names; the class id is the list index."""

    names: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.names:
            raise ValidationError("class table is empty")
        seen: set[str] = set()
        for name in self.names:
            if not name or any(ch.isspace() for ch in name):
                raise ValidationError(f"invalid class name {name!r}")
            if name in seen:
                raise ValidationError(f"duplicate class name {name!r}")
            seen.add(name)

    @classmethod
    def of(cls, names: list[str] | tuple[str, ...]) -> "ClassTable":
        return cls(tuple(names))

    def __len__(self) -> int:
        return len(self.names)

    def name(self, class_id: int) -> str:
        return self.names[class_id]


@dataclass(frozen=True)
class NormBox:
    """Class-tagged box in YOLO center form, normalized to the image size."""

    class_id: int
    cx: float
    cy: float
    w: float
    h: float

    def __post_init__(self) -> None:
        if self.class_id < 0:
            raise ValidationError(f"negative class id {self.class_id}")
        for label, value in (("cx", self.cx), ("cy", self.cy)):
            if not (0.0 <= value <= 1.0) or math.isnan(value):
                raise ValidationError(f"{label}={value} outside [0,1]")
        for label, value in (("w", self.w), ("h", self.h)):
            if not (0.0 < value <= 1.0):
                raise ValidationError(f"{label}={value} outside (0,1]")

    @classmethod
    def clamped(cls, class_id: int, cx: float, cy: float, w: float, h: float) -> "NormBox":
        """Build a box, clipping extents that leave the canvas by more than EDGE_TOL."""
        x1, x2 = cx - w / 2, cx + w / 2
        y1, y2 = cy - h / 2, cy + h / 2
        if x1 < -EDGE_TOL or x2 > 1 + EDGE_TOL:
            x1, x2 = max(x1, 0.0), min(x2, 1.0)
            cx, w = (x1 + x2) / 2, x2 - x1
        if y1 < -EDGE_TOL or y2 > 1 + EDGE_TOL:
            y1, y2 = max(y1, 0.0), min(y2, 1.0)
            cy, h = (y1 + y2) / 2, y2 - y1
        return cls(class_id, cx, cy, w, h)

    @classmethod
    def from_corners(cls, class_id: int, x1: float, y1: float, x2: float, y2: float) -> "NormBox":
        return cls(class_id, (x1 + x2) / 2, (y1 + y2) / 2, x2 - x1, y2 - y1)

    def corners(self) -> tuple[float, float, float, float]:
        """(x1, y1, x2, y2) in normalized coordinates."""
        return (
            self.cx - self.w / 2,
            self.cy - self.h / 2,
            self.cx + self.w / 2,
            self.cy + self.h / 2,
        )

    @property
    def area(self) -> float:
        return self.w * self.h


@dataclass(frozen=True)
class Prediction:
    """Detector output: a box plus its confidence."""

    box: NormBox
    confidence: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.confidence <= 1.0):
            raise ValidationError(f"confidence={self.confidence} outside [0,1]")

    @property
    def class_id(self) -> int:
        return self.box.class_id


@dataclass(frozen=True)
class DatasetManifest:
    """Class table plus train/val/test directories (each with images/ and labels/)."""

    root_path: Path
    train: str
    val: str
    test: str
    classes: ClassTable

    def split_dir(self, split: str) -> Path:
        if split not in ("train", "val", "test"):
            raise ValidationError(f"unknown split {split!r}")
        return self.root_path / getattr(self, split)


@dataclass(frozen=True)
class SplitAssignment:
    """Disjoint train/val/test stem lists produced by a seeded shuffle."""

    train: tuple[str, ...]
    val: tuple[str, ...]
    test: tuple[str, ...]
    seed: int
    ratios: tuple[float, float, float]

    def split_of(self) -> dict[str, str]:
        """stem -> split name."""
        out: dict[str, str] = {}
        for name in ("train", "val", "test"):
            for stem in getattr(self, name):
                out[stem] = name
        return out


@dataclass(frozen=True)
class SampleRef:
    """One image of a split with its optional label file."""

    stem: str
    image_path: Path
    label_path: Path | None


@dataclass
class SplitStats:
    """Image and per-class box counts for one split."""

    images: int = 0
    unlabeled_images: int = 0
    boxes_by_class: dict[str, int] = field(default_factory=dict)

    @property
    def boxes(self) -> int:
        return sum(self.boxes_by_class.values())


@dataclass
class DatasetStats:
    """Counts for every split of a manifest."""

    splits: dict[str, SplitStats]

    @property
    def total_images(self) -> int:
        return sum(s.images for s in self.splits.values())
