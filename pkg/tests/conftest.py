"""Shared pytest fixtures: class tables, on-disk datasets and report files."""

import json
from pathlib import Path
from typing import Callable

import pytest

from app.baseline.synthetic import synthetic_dataset
from app.core.categories import ROAD_SIGN_CLASSES
from app.dataset.labels import write_label_file
from app.dataset.types import ClassTable, NormBox
from app.drift.image import RasterImage, write_image

FIXTURES = Path(__file__).parent / "fixtures"

Sample = tuple[str, RasterImage, list[NormBox]]


def write_flat_dataset(root: Path, samples: list[Sample], classes: ClassTable, suffix: str = ".png") -> Path:
    """images/, labels/ and classes.txt under root; empty box lists still get a label file."""
    for stem, image, boxes in samples:
        write_image(image, root / "images" / f"{stem}{suffix}")
        label = root / "labels" / f"{stem}.txt"
        label.parent.mkdir(parents=True, exist_ok=True)
        label.write_text(write_label_file(boxes), encoding="utf-8")
    (root / "classes.txt").write_text("\n".join(classes.names) + "\n", encoding="utf-8")
    return root


def report_json(name: str, headline: tuple[float, float, float, float, float], split: str = "val") -> str:
    p, r, f1, m50, m5095 = headline
    macro = {"name": "all", "precision": p, "recall": r, "f1": f1, "map50": m50, "map50_95": m5095}
    return json.dumps({"name": name, "split": split, "classes": [], "macro": macro})


@pytest.fixture
def micro_dir() -> Path:
    """Two-class micro dataset: val split with two 1x1 images plus a predictions dir."""
    return FIXTURES / "micro"


@pytest.fixture
def two_classes() -> ClassTable:
    return ClassTable.of(["a", "b"])


@pytest.fixture
def sign_classes() -> ClassTable:
    return ClassTable.of(ROAD_SIGN_CLASSES)


@pytest.fixture
def make_flat_dataset() -> Callable[..., Path]:
    return write_flat_dataset


@pytest.fixture
def sign_dataset(tmp_path: Path, sign_classes: ClassTable) -> Path:
    """Twelve synthetic sign images as a flat dataset."""
    return write_flat_dataset(tmp_path / "signs", synthetic_dataset(12, seed=7), sign_classes)


@pytest.fixture
def write_report(tmp_path: Path) -> Callable[..., Path]:
    """Write a metrics.json carrying only the macro headline."""

    def _write(filename: str, name: str, headline: tuple[float, float, float, float, float]) -> Path:
        path = tmp_path / "reports" / filename
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(report_json(name, headline), encoding="utf-8")
        return path

    return _write
