"""Resolve command dataset inputs to a split directory and class table."""

from dataclasses import dataclass
from pathlib import Path

from app.core.exceptions import NotFoundError
from app.dataset.labels import read_labels
from app.dataset.manifest import load_class_table, load_manifest, scan_split
from app.dataset.types import ClassTable, NormBox, SampleRef
from app.schemas.run import DatasetInput

CLASSES_FILE = "classes.txt"


@dataclass(frozen=True)
class DatasetLocation:
    """A directory with images/ and labels/ plus its class table."""

    split_dir: Path
    classes: ClassTable
    label: str

    def samples(self) -> list[SampleRef]:
        return scan_split(self.split_dir)

    def ground_truth(self) -> dict[str, list[NormBox]]:
        return {s.stem: read_labels(s.label_path, self.classes) for s in self.samples()}


def flat_location(root: Path) -> DatasetLocation:
    """A flat dataset: images/, labels/ and classes.txt under ``root``."""
    root = Path(root)
    if not (root / "images").is_dir():
        raise NotFoundError(f"images directory not found: {root / 'images'}")
    return DatasetLocation(root, load_class_table(root / CLASSES_FILE), root.name)


def resolve_location(dataset: DatasetInput) -> DatasetLocation:
    if dataset.manifest is not None:
        manifest = load_manifest(dataset.manifest)
        return DatasetLocation(manifest.split_dir(dataset.split), manifest.classes, dataset.split)
    return flat_location(dataset.source)
