"""Dataset model: YOLO labels, predictions, manifest, splitting and stats."""

from app.dataset.labels import (
    parse_label_file,
    parse_prediction_file,
    write_label_file,
    write_prediction_file,
)
from app.dataset.manifest import format_manifest, load_manifest, scan_split, write_manifest
from app.dataset.split import split_dataset
from app.dataset.stats import dataset_stats
from app.dataset.types import (
    ClassTable,
    DatasetManifest,
    NormBox,
    Prediction,
    SplitAssignment,
)

__all__ = [
    "ClassTable",
    "DatasetManifest",
    "NormBox",
    "Prediction",
    "SplitAssignment",
    "parse_label_file",
    "parse_prediction_file",
    "write_label_file",
    "write_prediction_file",
    "load_manifest",
    "scan_split",
    "format_manifest",
    "write_manifest",
    "split_dataset",
    "dataset_stats",
]
