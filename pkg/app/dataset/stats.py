"""Per-split, per-class counts (dataset balance check)."""

from concurrent.futures import ThreadPoolExecutor

from app.core.config import settings
from app.dataset.labels import read_labels
from app.dataset.manifest import SPLITS, scan_split
from app.dataset.types import DatasetManifest, DatasetStats, SplitStats


def dataset_stats(manifest: DatasetManifest, workers: int | None = None) -> DatasetStats:
    """Count images and boxes per class for every split."""
    classes = manifest.classes
    result: dict[str, SplitStats] = {}
    with ThreadPoolExecutor(max_workers=workers or settings.workers) as pool:
        for split in SPLITS:
            samples = scan_split(manifest.split_dir(split))
            stats = SplitStats(boxes_by_class={name: 0 for name in classes.names})
            label_lists = pool.map(lambda s: read_labels(s.label_path, classes), samples)
            for sample, boxes in zip(samples, label_lists):
                stats.images += 1
                if sample.label_path is None:
                    stats.unlabeled_images += 1
                for box in boxes:
                    stats.boxes_by_class[classes.name(box.class_id)] += 1
            result[split] = stats
    return DatasetStats(splits=result)
