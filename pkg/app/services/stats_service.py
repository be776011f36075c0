"""Stats service - per-split class balance of a manifest."""

from pathlib import Path

from app.core.config import settings
from app.dataset.manifest import load_manifest
from app.dataset.stats import dataset_stats
from app.dataset.types import DatasetStats
from app.reports.tables import render_stats_text


class StatsService:
    """Dataset statistics for a manifest."""

    def __init__(self, workers: int | None = None) -> None:
        self._workers = workers or settings.workers

    def stats(self, manifest_path: Path) -> tuple[DatasetStats, str]:
        manifest = load_manifest(manifest_path)
        stats = dataset_stats(manifest, self._workers)
        return stats, render_stats_text(stats, manifest.classes)
