"""Dataset tools - dataset_statistics."""

import json
from pathlib import Path

from fastmcp import FastMCP

from app.services.stats_service import StatsService
from app.utils.errors import handle_tool_errors
from app.utils.logging import get_logger

logger = get_logger(__name__)


def register_dataset_tools(mcp: FastMCP) -> None:
    """Register dataset inspection tools."""

    @mcp.tool()
    @handle_tool_errors("dataset_statistics")
    def dataset_statistics(manifest_path: str) -> str:
        """Images and boxes per class for every split of a dataset manifest.

        Args:
            manifest_path: Path to the dataset manifest (path/train/val/test/names).

        Returns:
            JSON with per-split images, unlabeled_images and boxes_by_class, or error.
        """
        logger.info("dataset_statistics", extra={"manifest": manifest_path})
        stats, _ = StatsService().stats(Path(manifest_path))
        return json.dumps(
            {
                "total_images": stats.total_images,
                "splits": {
                    name: {
                        "images": s.images,
                        "unlabeled_images": s.unlabeled_images,
                        "boxes": s.boxes,
                        "boxes_by_class": s.boxes_by_class,
                    }
                    for name, s in stats.splits.items()
                },
            }
        )
