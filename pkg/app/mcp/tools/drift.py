"""Drift tools - drift_score."""

import json
from pathlib import Path

from fastmcp import FastMCP

from app.core.config import settings
from app.schemas.run import DriftScoreRunConfig
from app.services.driftscore_service import DriftScoreService
from app.utils.errors import handle_tool_errors
from app.utils.logging import get_logger

logger = get_logger(__name__)


def register_drift_tools(mcp: FastMCP) -> None:
    """Register drift scoring tools."""

    @mcp.tool()
    @handle_tool_errors("drift_score")
    def drift_score(dataset_a: str, dataset_b: str, bins: int | None = None) -> str:
        """Histogram drift (PSI, JS divergence, Wasserstein-1) between two image datasets.

        Args:
            dataset_a: Directory with images/ (reference), or a cached summary file.
            dataset_b: Directory with images/ (candidate), or a cached summary file.
            bins: Histogram bins per channel. Default: 64.

        Returns:
            JSON with per_channel scores, aggregate means, flags and drifted verdict, or error.
        """
        cfg = DriftScoreRunConfig(
            a=Path(dataset_a),
            b=Path(dataset_b),
            bins=bins if bins is not None else settings.hist_bins,
        )
        report = DriftScoreService().run(cfg).report
        logger.info("drift_score", extra={"drifted": report.drifted})
        return json.dumps(
            {
                "per_channel": report.per_channel,
                "aggregate": report.aggregate,
                "flags": report.flags,
                "thresholds": report.thresholds.model_dump(),
                "drifted": report.drifted,
            }
        )
