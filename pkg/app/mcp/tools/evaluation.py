"""Evaluation tools - evaluate_predictions, compare_reports."""

import json
from pathlib import Path

from fastmcp import FastMCP

from app.core.config import settings
from app.reports.comparison import comparison_rows
from app.schemas.run import CompareRunConfig, DatasetInput, EvalRunConfig
from app.services.compare_service import CompareService
from app.services.eval_service import EvalService
from app.utils.errors import handle_tool_errors
from app.utils.logging import get_logger

logger = get_logger(__name__)


def register_evaluation_tools(mcp: FastMCP) -> None:
    """Register evaluation and comparison tools."""

    @mcp.tool()
    @handle_tool_errors("evaluate_predictions", log_success=True)
    def evaluate_predictions(
        predictions_dir: str,
        out_dir: str,
        manifest_path: str | None = None,
        split: str | None = None,
        source_dir: str | None = None,
        conf_threshold: float | None = None,
        name: str = "run",
        sweep: bool = False,
        force: bool = False,
    ) -> str:
        """Evaluate a predictions directory (one <stem>.txt per image) against ground truth.

        Args:
            predictions_dir: Directory of prediction files (class cx cy w h conf).
            out_dir: Where metrics.json, metrics.csv, confusion.csv and pr_curves/ are written.
            manifest_path: Dataset manifest; use together with split.
            split: train, val or test.
            source_dir: Flat dataset directory instead of a manifest split.
            conf_threshold: Operating point for P/R/F1. Default: 0.2.
            name: Run name recorded in the report.
            sweep: Also report the max-F1 confidence threshold.
            force: Overwrite a non-empty out_dir.

        Returns:
            JSON metrics report (per-class rows and macro "all" row) or error.
        """
        cfg = EvalRunConfig(
            dataset=DatasetInput(
                manifest=Path(manifest_path) if manifest_path else None,
                split=split,
                source=Path(source_dir) if source_dir else None,
            ),
            preds=Path(predictions_dir),
            conf=conf_threshold if conf_threshold is not None else settings.conf_threshold,
            sweep=sweep,
            name=name,
            out=Path(out_dir),
            force=force,
        )
        outcome = EvalService().run(cfg)
        return outcome.report.model_dump_json()

    @mcp.tool()
    @handle_tool_errors("compare_reports")
    def compare_reports(report_a: str, report_b: str, label_a: str = "A", label_b: str = "B") -> str:
        """Compare two metrics.json reports on Precision, Recall, F1-Score, mAP50, mAP50-95.

        Args:
            report_a: Path to the first metrics.json.
            report_b: Path to the second metrics.json.
            label_a: Column label for the first run (e.g. Validation).
            label_b: Column label for the second run (e.g. Test).

        Returns:
            JSON with columns, rows (4-decimal strings, delta = b - a) and the text table, or error.
        """
        cfg = CompareRunConfig(reports=(Path(report_a), Path(report_b)), labels=(label_a, label_b))
        outcome = CompareService().run(cfg)
        rows = comparison_rows(outcome.table)
        return json.dumps({"columns": rows[0], "rows": rows[1:], "text": outcome.text})
