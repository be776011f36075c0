"""driftbench command line: split, drift, eval, compare, driftscore, demo, stats, fuse.

Exit codes: 0 success, 1 runtime failure, 2 usage or validation error.
Reports go to stdout, logs to stderr.
"""

import argparse
import sys
from pathlib import Path

from pydantic import ValidationError as PydanticValidationError

from app.core.config import settings
from app.core.exceptions import DriftBenchError
from app.reports.tables import render_metrics_text
from app.schemas.run import (
    CompareRunConfig,
    DatasetInput,
    DemoRunConfig,
    DriftRunConfig,
    DriftScoreRunConfig,
    EvalRunConfig,
    FuseRunConfig,
    SplitRunConfig,
)
from app.services.compare_service import CompareService
from app.services.demo_service import DemoService
from app.services.drift_service import DriftService
from app.services.driftscore_service import DriftScoreService
from app.services.eval_service import EvalService
from app.services.fuse_service import FuseService
from app.services.split_service import SplitService
from app.services.stats_service import StatsService
from app.utils.errors import EXIT_OK, describe_error, exit_code_for
from app.utils.logging import configure_logging, get_logger

logger = get_logger(__name__)


def _ratios(text: str) -> tuple[float, float, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected three comma-separated ratios a,b,c")
    try:
        return (float(parts[0]), float(parts[1]), float(parts[2]))
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid ratios {text!r}") from None


def _pair(text: str) -> tuple[str, str]:
    parts = text.split(",")
    if len(parts) != 2 or not all(parts):
        raise argparse.ArgumentTypeError("expected two comma-separated labels")
    return (parts[0], parts[1])


def _seed(args: argparse.Namespace) -> int:
    return args.seed if args.seed is not None else settings.seed


def _dataset(args: argparse.Namespace) -> DatasetInput:
    return DatasetInput(manifest=args.manifest, split=args.split, source=args.source)


def _add_dataset_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--manifest", type=Path, help="dataset manifest (with --split)")
    p.add_argument("--split", choices=("train", "val", "test"), help="split of the manifest")
    p.add_argument("--source", type=Path, help="flat dataset dir with images/, labels/, classes.txt")


def _add_output_args(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--out", type=Path, required=required, help="output directory")
    p.add_argument("--force", action="store_true", help="overwrite a non-empty output directory")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="driftbench",
        description="Dataset drift workbench for object detection: split, drift, evaluate, compare.",
    )
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")
    parser.add_argument("--seed", type=int, default=None, help="global seed (fallback: DRIFTBENCH_SEED)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("split", help="seeded train/val/test split of a flat dataset")
    p.add_argument("--source", type=Path, required=True)
    p.add_argument("--ratios", type=_ratios, default=(0.8, 0.2, 0.0))
    p.add_argument("--link", action="store_true", help="hard-link instead of copying")
    _add_output_args(p)

    p = sub.add_parser("drift", help="apply a drift spec file to a dataset")
    _add_dataset_args(p)
    p.add_argument("--spec", type=Path, required=True)
    _add_output_args(p)

    p = sub.add_parser("eval", help="evaluate a predictions directory")
    _add_dataset_args(p)
    p.add_argument("--preds", type=Path, required=True)
    p.add_argument("--conf", type=float, default=None, help="confidence threshold (default 0.2)")
    p.add_argument("--sweep", action="store_true", help="also report the max-F1 operating point")
    p.add_argument("--name", default="run")
    _add_output_args(p)

    p = sub.add_parser("compare", help="compare two metrics.json reports")
    p.add_argument("reports", type=Path, nargs=2)
    p.add_argument("--labels", type=_pair, default=None, help="column labels, e.g. Validation,Test")
    p.add_argument("--pdf", action="store_true", help="also write comparison.pdf (needs --out)")
    _add_output_args(p, required=False)

    p = sub.add_parser("driftscore", help="histogram drift scores between two datasets")
    p.add_argument("a", type=Path)
    p.add_argument("b", type=Path)
    p.add_argument("--bins", type=int, default=None)
    _add_output_args(p, required=False)

    p = sub.add_parser("demo", help="baseline detector on clean vs drifted synthetic data")
    p.add_argument("--images", type=int, default=48)
    p.add_argument("--top-k", type=int, default=None)
    _add_output_args(p)

    p = sub.add_parser("stats", help="per-split class balance of a manifest")
    p.add_argument("--manifest", type=Path, required=True)

    p = sub.add_parser("fuse", help="merge a clean and a drifted flat dataset")
    p.add_argument("clean", type=Path)
    p.add_argument("drifted", type=Path)
    p.add_argument("--link", action="store_true")
    _add_output_args(p)
    return parser


def _run(args: argparse.Namespace) -> int:
    match args.command:
        case "split":
            outcome = SplitService().run(
                SplitRunConfig(source=args.source, ratios=args.ratios, seed=_seed(args),
                               link=args.link, out=args.out, force=args.force)
            )
            a = outcome.assignment
            print(f"train {len(a.train)}  val {len(a.val)}  test {len(a.test)}  -> {outcome.manifest_path}")
        case "drift":
            outcome = DriftService().run(
                DriftRunConfig(dataset=_dataset(args), spec=args.spec, seed=_seed(args),
                               out=args.out, force=args.force)
            )
            print(f"{outcome.images} images written, {outcome.dropped} boxes dropped")
        case "eval":
            conf = args.conf if args.conf is not None else settings.conf_threshold
            outcome = EvalService().run(
                EvalRunConfig(dataset=_dataset(args), preds=args.preds, conf=conf, sweep=args.sweep,
                              name=args.name, out=args.out, force=args.force)
            )
            print(render_metrics_text(outcome.report), end="")
        case "compare":
            outcome = CompareService().run(
                CompareRunConfig(reports=tuple(args.reports), labels=args.labels, out=args.out,
                                 pdf=args.pdf, force=args.force)
            )
            print(outcome.text, end="")
        case "driftscore":
            bins = args.bins if args.bins is not None else settings.hist_bins
            outcome = DriftScoreService().run(
                DriftScoreRunConfig(a=args.a, b=args.b, bins=bins, out=args.out, force=args.force)
            )
            print(outcome.text, end="")
        case "demo":
            top_k = args.top_k if args.top_k is not None else settings.baseline_top_k
            outcome = DemoService().run(
                DemoRunConfig(images=args.images, seed=_seed(args), top_k=top_k,
                              out=args.out, force=args.force)
            )
            print(outcome.comparison.text, end="")
        case "stats":
            _, text = StatsService().stats(args.manifest)
            print(text, end="")
        case "fuse":
            count = FuseService().run(
                FuseRunConfig(clean=args.clean, drifted=args.drifted, link=args.link,
                              out=args.out, force=args.force)
            )
            print(f"{count} images fused into {args.out}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)
    try:
        return _run(args)
    except (DriftBenchError, PydanticValidationError, OSError) as e:
        code = exit_code_for(e)
        logger.error("command_failed", extra={"command": args.command, "error": describe_error(e), "exit_code": code})
        print(f"driftbench {args.command}: {describe_error(e)}", file=sys.stderr)
        return code


if __name__ == "__main__":
    raise SystemExit(main())
