"""Demo service - baseline detector on a clean vs drifted synthetic test split.

Layout under the output directory:
  data/               synthetic flat dataset
  split/              train/val/test trees + data.yaml
  drifted/            fogged and rotated copy of the test split
  preds/{clean,drifted}/ and eval/{clean,drifted}/
  comparison/         Clean vs Drifted table
"""

import shutil
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from app.baseline.detector import BaselineModel, build_templates, detect
from app.baseline.synthetic import synthetic_dataset
from app.core.categories import ROAD_SIGN_CLASSES
from app.core.config import settings
from app.dataset.labels import read_labels, write_label_file, write_prediction_file
from app.dataset.types import ClassTable
from app.drift.image import read_image
from app.schemas.report import MetricsReportSchema
from app.schemas.run import (
    CompareRunConfig,
    DatasetInput,
    DemoRunConfig,
    DriftRunConfig,
    EvalRunConfig,
    SplitRunConfig,
)
from app.services.compare_service import CompareOutcome, CompareService
from app.services.datasets import CLASSES_FILE, DatasetLocation, resolve_location
from app.services.drift_service import DriftService
from app.services.eval_service import METRICS_JSON, EvalService
from app.services.output import OutputPlan, check_output_dir, mark_done
from app.services.split_service import MANIFEST_FILE, SplitService
from app.utils.logging import get_logger

logger = get_logger(__name__)

DEMO_RATIOS = (0.5, 0.0, 0.5)
DEMO_DRIFT_SPEC = "# demo drift: dense fog, then a small camera roll\nfog density=0.6\nrotate angle=15\n"
RUN_LABELS = ("Clean", "Drifted")


@dataclass
class DemoOutcome:
    clean: MetricsReportSchema
    drifted: MetricsReportSchema
    comparison: CompareOutcome


class DemoService:
    """Runs generate -> split -> templates -> drift -> detect -> eval -> compare."""

    def __init__(self, workers: int | None = None) -> None:
        self._workers = workers or settings.workers

    def _write_synthetic(self, root: Path, cfg: DemoRunConfig, classes: ClassTable) -> None:
        plan = OutputPlan(root)
        for stem, image, boxes in synthetic_dataset(cfg.images, cfg.seed, len(classes)):
            plan.add_image(f"images/{stem}.png", image)
            plan.add_text(f"labels/{stem}.txt", write_label_file(boxes))
        plan.add_text(CLASSES_FILE, "\n".join(classes.names) + "\n")
        plan.commit()

    def _templates(self, train: DatasetLocation) -> BaselineModel:
        samples = [(read_image(s.image_path), read_labels(s.label_path, train.classes)) for s in train.samples()]
        return build_templates(samples)

    def _predict(self, location: DatasetLocation, model: BaselineModel, top_k: int, out: Path) -> None:
        samples = location.samples()
        with ThreadPoolExecutor(max_workers=self._workers) as pool:
            results = list(pool.map(lambda s: detect(read_image(s.image_path), model, top_k), samples))
        plan = OutputPlan(out)
        for sample, preds in zip(samples, results):
            plan.add_text(f"{sample.stem}.txt", write_prediction_file(preds))
        plan.commit()

    def run(self, cfg: DemoRunConfig) -> DemoOutcome:
        root = Path(cfg.out)
        check_output_dir(root, cfg.force)
        if root.exists() and cfg.force:
            shutil.rmtree(root)
        classes = ClassTable.of(ROAD_SIGN_CLASSES)

        self._write_synthetic(root / "data", cfg, classes)
        SplitService().run(
            SplitRunConfig(source=root / "data", ratios=DEMO_RATIOS, seed=cfg.seed, out=root / "split")
        )
        manifest = root / "split" / MANIFEST_FILE
        model = self._templates(resolve_location(DatasetInput(manifest=manifest, split="train")))

        spec_path = root / "drift_spec.txt"
        spec_path.write_text(DEMO_DRIFT_SPEC, encoding="utf-8")
        test_input = DatasetInput(manifest=manifest, split="test")
        DriftService(self._workers).run(
            DriftRunConfig(dataset=test_input, spec=spec_path, seed=cfg.seed, out=root / "drifted")
        )

        inputs = {
            "clean": test_input,
            "drifted": DatasetInput(source=root / "drifted"),
        }
        reports: dict[str, MetricsReportSchema] = {}
        evaluator = EvalService(self._workers)
        for (key, dataset), label in zip(inputs.items(), RUN_LABELS):
            location = resolve_location(dataset)
            self._predict(location, model, cfg.top_k, root / "preds" / key)
            outcome = evaluator.run(
                EvalRunConfig(dataset=dataset, preds=root / "preds" / key, name=label, out=root / "eval" / key)
            )
            reports[key] = outcome.report

        comparison = CompareService().run(
            CompareRunConfig(
                reports=(root / "eval" / "clean" / METRICS_JSON, root / "eval" / "drifted" / METRICS_JSON),
                labels=RUN_LABELS,
                out=root / "comparison",
            )
        )
        mark_done(root)
        logger.info(
            "demo_completed",
            extra={
                "clean_map50": reports["clean"].macro.map50,
                "drifted_map50": reports["drifted"].macro.map50,
            },
        )
        return DemoOutcome(clean=reports["clean"], drifted=reports["drifted"], comparison=comparison)
