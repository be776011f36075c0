"""Drift service - run a spec pipeline over every image of a dataset."""

import hashlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from app.core.config import settings
from app.core.exceptions import ParseError
from app.dataset.labels import read_labels, write_label_file
from app.dataset.types import ClassTable, SampleRef
from app.drift.geometry import TransformResult
from app.drift.image import read_image
from app.drift.pipeline import apply_pipeline, is_photometric_only
from app.drift.specs import DriftSpec, parse_spec_file
from app.schemas.run import DriftRunConfig
from app.services.datasets import CLASSES_FILE, resolve_location
from app.services.output import OutputPlan
from app.utils.files import decode_utf8
from app.utils.logging import get_logger

logger = get_logger(__name__)

PROVENANCE_FILE = "drift.txt"


@dataclass
class DriftOutcome:
    images: int
    dropped: int
    spec_sha256: str


def load_specs(spec_text: str, path: str, seed: int) -> list[DriftSpec]:
    try:
        return parse_spec_file(spec_text, seed)
    except ParseError as e:
        raise ParseError(e.reason, e.line, path) from None


def format_provenance(spec_sha256: str, seed: int, dropped: int, images: int, specs: list[DriftSpec]) -> str:
    lines = [
        f"spec_sha256: {spec_sha256}",
        f"seed: {seed}",
        f"images: {images}",
        f"dropped_boxes: {dropped}",
        "pipeline:",
        *(f"  - {spec.to_line()}" for spec in specs),
    ]
    return "\n".join(lines) + "\n"


class DriftService:
    """Applies a drift pipeline to a dataset location and writes a flat dataset."""

    def __init__(self, workers: int | None = None) -> None:
        self._workers = workers or settings.workers

    def _transform(self, sample: SampleRef, classes: ClassTable, specs: list[DriftSpec]) -> TransformResult:
        boxes = read_labels(sample.label_path, classes)
        result = apply_pipeline(read_image(sample.image_path), boxes, specs, sample.stem)
        logger.debug(
            "image_transformed",
            extra={"stem": sample.stem, "boxes": len(result.boxes), "dropped": result.dropped},
        )
        return result

    def run(self, cfg: DriftRunConfig) -> DriftOutcome:
        spec_bytes = cfg.spec.read_bytes()
        specs = load_specs(decode_utf8(spec_bytes, cfg.spec), str(cfg.spec), cfg.seed)
        location = resolve_location(cfg.dataset)
        samples = location.samples()
        plan = OutputPlan(cfg.out, cfg.force, inputs=[location.split_dir, cfg.spec])
        photometric_only = is_photometric_only(specs)

        dropped = 0
        if not specs:
            for sample in samples:
                plan.add_copy(f"images/{sample.image_path.name}", sample.image_path)
        else:
            with ThreadPoolExecutor(max_workers=self._workers) as pool:
                results = list(pool.map(lambda s: self._transform(s, location.classes, specs), samples))
            for sample, result in zip(samples, results):
                plan.add_image(f"images/{sample.image_path.name}", result.image)
                dropped += result.dropped
                if sample.label_path is not None and not photometric_only:
                    plan.add_text(f"labels/{sample.label_path.name}", write_label_file(result.boxes))

        for sample in samples:
            if sample.label_path is not None and f"labels/{sample.label_path.name}" not in plan:
                plan.add_copy(f"labels/{sample.label_path.name}", sample.label_path)

        digest = hashlib.sha256(spec_bytes).hexdigest()
        plan.add_dir("labels")
        plan.add_text(CLASSES_FILE, "\n".join(location.classes.names) + "\n")
        plan.add_text(PROVENANCE_FILE, format_provenance(digest, cfg.seed, dropped, len(samples), specs))
        plan.commit()

        logger.info(
            "drift_written",
            extra={"out": str(cfg.out), "images": len(samples), "dropped": dropped, "steps": len(specs)},
        )
        return DriftOutcome(images=len(samples), dropped=dropped, spec_sha256=digest)
