"""Split service - flat dataset into train/val/test trees plus manifest."""

from dataclasses import dataclass

from app.dataset.manifest import SPLITS, format_manifest
from app.dataset.split import split_dataset
from app.dataset.types import SplitAssignment
from app.schemas.run import SplitRunConfig
from app.services.datasets import flat_location
from app.services.output import OutputPlan
from app.utils.logging import get_logger

logger = get_logger(__name__)

MANIFEST_FILE = "data.yaml"
SPLIT_RECORD = "split.txt"


def format_split_record(assignment: SplitAssignment) -> str:
    """split.txt: seed and ratios header, then `<stem> <split>` sorted by stem."""
    r = assignment.ratios
    lines = [f"# seed={assignment.seed} ratios={r[0]!r},{r[1]!r},{r[2]!r}"]
    lines += [f"{stem} {split}" for stem, split in sorted(assignment.split_of().items())]
    return "\n".join(lines) + "\n"


@dataclass
class SplitOutcome:
    assignment: SplitAssignment
    manifest_path: str


class SplitService:
    """Seeded split of a flat dataset, copied or hard-linked into split trees."""

    def run(self, cfg: SplitRunConfig) -> SplitOutcome:
        location = flat_location(cfg.source)
        samples = location.samples()
        plan = OutputPlan(cfg.out, cfg.force, inputs=[cfg.source])
        assignment = split_dataset([s.stem for s in samples], cfg.ratios, cfg.seed)
        owner = assignment.split_of()

        for sample in samples:
            split = owner[sample.stem]
            plan.add_copy(f"{split}/images/{sample.image_path.name}", sample.image_path, cfg.link)
            if sample.label_path is not None:
                plan.add_copy(f"{split}/labels/{sample.label_path.name}", sample.label_path, cfg.link)

        # empty splits still need their directories for the manifest
        for split in SPLITS:
            plan.add_dir(f"{split}/images")
            plan.add_dir(f"{split}/labels")
        plan.add_text(MANIFEST_FILE, format_manifest(location.classes))
        plan.add_text(SPLIT_RECORD, format_split_record(assignment))
        plan.commit()

        logger.info(
            "split_written",
            extra={
                "out": str(cfg.out),
                "train": len(assignment.train),
                "val": len(assignment.val),
                "test": len(assignment.test),
                "seed": cfg.seed,
            },
        )
        return SplitOutcome(assignment=assignment, manifest_path=str(cfg.out / MANIFEST_FILE))
