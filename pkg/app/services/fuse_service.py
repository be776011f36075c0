"""Fuse service - merge a clean and a drifted flat dataset into one."""

from app.core.exceptions import ValidationError
from app.schemas.run import FuseRunConfig
from app.services.datasets import CLASSES_FILE, flat_location
from app.services.output import OutputPlan
from app.utils.logging import get_logger

logger = get_logger(__name__)

PREFIXES = ("clean_", "drift_")


class FuseService:
    """Copies both datasets under prefixed stems; class tables must agree."""

    def run(self, cfg: FuseRunConfig) -> int:
        clean = flat_location(cfg.clean)
        drifted = flat_location(cfg.drifted)
        if clean.classes != drifted.classes:
            raise ValidationError("clean and drifted datasets have different class tables")
        plan = OutputPlan(cfg.out, cfg.force, inputs=[cfg.clean, cfg.drifted])

        count = 0
        for prefix, location in zip(PREFIXES, (clean, drifted)):
            for sample in location.samples():
                plan.add_copy(f"images/{prefix}{sample.image_path.name}", sample.image_path, cfg.link)
                if sample.label_path is not None:
                    plan.add_copy(f"labels/{prefix}{sample.label_path.name}", sample.label_path, cfg.link)
                count += 1
        plan.add_dir("labels")
        plan.add_text(CLASSES_FILE, "\n".join(clean.classes.names) + "\n")
        plan.commit()
        logger.info("fusion_written", extra={"out": str(cfg.out), "images": count})
        return count
