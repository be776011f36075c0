"""Single writer phase for command outputs.

Commands stage every output file in an OutputPlan while computing, then
commit once. The DONE marker is written last, so a directory without it
comes from an interrupted run.
"""

import os
import shutil
from collections.abc import Iterable
from dataclasses import dataclass
from pathlib import Path

from app.core.exceptions import ValidationError
from app.drift.image import RasterImage, write_image
from app.utils.logging import get_logger

logger = get_logger(__name__)

DONE_MARKER = "DONE"


@dataclass(frozen=True)
class _Staged:
    text: str | None = None
    data: bytes | None = None
    image: RasterImage | None = None
    source: Path | None = None
    link: bool = False
    directory: bool = False


def check_output_dir(out_dir: Path, force: bool, inputs: Iterable[Path] = ()) -> None:
    """Refuse to write into a non-empty directory unless forced, or over an input."""
    out_dir = Path(out_dir)
    if out_dir.exists() and not out_dir.is_dir():
        raise ValidationError(f"output path is not a directory: {out_dir}")
    resolved = out_dir.resolve()
    for source in inputs:
        source = Path(source).resolve()
        if source == resolved or resolved in source.parents:
            raise ValidationError(f"output directory {out_dir} would overwrite input {source}")
    if out_dir.is_dir() and any(out_dir.iterdir()) and not force:
        raise ValidationError(f"output directory {out_dir} is not empty (use --force to overwrite)")


def mark_done(out_dir: Path) -> None:
    (Path(out_dir) / DONE_MARKER).write_text("", encoding="utf-8")


class OutputPlan:
    """Files staged for one output directory.

    ``inputs`` are the paths the command reads from; an output directory equal
    to or above any of them is rejected up front.
    """

    def __init__(self, out_dir: Path, force: bool = False, inputs: Iterable[Path] = ()) -> None:
        check_output_dir(out_dir, force, inputs)
        self.out_dir = Path(out_dir)
        self._files: dict[str, _Staged] = {}

    def _stage(self, rel: str, item: _Staged) -> None:
        if rel in self._files:
            raise ValidationError(f"output {rel} staged twice")
        self._files[rel] = item

    def add_text(self, rel: str, text: str) -> None:
        self._stage(rel, _Staged(text=text))

    def add_bytes(self, rel: str, data: bytes) -> None:
        self._stage(rel, _Staged(data=data))

    def add_image(self, rel: str, image: RasterImage) -> None:
        self._stage(rel, _Staged(image=image))

    def add_copy(self, rel: str, source: Path, link: bool = False) -> None:
        self._stage(rel, _Staged(source=Path(source), link=link))

    def add_dir(self, rel: str) -> None:
        self._stage(rel, _Staged(directory=True))

    def __contains__(self, rel: str) -> bool:
        return rel in self._files

    def __len__(self) -> int:
        return len(self._files)

    def _write(self, root: Path) -> None:
        for rel, item in self._files.items():
            target = root / rel
            if item.directory:
                target.mkdir(parents=True, exist_ok=True)
                continue
            target.parent.mkdir(parents=True, exist_ok=True)
            if item.text is not None:
                target.write_text(item.text, encoding="utf-8")
            elif item.data is not None:
                target.write_bytes(item.data)
            elif item.image is not None:
                write_image(item.image, target)
            elif item.link:
                os.link(item.source, target)
            else:
                shutil.copyfile(item.source, target)
        mark_done(root)

    def commit(self) -> Path:
        """Write everything into a sibling staging directory, then swap it into place.

        An existing output (only possible with force) is removed after the
        swap; a failed write leaves it untouched.
        """
        target = self.out_dir.resolve()
        target.parent.mkdir(parents=True, exist_ok=True)
        staging = target.with_name(f".{target.name}.staging-{os.getpid()}")
        if staging.exists():
            shutil.rmtree(staging)
        staging.mkdir()
        try:
            self._write(staging)
        except BaseException:
            shutil.rmtree(staging, ignore_errors=True)
            raise

        if target.exists():
            retired = target.with_name(f".{target.name}.retired-{os.getpid()}")
            if retired.exists():
                shutil.rmtree(retired)
            os.replace(target, retired)
            os.replace(staging, target)
            shutil.rmtree(retired)
        else:
            os.replace(staging, target)
        logger.info("outputs_written", extra={"out_dir": str(self.out_dir), "files": len(self._files)})
        return self.out_dir
