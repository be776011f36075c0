"""Tests for the single-writer output plan."""

from pathlib import Path

import pytest

from app.core.exceptions import ValidationError
from app.drift.image import RasterImage, read_image
from app.services.output import DONE_MARKER, OutputPlan, check_output_dir


def test_commit_writes_everything_then_done(tmp_path: Path) -> None:
    """Staged files appear only on commit, followed by the DONE marker."""
    out = tmp_path / "out"
    src = tmp_path / "src.txt"
    src.write_text("copied", encoding="utf-8")
    plan = OutputPlan(out)
    plan.add_text("a/report.txt", "hello\n")
    plan.add_bytes("blob.bin", b"\x00\x01")
    plan.add_image("images/x.png", RasterImage.solid(2, 2, (1, 2, 3)))
    plan.add_copy("copy.txt", src)
    plan.add_dir("empty")
    assert not out.exists()
    assert len(plan) == 5
    assert "a/report.txt" in plan

    plan.commit()
    assert (out / "a" / "report.txt").read_text(encoding="utf-8") == "hello\n"
    assert (out / "blob.bin").read_bytes() == b"\x00\x01"
    assert tuple(read_image(out / "images" / "x.png").pixels[0, 0]) == (1, 2, 3)
    assert (out / "copy.txt").read_text(encoding="utf-8") == "copied"
    assert (out / "empty").is_dir()
    assert (out / DONE_MARKER).exists()


def test_hard_link(tmp_path: Path) -> None:
    """link=True hard-links instead of copying."""
    src = tmp_path / "src.txt"
    src.write_text("x", encoding="utf-8")
    plan = OutputPlan(tmp_path / "out")
    plan.add_copy("linked.txt", src, link=True)
    plan.commit()
    assert (tmp_path / "out" / "linked.txt").stat().st_ino == src.stat().st_ino


def test_non_empty_output_refused(tmp_path: Path) -> None:
    """A non-empty output directory needs force."""
    (tmp_path / "old.txt").write_text("x", encoding="utf-8")
    with pytest.raises(ValidationError, match="--force"):
        OutputPlan(tmp_path)


def test_force_replaces_contents(tmp_path: Path) -> None:
    """With force, stale files are removed before writing."""
    out = tmp_path / "out"
    out.mkdir()
    (out / "stale.txt").write_text("x", encoding="utf-8")
    plan = OutputPlan(out, force=True)
    plan.add_text("fresh.txt", "y")
    plan.commit()
    assert not (out / "stale.txt").exists()
    assert (out / "fresh.txt").exists()


def test_stage_twice_rejected(tmp_path: Path) -> None:
    """The same relative path cannot be staged twice."""
    plan = OutputPlan(tmp_path / "out")
    plan.add_text("x.txt", "1")
    with pytest.raises(ValidationError):
        plan.add_text("x.txt", "2")


def test_output_path_is_file(tmp_path: Path) -> None:
    """A regular file is not an output directory."""
    path = tmp_path / "f"
    path.write_text("x", encoding="utf-8")
    with pytest.raises(ValidationError):
        check_output_dir(path, force=True)


@pytest.mark.parametrize("relation", ["same", "parent"])
def test_output_over_input_rejected(tmp_path: Path, relation: str) -> None:
    """An output directory equal to or containing an input is refused, even with force."""
    source = tmp_path / "data" / "images"
    source.mkdir(parents=True)
    (source / "a.png").write_bytes(b"x")
    out = source if relation == "same" else tmp_path / "data"
    with pytest.raises(ValidationError, match="overwrite input"):
        OutputPlan(out, force=True, inputs=[source])
    assert (source / "a.png").read_bytes() == b"x"


def test_output_beside_input_allowed(tmp_path: Path) -> None:
    """A sibling of an input is a normal output directory."""
    (tmp_path / "data").mkdir()
    plan = OutputPlan(tmp_path / "data_out", inputs=[tmp_path / "data"])
    plan.add_text("x.txt", "1")
    assert plan.commit() == tmp_path / "data_out"


def test_failed_commit_keeps_existing_output(tmp_path: Path) -> None:
    """If writing fails, a forced overwrite leaves the old output and no staging dir."""
    out = tmp_path / "out"
    out.mkdir()
    (out / "old.txt").write_text("keep", encoding="utf-8")
    plan = OutputPlan(out, force=True)
    plan.add_text("new.txt", "y")
    plan.add_copy("copied.bin", tmp_path / "vanished.bin")
    with pytest.raises(FileNotFoundError):
        plan.commit()
    assert (out / "old.txt").read_text(encoding="utf-8") == "keep"
    assert sorted(p.name for p in tmp_path.iterdir()) == ["out"]
