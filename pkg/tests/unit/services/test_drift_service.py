"""Tests for DriftService."""

import hashlib
from pathlib import Path

import pytest

from app.core.exceptions import ParseError, ValidationError
from app.dataset.labels import read_labels
from app.dataset.manifest import load_class_table
from app.drift.image import read_image
from app.schemas.run import DatasetInput, DriftRunConfig
from app.services.drift_service import PROVENANCE_FILE, DriftService


def _spec(tmp_path: Path, text: str) -> Path:
    path = tmp_path / "spec.txt"
    path.write_text(text, encoding="utf-8")
    return path


def _run(tmp_path: Path, source: Path, text: str, name: str = "drifted") -> Path:
    cfg = DriftRunConfig(dataset=DatasetInput(source=source), spec=_spec(tmp_path, text), seed=3, out=tmp_path / name)
    DriftService(workers=2).run(cfg)
    return tmp_path / name


def test_empty_spec_copies_bytes(tmp_path: Path, sign_dataset: Path) -> None:
    """An empty pipeline reproduces the dataset byte for byte."""
    out = _run(tmp_path, sign_dataset, "# nothing\n")
    for image in (sign_dataset / "images").iterdir():
        assert (out / "images" / image.name).read_bytes() == image.read_bytes()
    for label in (sign_dataset / "labels").iterdir():
        assert (out / "labels" / label.name).read_bytes() == label.read_bytes()


def test_photometric_spec_keeps_labels(tmp_path: Path, sign_dataset: Path) -> None:
    """Photometric drift changes pixels and copies labels unchanged."""
    out = _run(tmp_path, sign_dataset, "fog density=0.5\n")
    stem = "sign_00000"
    assert not read_image(out / "images" / f"{stem}.png").same_as(read_image(sign_dataset / "images" / f"{stem}.png"))
    assert (out / "labels" / f"{stem}.txt").read_bytes() == (sign_dataset / "labels" / f"{stem}.txt").read_bytes()


def test_mirror_rewrites_labels(tmp_path: Path, sign_dataset: Path, sign_classes) -> None:
    """Geometric drift writes propagated labels."""
    out = _run(tmp_path, sign_dataset, "mirror_h\n")
    before = read_labels(sign_dataset / "labels" / "sign_00001.txt", sign_classes)
    after = read_labels(out / "labels" / "sign_00001.txt", sign_classes)
    assert before
    assert [b.cx for b in after] == pytest.approx([1 - b.cx for b in before], abs=2e-6)


def test_provenance_and_classes(tmp_path: Path, sign_dataset: Path) -> None:
    """drift.txt records the spec hash, seed and pipeline; classes.txt is carried over."""
    text = "rotate angle=10\n"
    out = _run(tmp_path, sign_dataset, text)
    provenance = (out / PROVENANCE_FILE).read_text(encoding="utf-8")
    assert f"spec_sha256: {hashlib.sha256(text.encode()).hexdigest()}" in provenance
    assert "seed: 3" in provenance
    assert "  - rotate angle=10.0" in provenance
    assert load_class_table(out / "classes.txt").names == load_class_table(sign_dataset / "classes.txt").names


def test_drift_is_deterministic(tmp_path: Path, sign_dataset: Path) -> None:
    """Same spec and seed reproduce identical images."""
    a = _run(tmp_path, sign_dataset, "sensor_noise sigma=5\n", "a")
    b = _run(tmp_path, sign_dataset, "sensor_noise sigma=5\n", "b")
    assert (a / "images" / "sign_00004.png").read_bytes() == (b / "images" / "sign_00004.png").read_bytes()


def test_bad_spec_names_file(tmp_path: Path, sign_dataset: Path) -> None:
    """Spec parse errors carry the spec path and line."""
    with pytest.raises(ParseError) as exc_info:
        _run(tmp_path, sign_dataset, "fog density=0.2\nfog density=3\n")
    assert exc_info.value.line == 2
    assert exc_info.value.path.endswith("spec.txt")
    assert not (tmp_path / "drifted").exists()


def test_out_equal_to_source_rejected(tmp_path: Path, sign_dataset: Path) -> None:
    """--force onto the dataset being drifted is refused and the inputs survive."""
    before = sorted(p.name for p in (sign_dataset / "images").iterdir())
    cfg = DriftRunConfig(
        dataset=DatasetInput(source=sign_dataset), spec=_spec(tmp_path, "fog density=0.2\n"),
        seed=3, out=sign_dataset, force=True,
    )
    with pytest.raises(ValidationError, match="overwrite input"):
        DriftService(workers=2).run(cfg)
    assert sorted(p.name for p in (sign_dataset / "images").iterdir()) == before


def test_spec_invalid_utf8(tmp_path: Path, sign_dataset: Path) -> None:
    """A spec file that is not UTF-8 is a ParseError naming the spec."""
    spec = tmp_path / "spec.txt"
    spec.write_bytes(b"fog density=0.2\nblur sigma=1 \xff\n")
    cfg = DriftRunConfig(dataset=DatasetInput(source=sign_dataset), spec=spec, seed=3, out=tmp_path / "drifted")
    with pytest.raises(ParseError) as exc_info:
        DriftService(workers=2).run(cfg)
    assert exc_info.value.line == 2
    assert exc_info.value.path == str(spec)
