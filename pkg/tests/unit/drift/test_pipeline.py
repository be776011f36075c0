"""Tests for drift pipelines and raster I/O."""

from pathlib import Path

import numpy as np
import pytest

from app.core.exceptions import NotFoundError, ValidationError
from app.dataset.types import NormBox
from app.drift.geometry import mirror_h, rotate
from app.drift.image import RasterImage, read_image, write_image
from app.drift.photometric import fog
from app.drift.pipeline import apply_pipeline, is_photometric_only
from app.drift.specs import parse_spec_file


@pytest.fixture
def image() -> RasterImage:
    rng = np.random.default_rng(0)
    return RasterImage(rng.integers(0, 256, size=(16, 16, 3), dtype=np.uint8))


def test_empty_pipeline_is_identity(image: RasterImage) -> None:
    """No steps, no change."""
    boxes = [NormBox(0, 0.5, 0.5, 0.2, 0.2)]
    result = apply_pipeline(image, boxes, [])
    assert result.image.same_as(image)
    assert result.boxes == boxes


def test_pipeline_applies_left_to_right(image: RasterImage) -> None:
    """fog then mirror equals mirror(fog(image))."""
    specs = parse_spec_file("fog density=0.3\nmirror_h\n", seed=0)
    boxes = [NormBox(1, 0.25, 0.5, 0.2, 0.2)]
    result = apply_pipeline(image, boxes, specs, stem="img")
    expected = mirror_h(fog(image, 0.3), boxes)
    assert result.image.same_as(expected.image)
    assert result.boxes == expected.boxes


def test_rotate_then_fog_matches_sequential_calls(image: RasterImage) -> None:
    """[rotate 10, fog 0.3] is bit-exact with fog(rotate(image)) and carries rotate's boxes."""
    specs = parse_spec_file("rotate angle=10 fill=128,128,128 drop=0.3\nfog density=0.3\n", seed=0)
    boxes = [NormBox(0, 0.5, 0.5, 0.3, 0.2), NormBox(1, 0.3, 0.6, 0.2, 0.2)]
    result = apply_pipeline(image, boxes, specs, stem="img")
    rotated = rotate(image, boxes, 10.0, (128, 128, 128), 0.3)
    assert result.image.same_as(fog(rotated.image, 0.3))
    assert result.boxes == rotated.boxes
    assert result.dropped == rotated.dropped


def test_photometric_steps_keep_boxes(image: RasterImage) -> None:
    """Photometric pipelines never touch boxes."""
    specs = parse_spec_file("blur sigma=1\nseasonal shift=-0.5\nsensor_noise sigma=3\n", seed=1)
    boxes = [NormBox(0, 0.3, 0.3, 0.1, 0.1)]
    assert is_photometric_only(specs)
    assert apply_pipeline(image, boxes, specs, "a").boxes == boxes


def test_stochastic_steps_depend_on_stem(image: RasterImage) -> None:
    """Per-image seeds differ by stem and repeat for the same stem."""
    specs = parse_spec_file("sensor_noise sigma=8\n", seed=3)
    a1 = apply_pipeline(image, [], specs, "a").image
    a2 = apply_pipeline(image, [], specs, "a").image
    b = apply_pipeline(image, [], specs, "b").image
    assert a1.same_as(a2)
    assert not a1.same_as(b)


def test_dropped_counts_accumulate() -> None:
    """Dropped boxes from every geometric step are summed."""
    specs = parse_spec_file("rotate angle=45\n", seed=0)
    boxes = [NormBox(0, 0.05, 0.05, 0.1, 0.1), NormBox(0, 0.95, 0.95, 0.1, 0.1)]
    result = apply_pipeline(RasterImage.solid(20, 20, (0, 0, 0)), boxes, specs)
    assert result.dropped == 2
    assert not is_photometric_only(specs)


def test_png_round_trip(tmp_path: Path, image: RasterImage) -> None:
    """PNG is lossless."""
    path = tmp_path / "sub" / "x.png"
    write_image(image, path)
    assert read_image(path).same_as(image)


def test_read_image_missing(tmp_path: Path) -> None:
    """Missing images raise NotFoundError."""
    with pytest.raises(NotFoundError):
        read_image(tmp_path / "none.png")


def test_read_micro_ppm(micro_dir: Path) -> None:
    """Binary PPM fixtures load as RGB."""
    im = read_image(micro_dir / "val" / "images" / "img1.ppm")
    assert (im.width, im.height) == (1, 1)
    assert tuple(im.pixels[0, 0]) == (128, 128, 128)


def test_raster_rejects_bad_shapes() -> None:
    """Only (H, W, 3) uint8 arrays are images."""
    with pytest.raises(ValidationError):
        RasterImage(np.zeros((4, 4), dtype=np.uint8))
    with pytest.raises(ValidationError):
        RasterImage(np.zeros((4, 4, 3), dtype=np.float32))


def test_raster_is_read_only(image: RasterImage) -> None:
    """Pixels cannot be modified in place."""
    with pytest.raises(ValueError):
        image.pixels[0, 0, 0] = 1
