"""Deterministic synthetic sign dataset for demos and tests.

Images are gray noise with solid square "signs" placed on an 8-pixel lattice,
one color per class (see app.core.categories.SIGN_COLORS).
"""

from dataclasses import dataclass

import numpy as np

from app.core.categories import ROAD_SIGN_CLASSES, SIGN_COLORS
from app.core.exceptions import ValidationError
from app.core.prng import SeededStream, derive_seed
from app.dataset.types import NormBox
from app.drift.image import RasterImage


@dataclass(frozen=True)
class SyntheticConfig:
    image_size: int = 96
    sign_size: int = 16
    signs_per_image: int = 2
    background_low: int = 70
    background_high: int = 170


def _slots(cfg: SyntheticConfig) -> list[tuple[int, int]]:
    step = cfg.sign_size + 8
    coords = list(range(8, cfg.image_size - cfg.sign_size + 1, step))
    return [(x, y) for y in coords for x in coords]


def generate_sample(
    index: int,
    seed: int,
    num_classes: int = len(ROAD_SIGN_CLASSES),
    cfg: SyntheticConfig | None = None,
) -> tuple[RasterImage, list[NormBox]]:
    """Image ``index`` of the synthetic set; classes cycle so the set stays balanced."""
    cfg = cfg or SyntheticConfig()
    if num_classes > len(SIGN_COLORS):
        raise ValidationError(f"at most {len(SIGN_COLORS)} synthetic classes")
    slots = _slots(cfg)
    if cfg.signs_per_image > len(slots):
        raise ValidationError("too many signs for the image size")

    stream = SeededStream(derive_seed(seed, "synthetic", index))
    size = cfg.image_size
    span = cfg.background_high - cfg.background_low
    gray = cfg.background_low + np.floor(stream.uniform(size * size) * (span + 1))
    pixels = np.repeat(gray.reshape(size, size, 1), 3, axis=2).astype(np.uint8)

    boxes: list[NormBox] = []
    for j, (x0, y0) in enumerate(stream.shuffle(slots)[: cfg.signs_per_image]):
        class_id = (index * cfg.signs_per_image + j) % num_classes
        s = cfg.sign_size
        pixels[y0 : y0 + s, x0 : x0 + s] = SIGN_COLORS[class_id]
        boxes.append(NormBox.from_corners(class_id, x0 / size, y0 / size, (x0 + s) / size, (y0 + s) / size))
    return RasterImage(pixels), boxes


def synthetic_dataset(
    count: int,
    seed: int,
    num_classes: int = len(ROAD_SIGN_CLASSES),
    cfg: SyntheticConfig | None = None,
) -> list[tuple[str, RasterImage, list[NormBox]]]:
    """(stem, image, boxes) for ``count`` synthetic samples."""
    return [(f"sign_{i:05d}", *generate_sample(i, seed, num_classes, cfg)) for i in range(count)]
