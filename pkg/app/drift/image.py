"""RGB raster type and PNG/PPM I/O."""

from dataclasses import dataclass
from pathlib import Path

import numpy as np
from PIL import Image

from app.core.exceptions import NotFoundError, ValidationError


@dataclass(frozen=True, eq=False)
class RasterImage:
    """8-bit RGB image; ``pixels`` is a read-only (height, width, 3) uint8 array."""

    pixels: np.ndarray

    def __post_init__(self) -> None:
        px = self.pixels
        if px.dtype != np.uint8 or px.ndim != 3 or px.shape[2] != 3:
            raise ValidationError(f"expected (H, W, 3) uint8 pixels, got {px.dtype} {px.shape}")
        if px.shape[0] < 1 or px.shape[1] < 1:
            raise ValidationError("image must be at least 1x1")
        if px.flags.writeable:
            frozen = np.ascontiguousarray(px).copy()
            frozen.flags.writeable = False
            object.__setattr__(self, "pixels", frozen)

    @property
    def width(self) -> int:
        return int(self.pixels.shape[1])

    @property
    def height(self) -> int:
        return int(self.pixels.shape[0])

    @classmethod
    def solid(cls, width: int, height: int, rgb: tuple[int, int, int]) -> "RasterImage":
        px = np.empty((height, width, 3), dtype=np.uint8)
        px[...] = rgb
        return cls(px)

    @classmethod
    def from_float(cls, data: np.ndarray) -> "RasterImage":
        """Round half up and clamp to [0, 255]."""
        return cls(np.clip(np.floor(data + 0.5), 0, 255).astype(np.uint8))

    def as_float(self) -> np.ndarray:
        return self.pixels.astype(np.float64)

    def same_as(self, other: "RasterImage") -> bool:
        return self.pixels.shape == other.pixels.shape and bool(np.array_equal(self.pixels, other.pixels))


def read_image(path: Path) -> RasterImage:
    """Load any Pillow-readable image as 8-bit RGB."""
    path = Path(path)
    if not path.is_file():
        raise NotFoundError(f"image not found: {path}")
    with Image.open(path) as im:
        return RasterImage(np.asarray(im.convert("RGB"), dtype=np.uint8))


def write_image(image: RasterImage, path: Path) -> None:
    """Write by extension (.png, .ppm, ...)."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    Image.fromarray(np.ascontiguousarray(image.pixels)).save(path)
