"""Geometric transforms that move pixels and boxes together."""

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import ndimage

from app.core.config import settings
from app.core.exceptions import ValidationError
from app.dataset.types import NormBox
from app.drift.image import RasterImage

# Mirrored coordinates are snapped to this many decimals so that mirroring
# twice restores any box read from a label file bit for bit.
_MIRROR_DECIMALS = 12


@dataclass(frozen=True, eq=False)
class TransformResult:
    """Transformed image, surviving boxes and how many boxes were dropped."""

    image: RasterImage
    boxes: list[NormBox] = field(default_factory=list)
    dropped: int = 0


def _reflect(v: float) -> float:
    return round(1.0 - v, _MIRROR_DECIMALS)


def mirror_h(image: RasterImage, boxes: list[NormBox]) -> TransformResult:
    """Horizontal flip: pixel (x, y) -> (W-1-x, y), box cx -> 1-cx."""
    flipped = RasterImage(np.ascontiguousarray(image.pixels[:, ::-1, :]))
    out = [NormBox(b.class_id, _reflect(b.cx), b.cy, b.w, b.h) for b in boxes]
    return TransformResult(image=flipped, boxes=out, dropped=0)


def _check_angle(angle_deg: float) -> None:
    if not (-180.0 < angle_deg <= 180.0) or math.isnan(angle_deg):
        raise ValidationError(f"rotation angle {angle_deg} outside (-180, 180]")


def _quarter_turns(angle_deg: float) -> int | None:
    """Counter-clockwise quarter turns for exact multiples of 90 degrees."""
    if angle_deg % 90.0 != 0.0:
        return None
    return int(angle_deg // 90.0) % 4


def _corner_map(angle_deg: float, width: int, height: int):
    """Map normalized (x, y) to its rotated position (counter-clockwise positive)."""
    turns = _quarter_turns(angle_deg)
    if turns == 2:
        return lambda x, y: (1.0 - x, 1.0 - y)
    if turns in (1, 3) and width == height:
        if turns == 1:
            return lambda x, y: (y, 1.0 - x)
        return lambda x, y: (1.0 - y, x)

    theta = math.radians(angle_deg)
    c, s = math.cos(theta), math.sin(theta)
    if turns is not None:
        c, s = float(round(c)), float(round(s))
    aspect = height / width

    def rotate_point(x: float, y: float) -> tuple[float, float]:
        dx, dy = x - 0.5, y - 0.5
        return (
            0.5 + dx * c + dy * s * aspect,
            0.5 - dx * s / aspect + dy * c,
        )

    return rotate_point


def rotate_boxes(
    boxes: list[NormBox],
    angle_deg: float,
    width: int,
    height: int,
    drop_threshold: float | None = None,
) -> tuple[list[NormBox], int]:
    """Rotate box corners, take the axis-aligned hull and clip it to the canvas.

    A box is dropped when clipped area / hull area < drop_threshold.
    """
    tau = settings.drop_threshold if drop_threshold is None else drop_threshold
    if angle_deg == 0.0:
        return list(boxes), 0
    mapping = _corner_map(angle_deg, width, height)
    kept: list[NormBox] = []
    dropped = 0
    for b in boxes:
        x1, y1, x2, y2 = b.corners()
        pts = [mapping(x1, y1), mapping(x2, y1), mapping(x1, y2), mapping(x2, y2)]
        hx1 = min(p[0] for p in pts)
        hx2 = max(p[0] for p in pts)
        hy1 = min(p[1] for p in pts)
        hy2 = max(p[1] for p in pts)
        cx1, cx2 = max(hx1, 0.0), min(hx2, 1.0)
        cy1, cy2 = max(hy1, 0.0), min(hy2, 1.0)
        hull_area = (hx2 - hx1) * (hy2 - hy1)
        if cx2 <= cx1 or cy2 <= cy1 or hull_area <= 0.0:
            dropped += 1
            continue
        if (cx2 - cx1) * (cy2 - cy1) / hull_area < tau:
            dropped += 1
            continue
        kept.append(NormBox.from_corners(b.class_id, cx1, cy1, cx2, cy2))
    return kept, dropped


def rotate_pixels(
    image: RasterImage,
    angle_deg: float,
    fill_rgb: tuple[int, int, int],
) -> RasterImage:
    """Bilinear rotation about the image center on a same-size canvas."""
    if angle_deg == 0.0:
        return image
    turns = _quarter_turns(angle_deg)
    if turns == 2 or (turns in (1, 3) and image.width == image.height):
        return RasterImage(np.ascontiguousarray(np.rot90(image.pixels, k=turns, axes=(0, 1))))

    theta = math.radians(angle_deg)
    c, s = math.cos(theta), math.sin(theta)
    # Output (row, col) -> source (row, col): the inverse rotation.
    matrix = np.array([[c, s], [-s, c]])
    center = np.array([(image.height - 1) / 2.0, (image.width - 1) / 2.0])
    offset = center - matrix @ center
    src = image.as_float()
    out = np.empty_like(src)
    for ch in range(3):
        out[..., ch] = ndimage.affine_transform(
            src[..., ch],
            matrix,
            offset=offset,
            order=1,
            mode="constant",
            cval=float(fill_rgb[ch]),
        )
    return RasterImage.from_float(out)


def rotate(
    image: RasterImage,
    boxes: list[NormBox],
    angle_deg: float,
    fill_rgb: tuple[int, int, int] | None = None,
    drop_threshold: float | None = None,
) -> TransformResult:
    """Rotate image and boxes by angle_deg (counter-clockwise positive)."""
    _check_angle(angle_deg)
    fill = tuple(fill_rgb) if fill_rgb is not None else settings.fill_rgb
    rotated = rotate_pixels(image, angle_deg, fill)
    kept, dropped = rotate_boxes(boxes, angle_deg, image.width, image.height, drop_threshold)
    return TransformResult(image=rotated, boxes=kept, dropped=dropped)
