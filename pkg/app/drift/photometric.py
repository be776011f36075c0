"""Photometric drift transforms - pixels change, boxes never do.

Every transform is the identity at its neutral parameters and deterministic
for a given seed.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from app.core.exceptions import ValidationError
from app.core.prng import SeededStream
from app.drift.image import RasterImage

FOG_AIRLIGHT = 230.0
RAIN_LEVEL = 225.0
RAIN_BLUR_SIGMA = 0.5
SEASONAL_GAIN = 0.3


@dataclass(frozen=True)
class Glare:
    """Elliptic glare patch in normalized coordinates."""

    cx: float
    cy: float
    rx: float
    ry: float
    intensity: float

    def __post_init__(self) -> None:
        if self.rx <= 0 or self.ry <= 0:
            raise ValidationError("glare radii must be positive")
        if not 0.0 <= self.intensity <= 1.0:
            raise ValidationError(f"glare intensity {self.intensity} outside [0,1]")


def blur(image: RasterImage, sigma: float) -> RasterImage:
    """Separable Gaussian blur, kernel radius ceil(3*sigma), edges clamped."""
    if sigma < 0:
        raise ValidationError(f"blur sigma {sigma} < 0")
    if sigma == 0:
        return image
    radius = math.ceil(3 * sigma)
    data = image.as_float()
    data = ndimage.gaussian_filter1d(data, sigma, axis=0, mode="nearest", radius=radius)
    data = ndimage.gaussian_filter1d(data, sigma, axis=1, mode="nearest", radius=radius)
    return RasterImage.from_float(data)


def _glare_weight(width: int, height: int, glare: Glare) -> np.ndarray:
    """Cosine falloff: 1 at the ellipse center, 0 on and outside its border."""
    xs = (np.arange(width) + 0.5) / width
    ys = (np.arange(height) + 0.5) / height
    dx = (xs[None, :] - glare.cx) / glare.rx
    dy = (ys[:, None] - glare.cy) / glare.ry
    r = np.sqrt(dx * dx + dy * dy)
    return np.where(r < 1.0, 0.5 * (1.0 + np.cos(np.pi * r)), 0.0)


def illumination(
    image: RasterImage,
    gamma: float = 1.0,
    gain: float = 1.0,
    glare: Glare | None = None,
) -> RasterImage:
    """v -> clamp(255 * gain * (v/255)^gamma), then optional glare toward white."""
    if gamma <= 0 or gain <= 0:
        raise ValidationError("illumination gamma and gain must be positive")
    no_glare = glare is None or glare.intensity == 0.0
    if gamma == 1.0 and gain == 1.0 and no_glare:
        return image
    data = 255.0 * gain * np.power(image.as_float() / 255.0, gamma)
    if not no_glare:
        data = np.clip(data, 0.0, 255.0)
        weight = glare.intensity * _glare_weight(image.width, image.height, glare)
        data = data + weight[..., None] * (255.0 - data)
    return RasterImage.from_float(data)


def fog(image: RasterImage, density: float) -> RasterImage:
    """Uniform-transmittance fog: v -> (1-density)*v + density*airlight."""
    if not 0.0 <= density <= 1.0:
        raise ValidationError(f"fog density {density} outside [0,1]")
    if density == 0.0:
        return image
    return RasterImage.from_float((1.0 - density) * image.as_float() + density * FOG_AIRLIGHT)


def _streak_mask(
    width: int,
    height: int,
    streak_count: int,
    length_px: float,
    angle_deg: float,
    seed: int,
) -> np.ndarray:
    """Anti-aliased streak coverage in [0, 1], splatted bilinearly along each segment."""
    mask = np.zeros((height, width), dtype=np.float64)
    stream = SeededStream(seed)
    starts = stream.uniform(2 * streak_count).reshape(streak_count, 2)
    x0 = starts[:, 0] * width
    y0 = starts[:, 1] * height
    theta = math.radians(angle_deg)
    n = 2 * math.ceil(length_px) + 1
    t = np.linspace(0.0, 1.0, n)
    xs = (x0[:, None] + t[None, :] * math.sin(theta) * length_px).ravel() - 0.5
    ys = (y0[:, None] + t[None, :] * math.cos(theta) * length_px).ravel() - 0.5
    step = length_px / (n - 1)

    xf = np.floor(xs)
    yf = np.floor(ys)
    fx = xs - xf
    fy = ys - yf
    xi = xf.astype(np.int64)
    yi = yf.astype(np.int64)
    for ox, oy, w in (
        (0, 0, (1 - fx) * (1 - fy)),
        (1, 0, fx * (1 - fy)),
        (0, 1, (1 - fx) * fy),
        (1, 1, fx * fy),
    ):
        cx, cy = xi + ox, yi + oy
        inside = (cx >= 0) & (cx < width) & (cy >= 0) & (cy < height)
        np.add.at(mask, (cy[inside], cx[inside]), w[inside] * step)
    return np.clip(mask, 0.0, 1.0)


def rain(
    image: RasterImage,
    streak_count: int,
    length_px: float,
    angle_deg: float,
    alpha: float,
    seed: int,
) -> RasterImage:
    """Bright seeded streaks alpha-blended over the image, then blur(0.5)."""
    if streak_count < 0:
        raise ValidationError(f"streak count {streak_count} < 0")
    if not 0.0 <= alpha <= 1.0:
        raise ValidationError(f"rain alpha {alpha} outside [0,1]")
    if length_px < 0:
        raise ValidationError(f"streak length {length_px} < 0")
    streaked = image
    if streak_count > 0 and alpha > 0 and length_px > 0:
        mask = _streak_mask(image.width, image.height, streak_count, length_px, angle_deg, seed)
        cover = alpha * mask[..., None]
        streaked = RasterImage.from_float(image.as_float() * (1.0 - cover) + RAIN_LEVEL * cover)
    return blur(streaked, RAIN_BLUR_SIGMA)


def seasonal(image: RasterImage, temp_shift: float) -> RasterImage:
    """Color temperature shift: R*(1+0.3t), B*(1-0.3t), G untouched."""
    if not -1.0 <= temp_shift <= 1.0:
        raise ValidationError(f"temperature shift {temp_shift} outside [-1,1]")
    if temp_shift == 0.0:
        return image
    gains = np.array([1.0 + SEASONAL_GAIN * temp_shift, 1.0, 1.0 - SEASONAL_GAIN * temp_shift])
    return RasterImage.from_float(image.as_float() * gains)


def sensor_noise(
    image: RasterImage,
    noise_sigma: float,
    defocus_sigma: float,
    seed: int,
) -> RasterImage:
    """Additive seeded Gaussian noise (8-bit LSB units), then defocus blur."""
    if noise_sigma < 0 or defocus_sigma < 0:
        raise ValidationError("noise and defocus sigmas must be >= 0")
    noisy = image
    if noise_sigma > 0:
        h, w = image.height, image.width
        noise = SeededStream(seed).normal(h * w * 3).reshape(h, w, 3) * noise_sigma
        noisy = RasterImage.from_float(image.as_float() + noise)
    return blur(noisy, defocus_sigma)
