"""Augmentation and drift injection with box-consistent geometry."""

from app.drift.geometry import TransformResult, mirror_h, rotate
from app.drift.image import RasterImage, read_image, write_image
from app.drift.photometric import Glare, blur, fog, illumination, rain, seasonal, sensor_noise
from app.drift.pipeline import apply_pipeline
from app.drift.specs import DriftKind, DriftSpec, parse_spec_file

__all__ = [
    "RasterImage",
    "read_image",
    "write_image",
    "TransformResult",
    "mirror_h",
    "rotate",
    "Glare",
    "blur",
    "illumination",
    "fog",
    "rain",
    "seasonal",
    "sensor_noise",
    "DriftKind",
    "DriftSpec",
    "parse_spec_file",
    "apply_pipeline",
]
