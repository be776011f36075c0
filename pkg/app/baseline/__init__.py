"""Demo stand-in detector and synthetic sign data."""

from app.baseline.detector import BaselineModel, build_templates, detect
from app.baseline.synthetic import generate_sample, synthetic_dataset

__all__ = ["BaselineModel", "build_templates", "detect", "generate_sample", "synthetic_dataset"]
