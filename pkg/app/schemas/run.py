"""Run configuration schemas, one per command.

Validation happens before any work starts: referenced files and directories
must exist and the output directory must be creatable.
"""

import os
from pathlib import Path

from pydantic import BaseModel, Field, field_validator, model_validator

from app.core.config import settings
from app.core.exceptions import ValidationError
from app.dataset.split import validate_ratios


def _existing_file(v: Path) -> Path:
    if not v.is_file():
        raise ValueError(f"file not found: {v}")
    return v


def _existing_dir(v: Path) -> Path:
    if not v.is_dir():
        raise ValueError(f"directory not found: {v}")
    return v


def _writable_out(v: Path) -> Path:
    existing = v
    while not existing.exists():
        if existing.parent == existing:
            break
        existing = existing.parent
    if existing.exists() and not existing.is_dir():
        raise ValueError(f"output path is not a directory: {existing}")
    if existing.exists() and not os.access(existing, os.W_OK):
        raise ValueError(f"output directory not writable: {existing}")
    return v


class RunConfig(BaseModel):
    """Common output settings."""

    out: Path
    force: bool = False

    check_out = field_validator("out")(_writable_out)


class DatasetInput(BaseModel):
    """Either a manifest split or a flat images/ + labels/ directory with classes.txt."""

    manifest: Path | None = None
    split: str | None = None
    source: Path | None = None

    @model_validator(mode="after")
    def one_location(self) -> "DatasetInput":
        if (self.manifest is None) == (self.source is None):
            raise ValueError("give exactly one of --manifest or --source")
        if self.manifest is not None:
            _existing_file(self.manifest)
            if self.split not in ("train", "val", "test"):
                raise ValueError("--split must be train, val or test with --manifest")
        if self.source is not None:
            _existing_dir(self.source)
        return self


class SplitRunConfig(RunConfig):
    """cmd_split: flat dataset -> train/val/test trees."""

    source: Path
    ratios: tuple[float, float, float] = (0.8, 0.2, 0.0)
    seed: int = Field(default_factory=lambda: settings.seed)
    link: bool = False

    check_source = field_validator("source")(_existing_dir)

    @field_validator("ratios")
    @classmethod
    def ratios_valid(cls, v: tuple[float, float, float]) -> tuple[float, float, float]:
        try:
            return validate_ratios(v)
        except ValidationError as e:
            raise ValueError(str(e)) from None


class DriftRunConfig(RunConfig):
    """cmd_drift: one dataset location through a spec pipeline."""

    dataset: DatasetInput
    spec: Path
    seed: int = Field(default_factory=lambda: settings.seed)

    check_spec = field_validator("spec")(_existing_file)


class EvalRunConfig(RunConfig):
    """cmd_eval: ground truth of one location against a predictions directory."""

    dataset: DatasetInput
    preds: Path
    conf: float = Field(default_factory=lambda: settings.conf_threshold, ge=0.0, le=1.0)
    sweep: bool = False
    name: str = Field(default="run", min_length=1)

    @field_validator("preds")
    @classmethod
    def preds_dir(cls, v: Path) -> Path:
        # a missing predictions directory is an empty one
        if v.exists() and not v.is_dir():
            raise ValueError(f"predictions path is not a directory: {v}")
        return v


class CompareRunConfig(BaseModel):
    """cmd_compare: two metrics.json files, optional outputs."""

    reports: tuple[Path, Path]
    labels: tuple[str, str] | None = None
    out: Path | None = None
    pdf: bool = False
    force: bool = False

    @field_validator("reports")
    @classmethod
    def reports_exist(cls, v: tuple[Path, Path]) -> tuple[Path, Path]:
        return (_existing_file(v[0]), _existing_file(v[1]))

    @model_validator(mode="after")
    def pdf_needs_out(self) -> "CompareRunConfig":
        if self.pdf and self.out is None:
            raise ValueError("--pdf requires --out")
        if self.out is not None:
            _writable_out(self.out)
        return self


class DriftScoreRunConfig(BaseModel):
    """cmd_driftscore: two dataset directories or cached summaries."""

    a: Path
    b: Path
    bins: int = Field(default_factory=lambda: settings.hist_bins)
    out: Path | None = None
    force: bool = False

    @field_validator("a", "b")
    @classmethod
    def input_exists(cls, v: Path) -> Path:
        if not v.exists():
            raise ValueError(f"not found: {v}")
        return v

    @model_validator(mode="after")
    def out_ok(self) -> "DriftScoreRunConfig":
        if self.out is not None:
            _writable_out(self.out)
        return self


class FuseRunConfig(RunConfig):
    """cmd_fuse: clean + drifted flat datasets -> one fusion dataset."""

    clean: Path
    drifted: Path
    link: bool = False

    check_inputs = field_validator("clean", "drifted")(_existing_dir)


class DemoRunConfig(RunConfig):
    """cmd_demo: synthetic clean-vs-drifted run of the baseline detector."""

    images: int = Field(default=48, ge=4)
    seed: int = Field(default_factory=lambda: settings.seed)
    top_k: int = Field(default_factory=lambda: settings.baseline_top_k, ge=1)
