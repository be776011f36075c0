"""Drift transform descriptions and the pipeline spec-file format.

One transform per line: ``<kind> key=value key=value ...``::

    # night drive in the rain
    illumination gamma=1.8 gain=0.6
    rain count=250 length=14 angle=12 alpha=0.5
    rotate angle=12 fill=128,128,128

``#`` starts a comment. ``seed=<int>`` on a line overrides the global seed.
"""

from enum import StrEnum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, SerializeAsAny, field_validator, model_validator
from pydantic import ValidationError as PydanticValidationError

from app.core.config import settings
from app.core.exceptions import ParseError


class DriftKind(StrEnum):
    MIRROR_H = "mirror_h"
    ROTATE = "rotate"
    BLUR = "blur"
    ILLUMINATION = "illumination"
    FOG = "fog"
    RAIN = "rain"
    SEASONAL = "seasonal"
    SENSOR_NOISE = "sensor_noise"


GEOMETRIC_KINDS = frozenset({DriftKind.MIRROR_H, DriftKind.ROTATE})
STOCHASTIC_KINDS = frozenset({DriftKind.RAIN, DriftKind.SENSOR_NOISE})


class _Params(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class MirrorParams(_Params):
    pass


class RotateParams(_Params):
    angle: float = Field(..., gt=-180.0, le=180.0)
    fill: tuple[int, int, int] = Field(default_factory=lambda: settings.fill_rgb)
    drop: float = Field(default_factory=lambda: settings.drop_threshold, ge=0.0, le=1.0)

    @field_validator("fill")
    @classmethod
    def fill_is_8bit(cls, v: tuple[int, int, int]) -> tuple[int, int, int]:
        if any(not 0 <= c <= 255 for c in v):
            raise ValueError("fill components must be in [0, 255]")
        return v


class BlurParams(_Params):
    sigma: float = Field(..., ge=0.0)


class GlareParams(_Params):
    cx: float = Field(..., ge=0.0, le=1.0)
    cy: float = Field(..., ge=0.0, le=1.0)
    rx: float = Field(..., gt=0.0)
    ry: float = Field(..., gt=0.0)
    intensity: float = Field(..., ge=0.0, le=1.0)

    @model_validator(mode="before")
    @classmethod
    def from_sequence(cls, data: Any) -> Any:
        if isinstance(data, (list, tuple)):
            if len(data) != 5:
                raise ValueError("glare needs cx,cy,rx,ry,intensity")
            return dict(zip(("cx", "cy", "rx", "ry", "intensity"), data))
        return data


class IlluminationParams(_Params):
    gamma: float = Field(default=1.0, gt=0.0)
    gain: float = Field(default=1.0, gt=0.0)
    glare: GlareParams | None = None


class FogParams(_Params):
    density: float = Field(..., ge=0.0, le=1.0)


class RainParams(_Params):
    count: int = Field(default=200, ge=0)
    length: float = Field(default=12.0, ge=0.0)
    angle: float = 10.0
    alpha: float = Field(default=0.6, ge=0.0, le=1.0)


class SeasonalParams(_Params):
    shift: float = Field(..., ge=-1.0, le=1.0)


class SensorNoiseParams(_Params):
    sigma: float = Field(default=0.0, ge=0.0)
    defocus: float = Field(default=0.0, ge=0.0)


PARAM_MODELS: dict[DriftKind, type[_Params]] = {
    DriftKind.MIRROR_H: MirrorParams,
    DriftKind.ROTATE: RotateParams,
    DriftKind.BLUR: BlurParams,
    DriftKind.ILLUMINATION: IlluminationParams,
    DriftKind.FOG: FogParams,
    DriftKind.RAIN: RainParams,
    DriftKind.SEASONAL: SeasonalParams,
    DriftKind.SENSOR_NOISE: SensorNoiseParams,
}


class DriftSpec(BaseModel):
    """One seeded, parameterized transform; parameter ranges checked per kind."""

    model_config = ConfigDict(frozen=True)

    kind: DriftKind
    params: SerializeAsAny[_Params]
    seed: int = 0

    @model_validator(mode="before")
    @classmethod
    def build_params(cls, data: Any) -> Any:
        if not isinstance(data, dict) or "kind" not in data:
            return data
        kind = DriftKind(data["kind"])
        params = data.get("params") or {}
        model = PARAM_MODELS[kind]
        if not isinstance(params, model):
            params = model.model_validate(params)
        return {**data, "kind": kind, "params": params}

    @property
    def is_geometric(self) -> bool:
        return self.kind in GEOMETRIC_KINDS

    def to_line(self) -> str:
        parts = [self.kind.value]
        for key, value in self.params.model_dump(exclude_none=True).items():
            if isinstance(value, dict):
                value = ",".join(str(v) for v in value.values())
            elif isinstance(value, (list, tuple)):
                value = ",".join(str(v) for v in value)
            parts.append(f"{key}={value}")
        return " ".join(parts)


def _first_error(e: PydanticValidationError) -> str:
    err = e.errors(include_url=False)[0]
    loc = ".".join(str(p) for p in err["loc"] if p != "params")
    return f"{loc}: {err['msg']}" if loc else err["msg"]


def parse_spec_line(line: str, seed: int, line_no: int = 1) -> DriftSpec | None:
    """Parse one spec line; blank and comment lines give None."""
    text = line.split("#", 1)[0].strip()
    if not text:
        return None
    tokens = text.split()
    try:
        kind = DriftKind(tokens[0])
    except ValueError:
        raise ParseError(f"unknown drift kind {tokens[0]!r}", line_no) from None

    params: dict[str, Any] = {}
    line_seed = seed
    seen_seed = False
    for token in tokens[1:]:
        key, sep, value = token.partition("=")
        if not sep or not key or not value:
            raise ParseError(f"expected key=value, got {token!r}", line_no)
        if key in params or (key == "seed" and seen_seed):
            raise ParseError(f"duplicate parameter {key}", line_no)
        if key == "seed":
            seen_seed = True
            try:
                line_seed = int(value)
            except ValueError:
                raise ParseError(f"invalid seed {value!r}", line_no) from None
            continue
        params[key] = value.split(",") if "," in value else value
    try:
        return DriftSpec(kind=kind, params=params, seed=line_seed)
    except PydanticValidationError as e:
        raise ParseError(f"{kind.value}: {_first_error(e)}", line_no) from None


def parse_spec_file(text: str, seed: int) -> list[DriftSpec]:
    """Parse a pipeline spec file into an ordered transform list."""
    specs: list[DriftSpec] = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        spec = parse_spec_line(line, seed, line_no)
        if spec is not None:
            specs.append(spec)
    return specs
