"""Left-to-right composition of drift transforms."""

from app.core.prng import derive_seed
from app.dataset.types import NormBox
from app.drift.geometry import TransformResult, mirror_h, rotate
from app.drift.image import RasterImage
from app.drift.photometric import Glare, blur, fog, illumination, rain, seasonal, sensor_noise
from app.drift.specs import DriftKind, DriftSpec


def apply_spec(
    image: RasterImage,
    boxes: list[NormBox],
    spec: DriftSpec,
    seed: int,
) -> TransformResult:
    """Apply one transform; ``seed`` is the already-derived per-image seed."""
    p = spec.params
    match spec.kind:
        case DriftKind.MIRROR_H:
            return mirror_h(image, boxes)
        case DriftKind.ROTATE:
            return rotate(image, boxes, p.angle, p.fill, p.drop)
        case DriftKind.BLUR:
            out = blur(image, p.sigma)
        case DriftKind.ILLUMINATION:
            glare = Glare(**p.glare.model_dump()) if p.glare is not None else None
            out = illumination(image, p.gamma, p.gain, glare)
        case DriftKind.FOG:
            out = fog(image, p.density)
        case DriftKind.RAIN:
            out = rain(image, p.count, p.length, p.angle, p.alpha, seed)
        case DriftKind.SEASONAL:
            out = seasonal(image, p.shift)
        case DriftKind.SENSOR_NOISE:
            out = sensor_noise(image, p.sigma, p.defocus, seed)
    return TransformResult(image=out, boxes=list(boxes), dropped=0)


def apply_pipeline(
    image: RasterImage,
    boxes: list[NormBox],
    specs: list[DriftSpec],
    stem: str = "",
) -> TransformResult:
    """Apply specs in order; stochastic steps use derive_seed(spec.seed, stem, index)."""
    current = TransformResult(image=image, boxes=list(boxes), dropped=0)
    for index, spec in enumerate(specs):
        step = apply_spec(current.image, current.boxes, spec, derive_seed(spec.seed, stem, index))
        current = TransformResult(
            image=step.image,
            boxes=step.boxes,
            dropped=current.dropped + step.dropped,
        )
    return current


def is_photometric_only(specs: list[DriftSpec]) -> bool:
    return not any(spec.is_geometric for spec in specs)
