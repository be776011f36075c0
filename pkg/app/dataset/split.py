"""Seeded train/val/test splitting."""

import math

from app.core.exceptions import ValidationError
from app.core.prng import SeededStream
from app.dataset.types import RATIO_TOL, SplitAssignment

_CUT_SLACK = 1e-9


def validate_ratios(ratios: tuple[float, float, float]) -> tuple[float, float, float]:
    if len(ratios) != 3:
        raise ValidationError("ratios must have three values (train, val, test)")
    if any(r < 0 for r in ratios):
        raise ValidationError(f"negative ratio in {ratios}")
    if abs(sum(ratios) - 1.0) > RATIO_TOL:
        raise ValidationError(f"ratios {ratios} do not sum to 1")
    return (float(ratios[0]), float(ratios[1]), float(ratios[2]))


def split_dataset(
    stems: list[str],
    ratios: tuple[float, float, float],
    seed: int,
) -> SplitAssignment:
    """Shuffle stems with the seeded stream and cut at cumulative floors.

    n_train = floor(r_train * N), n_train + n_val = floor((r_train + r_val) * N),
    the rest is test. Stems are sorted first, so only the stem set matters.
    """
    if not stems:
        raise ValidationError("cannot split an empty stem list")
    if len(set(stems)) != len(stems):
        raise ValidationError("stems must be unique")
    r_train, r_val, r_test = validate_ratios(ratios)

    n = len(stems)
    order = SeededStream(seed).shuffle(sorted(stems))
    cut1 = min(n, math.floor(r_train * n + _CUT_SLACK))
    cut2 = n if r_test == 0 else min(n, math.floor((r_train + r_val) * n + _CUT_SLACK))
    cut2 = max(cut1, cut2)
    return SplitAssignment(
        train=tuple(order[:cut1]),
        val=tuple(order[cut1:cut2]),
        test=tuple(order[cut2:]),
        seed=seed,
        ratios=(r_train, r_val, r_test),
    )
