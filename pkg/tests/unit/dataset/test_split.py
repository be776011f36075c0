"""Tests for seeded train/val/test splitting."""

import math
import random

import pytest

from app.core.exceptions import ValidationError
from app.dataset.split import split_dataset, validate_ratios


def _stems(n: int) -> list[str]:
    return [f"img_{i:05d}" for i in range(n)]


def test_split_2017_images() -> None:
    """2,017 images at 0.8/0.2/0 split into 1,613 train and 404 val."""
    a = split_dataset(_stems(2017), (0.8, 0.2, 0.0), seed=0)
    assert (len(a.train), len(a.val), len(a.test)) == (1613, 404, 0)


def test_all_train() -> None:
    """Ratio 1/0/0 puts everything in train."""
    a = split_dataset(_stems(10), (1.0, 0.0, 0.0), seed=3)
    assert len(a.train) == 10
    assert a.val == () and a.test == ()


def test_split_is_deterministic() -> None:
    """Same stems and seed give the same assignment; input order does not matter."""
    stems = _stems(100)
    first = split_dataset(stems, (0.7, 0.2, 0.1), seed=11)
    second = split_dataset(list(reversed(stems)), (0.7, 0.2, 0.1), seed=11)
    assert first == second


def test_seed_changes_assignment() -> None:
    """A different seed shuffles differently."""
    stems = _stems(100)
    assert split_dataset(stems, (0.5, 0.5, 0.0), 1).train != split_dataset(stems, (0.5, 0.5, 0.0), 2).train


def test_partition_and_counts_random_draws() -> None:
    """Over random (N, ratios, seed) draws the splits partition the stems with floor counts."""
    rng = random.Random(99)
    for _ in range(100):
        n = rng.randint(1, 300)
        a, b = sorted(rng.randint(0, 100) for _ in range(2))
        ratios = (a / 100, (b - a) / 100, (100 - b) / 100)
        seed = rng.randint(0, 2**63)
        stems = _stems(n)
        result = split_dataset(stems, ratios, seed)

        together = [*result.train, *result.val, *result.test]
        assert sorted(together) == stems
        assert len(result.train) == math.floor(ratios[0] * n + 1e-9)
        if ratios[2] > 0:
            assert len(result.train) + len(result.val) == math.floor((ratios[0] + ratios[1]) * n + 1e-9)
        else:
            assert result.test == ()
        assert result == split_dataset(stems, ratios, seed)


def test_split_of_maps_every_stem() -> None:
    """split_of covers every stem exactly once."""
    a = split_dataset(_stems(20), (0.5, 0.25, 0.25), seed=5)
    owner = a.split_of()
    assert len(owner) == 20
    assert sum(1 for s in owner.values() if s == "val") == len(a.val)


@pytest.mark.parametrize("ratios", [(0.5, 0.5, 0.5), (-0.1, 0.6, 0.5), (0.5, 0.5)])
def test_invalid_ratios(ratios: tuple[float, ...]) -> None:
    """Ratios must be three non-negative values summing to 1."""
    with pytest.raises(ValidationError):
        validate_ratios(ratios)


def test_empty_and_duplicate_stems() -> None:
    """Empty stem lists and duplicate stems are rejected."""
    with pytest.raises(ValidationError):
        split_dataset([], (1.0, 0.0, 0.0), 0)
    with pytest.raises(ValidationError):
        split_dataset(["a", "a"], (1.0, 0.0, 0.0), 0)
