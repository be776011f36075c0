"""Pooled per-channel intensity histograms of image sets."""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from app.core.config import settings
from app.core.exceptions import ParseError, ValidationError
from app.drift.image import RasterImage, read_image

CHANNELS = ("R", "G", "B")
_HEADER = "# driftbench-histogram"


@dataclass(frozen=True, eq=False)
class HistogramSummary:
    """Normalized (3, bins) histograms plus per-channel mean/std over all pooled pixels."""

    hist: np.ndarray
    mean: np.ndarray
    std: np.ndarray
    image_count: int
    pixel_count: int

    @property
    def bins(self) -> int:
        return int(self.hist.shape[1])

    @property
    def bin_width(self) -> float:
        return 256.0 / self.bins

    def bin_centers(self) -> np.ndarray:
        return self.bin_width * (np.arange(self.bins) + 0.5)


def _check_bins(bins: int) -> None:
    if bins < 1 or 256 % bins != 0:
        raise ValidationError(f"bin count {bins} must divide 256")


def summarize_image(image: RasterImage, bins: int | None = None) -> HistogramSummary:
    bins = bins or settings.hist_bins
    _check_bins(bins)
    px = image.pixels.reshape(-1, 3)
    idx = px.astype(np.int64) * bins // 256
    counts = np.stack([np.bincount(idx[:, c], minlength=bins) for c in range(3)]).astype(np.float64)
    n = px.shape[0]
    values = px.astype(np.float64)
    return HistogramSummary(
        hist=counts / n,
        mean=values.mean(axis=0),
        std=values.std(axis=0),
        image_count=1,
        pixel_count=n,
    )


def merge_summaries(summaries: list[HistogramSummary]) -> HistogramSummary:
    """Pixel-count weighted merge; equal to summarizing the pooled pixels."""
    if not summaries:
        raise ValidationError("nothing to merge")
    bins = {s.bins for s in summaries}
    if len(bins) != 1:
        raise ValidationError(f"mismatched bin counts {sorted(bins)}")
    weights = np.array([s.pixel_count for s in summaries], dtype=np.float64)
    total = weights.sum()
    w = weights / total
    hist = sum(wi * s.hist for wi, s in zip(w, summaries))
    mean = sum(wi * s.mean for wi, s in zip(w, summaries))
    second = sum(wi * (s.std**2 + s.mean**2) for wi, s in zip(w, summaries))
    std = np.sqrt(np.maximum(second - mean**2, 0.0))
    return HistogramSummary(
        hist=hist,
        mean=mean,
        std=std,
        image_count=sum(s.image_count for s in summaries),
        pixel_count=int(total),
    )


def dataset_summary(
    image_paths: list[Path],
    bins: int | None = None,
    workers: int | None = None,
) -> HistogramSummary:
    """Summarize images in parallel and merge in path order."""
    if not image_paths:
        raise ValidationError("empty split: no images to summarize")
    with ThreadPoolExecutor(max_workers=workers or settings.workers) as pool:
        parts = list(pool.map(lambda p: summarize_image(read_image(p), bins), image_paths))
    return merge_summaries(parts)


def format_summary(summary: HistogramSummary) -> str:
    """Text cache: header, mean/std lines, then one line per bin."""
    lines = [
        f"{_HEADER} bins={summary.bins} images={summary.image_count} pixels={summary.pixel_count}",
        "mean " + " ".join(repr(float(v)) for v in summary.mean),
        "std " + " ".join(repr(float(v)) for v in summary.std),
    ]
    for k in range(summary.bins):
        lines.append(f"{k} " + " ".join(repr(float(v)) for v in summary.hist[:, k]))
    return "\n".join(lines) + "\n"


def parse_summary(text: str) -> HistogramSummary:
    lines = text.splitlines()
    if not lines or not lines[0].startswith(_HEADER):
        raise ParseError("missing histogram header", 1)
    try:
        fields = dict(token.split("=", 1) for token in lines[0][len(_HEADER):].split())
        bins, images, pixels = int(fields["bins"]), int(fields["images"]), int(fields["pixels"])
    except (KeyError, ValueError):
        raise ParseError("malformed histogram header", 1) from None
    _check_bins(bins)
    if len(lines) != 3 + bins:
        raise ParseError(f"expected {bins} bin lines, got {len(lines) - 3}", len(lines))

    def row(line_no: int, label: str) -> np.ndarray:
        parts = lines[line_no - 1].split()
        if len(parts) != 4 or parts[0] != label:
            raise ParseError(f"expected '{label} r g b'", line_no)
        try:
            return np.array([float(v) for v in parts[1:]])
        except ValueError:
            raise ParseError("malformed number", line_no) from None

    mean = row(2, "mean")
    std = row(3, "std")
    hist = np.stack([row(4 + k, str(k)) for k in range(bins)], axis=1)
    return HistogramSummary(hist=hist, mean=mean, std=std, image_count=images, pixel_count=pixels)
