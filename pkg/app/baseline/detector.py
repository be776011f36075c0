"""Toy color-histogram detector used by the demo.

Templates are mean per-channel color histograms of the ground-truth crops of
each class. Detection slides windows at three scales of the median template
size, scores each window by histogram intersection with every template and
calibrates the score against the whole image's similarity to the same template,
so windows that merely look like the background score near zero.
"""

from dataclasses import dataclass

import numpy as np

from app.core.config import settings
from app.core.exceptions import ValidationError
from app.dataset.types import NormBox, Prediction
from app.drift.image import RasterImage

HIST_BINS = 16
SCALES = (0.5, 1.0, 2.0)
SUPPRESS_OVERLAP = 0.5


@dataclass(frozen=True, eq=False)
class BaselineModel:
    """Per-class template histograms (C, 3, HIST_BINS) and the base window size in pixels."""

    class_ids: tuple[int, ...]
    templates: np.ndarray
    window_w: float
    window_h: float


def color_histogram(pixels: np.ndarray) -> np.ndarray:
    """Per-channel normalized histogram, shape (3, HIST_BINS)."""
    flat = pixels.reshape(-1, 3).astype(np.int64) * HIST_BINS // 256
    counts = np.stack([np.bincount(flat[:, c], minlength=HIST_BINS) for c in range(3)])
    return counts / max(1, flat.shape[0])


def _crop(image: RasterImage, box: NormBox) -> np.ndarray:
    x1, y1, x2, y2 = box.corners()
    w, h = image.width, image.height
    c1, c2 = int(round(x1 * w)), int(round(x2 * w))
    r1, r2 = int(round(y1 * h)), int(round(y2 * h))
    return image.pixels[max(r1, 0) : max(r2, r1 + 1), max(c1, 0) : max(c2, c1 + 1)]


def build_templates(samples: list[tuple[RasterImage, list[NormBox]]]) -> BaselineModel:
    """Average crop histograms per class from labelled training images."""
    hists: dict[int, list[np.ndarray]] = {}
    widths: list[float] = []
    heights: list[float] = []
    for image, boxes in samples:
        for box in boxes:
            crop = _crop(image, box)
            if crop.size == 0:
                continue
            hists.setdefault(box.class_id, []).append(color_histogram(crop))
            widths.append(box.w * image.width)
            heights.append(box.h * image.height)
    if not hists:
        raise ValidationError("no templates for any class")
    ids = tuple(sorted(hists))
    templates = np.stack([np.mean(hists[c], axis=0) for c in ids])
    return BaselineModel(ids, templates, float(np.median(widths)), float(np.median(heights)))


def _integral_histogram(image: RasterImage) -> np.ndarray:
    h, w = image.height, image.width
    idx = image.pixels.astype(np.int64) * HIST_BINS // 256
    onehot = np.zeros((h + 1, w + 1, 3, HIST_BINS), dtype=np.float64)
    rows, cols = np.meshgrid(np.arange(h), np.arange(w), indexing="ij")
    for c in range(3):
        onehot[rows + 1, cols + 1, c, idx[..., c]] = 1.0
    return onehot.cumsum(axis=0).cumsum(axis=1)


def _similarity(hists: np.ndarray, templates: np.ndarray) -> np.ndarray:
    """Histogram intersection averaged over channels: (N, 3, B) x (C, 3, B) -> (N, C)."""
    return np.minimum(hists[:, None], templates[None]).sum(axis=-1).mean(axis=-1)


def _overlap_of_smaller(a: tuple[float, ...], b: tuple[float, ...]) -> float:
    iw = min(a[2], b[2]) - max(a[0], b[0])
    ih = min(a[3], b[3]) - max(a[1], b[1])
    if iw <= 0 or ih <= 0:
        return 0.0
    smaller = min((a[2] - a[0]) * (a[3] - a[1]), (b[2] - b[0]) * (b[3] - b[1]))
    return iw * ih / smaller


def detect(image: RasterImage, model: BaselineModel, top_k: int | None = None) -> list[Prediction]:
    """Top-k calibrated window detections after overlap suppression."""
    top_k = top_k or settings.baseline_top_k
    h, w = image.height, image.width
    integral = _integral_histogram(image)
    background = _similarity(color_histogram(image.pixels)[None], model.templates)[0]
    headroom = 1.0 - background

    candidates: list[tuple[float, int, int, int, int, int]] = []
    for scale in SCALES:
        ww = max(2, int(round(model.window_w * scale)))
        wh = max(2, int(round(model.window_h * scale)))
        if ww > w or wh > h:
            continue
        sx = max(1, ww // 2)
        sy = max(1, wh // 2)
        ys, xs = np.meshgrid(np.arange(0, h - wh + 1, sy), np.arange(0, w - ww + 1, sx), indexing="ij")
        y1, x1 = ys.ravel(), xs.ravel()
        y2, x2 = y1 + wh, x1 + ww
        window = integral[y2, x2] - integral[y1, x2] - integral[y2, x1] + integral[y1, x1]
        sims = _similarity(window / float(ww * wh), model.templates)
        conf = np.where(headroom > 1e-9, (sims - background) / np.maximum(headroom, 1e-9), 0.0)
        best = conf.argmax(axis=1)
        best_conf = np.clip(conf[np.arange(len(best)), best], 0.0, 1.0)
        for k in np.nonzero(best_conf > 0.0)[0]:
            candidates.append((float(best_conf[k]), int(best[k]), int(x1[k]), int(y1[k]), ww, wh))

    candidates.sort(key=lambda c: (-c[0], -(c[4] * c[5]), c[3], c[2]))
    kept: list[tuple[float, int, tuple[float, ...]]] = []
    for conf, cls_idx, x, y, ww, wh in candidates:
        rect = (x, y, x + ww, y + wh)
        if any(_overlap_of_smaller(rect, other) > SUPPRESS_OVERLAP for _, _, other in kept):
            continue
        kept.append((conf, cls_idx, rect))
        if len(kept) >= top_k:
            break

    return [
        Prediction(
            box=NormBox.from_corners(model.class_ids[cls_idx], r[0] / w, r[1] / h, r[2] / w, r[3] / h),
            confidence=conf,
        )
        for conf, cls_idx, r in kept
    ]
