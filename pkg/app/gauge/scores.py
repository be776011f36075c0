"""Histogram divergence scores: PSI, Jensen-Shannon, Wasserstein-1."""

import numpy as np
from scipy.stats import entropy, wasserstein_distance

from app.core.exceptions import ValidationError

SMOOTHING_EPS = 1e-6


def _pair(p: np.ndarray, q: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    p = np.asarray(p, dtype=np.float64)
    q = np.asarray(q, dtype=np.float64)
    if p.shape != q.shape or p.ndim != 1:
        raise ValidationError(f"bin count mismatch: {p.shape} vs {q.shape}")
    return p, q


def smooth(h: np.ndarray, eps: float = SMOOTHING_EPS) -> np.ndarray:
    """Replace zero bins with eps and renormalize."""
    out = np.where(h > 0, h, eps)
    return out / out.sum()


def psi(p: np.ndarray, q: np.ndarray) -> float:
    """Population stability index: sum (p - q) * ln(p / q) on smoothed histograms."""
    p, q = _pair(p, q)
    ps, qs = smooth(p), smooth(q)
    return float(np.sum((ps - qs) * np.log(ps / qs)))


def js_divergence(p: np.ndarray, q: np.ndarray) -> float:
    """Jensen-Shannon divergence (natural log), in [0, ln 2]."""
    p, q = _pair(p, q)
    ps, qs = smooth(p), smooth(q)
    m = 0.5 * (ps + qs)
    # rounding can leave a tiny negative sum for near-identical inputs
    return float(np.clip(0.5 * (entropy(ps, m) + entropy(qs, m)), 0.0, np.log(2.0)))


def wasserstein1d(p: np.ndarray, q: np.ndarray, bin_centers: np.ndarray) -> float:
    """Earth mover's distance between binned distributions, in intensity levels."""
    p, q = _pair(p, q)
    if len(bin_centers) != len(p):
        raise ValidationError("bin centers do not match histogram length")
    return float(wasserstein_distance(bin_centers, bin_centers, u_weights=p, v_weights=q))
