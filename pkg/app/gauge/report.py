"""Drift report between two histogram summaries."""

from dataclasses import dataclass, field

from pydantic import BaseModel, ConfigDict, Field

from app.core.config import settings
from app.core.exceptions import ValidationError
from app.gauge.histogram import CHANNELS, HistogramSummary
from app.gauge.scores import js_divergence, psi, wasserstein1d

SCORES = ("psi", "jsd", "w1")


class DriftThresholds(BaseModel):
    """A score above its threshold raises the drift flag."""

    model_config = ConfigDict(frozen=True)

    psi: float = Field(default_factory=lambda: settings.psi_threshold, ge=0.0)
    jsd: float = Field(default_factory=lambda: settings.jsd_threshold, ge=0.0)
    w1: float = Field(default_factory=lambda: settings.w1_threshold, ge=0.0)


@dataclass
class DriftReport:
    """Per-channel scores, channel means and flags on the means."""

    per_channel: dict[str, dict[str, float]]
    aggregate: dict[str, float]
    flags: dict[str, bool]
    thresholds: DriftThresholds
    images_a: int = 0
    images_b: int = 0
    channel_flags: dict[str, dict[str, bool]] = field(default_factory=dict)

    @property
    def drifted(self) -> bool:
        return any(self.flags.values())


def drift_report(
    a: HistogramSummary,
    b: HistogramSummary,
    thresholds: DriftThresholds | None = None,
) -> DriftReport:
    """Score every channel, average over channels and flag scores above thresholds."""
    thresholds = thresholds or DriftThresholds()
    if a.bins != b.bins:
        raise ValidationError(f"mismatched bin config: {a.bins} vs {b.bins} bins")
    centers = a.bin_centers()
    per_channel: dict[str, dict[str, float]] = {}
    for c, name in enumerate(CHANNELS):
        p, q = a.hist[c], b.hist[c]
        per_channel[name] = {
            "psi": psi(p, q),
            "jsd": js_divergence(p, q),
            "w1": wasserstein1d(p, q, centers),
        }
    limits = thresholds.model_dump()
    aggregate = {s: sum(per_channel[ch][s] for ch in CHANNELS) / len(CHANNELS) for s in SCORES}
    return DriftReport(
        per_channel=per_channel,
        aggregate=aggregate,
        flags={s: aggregate[s] > limits[s] for s in SCORES},
        thresholds=thresholds,
        images_a=a.image_count,
        images_b=b.image_count,
        channel_flags={ch: {s: per_channel[ch][s] > limits[s] for s in SCORES} for ch in CHANNELS},
    )


def report_rows(report: DriftReport) -> list[tuple[str, str, float, bool]]:
    """(channel, score, value, flag) rows; the channel mean is labelled 'mean'."""
    rows = []
    for ch in CHANNELS:
        for s in SCORES:
            rows.append((ch, s, report.per_channel[ch][s], report.channel_flags[ch][s]))
    for s in SCORES:
        rows.append(("mean", s, report.aggregate[s], report.flags[s]))
    return rows
