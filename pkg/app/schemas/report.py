"""Metrics report schemas (the eval output and compare input)."""

from typing import Annotated

from pydantic import BaseModel, Field

from app.evaluation.types import ClassMetrics, EvalConfig, MetricsReport, OperatingPoint

UnitFloat = Annotated[float, Field(ge=0.0, le=1.0)]


class ClassMetricsSchema(BaseModel):
    """One per-class (or macro) row."""

    name: str = Field(..., min_length=1)
    num_gt: int = Field(default=0, ge=0)
    num_pred: int = Field(default=0, ge=0)
    precision: UnitFloat
    recall: UnitFloat
    f1: UnitFloat
    map50: UnitFloat
    map50_95: UnitFloat
    evaluable: bool = True

    @classmethod
    def from_metrics(cls, row: ClassMetrics) -> "ClassMetricsSchema":
        return cls(
            name=row.name,
            num_gt=row.num_gt,
            num_pred=row.num_pred,
            precision=row.precision,
            recall=row.recall,
            f1=row.f1,
            map50=row.map50,
            map50_95=row.map50_95,
            evaluable=row.evaluable,
        )


class OperatingPointSchema(BaseModel):
    """Max-F1 operating point from --sweep."""

    conf_threshold: UnitFloat
    precision: UnitFloat
    recall: UnitFloat
    f1: UnitFloat

    @classmethod
    def from_point(cls, point: OperatingPoint) -> "OperatingPointSchema":
        return cls(
            conf_threshold=point.conf_threshold,
            precision=point.precision,
            recall=point.recall,
            f1=point.f1,
        )


class MetricsReportSchema(BaseModel):
    """metrics.json: run name, evaluated split, config, per-class rows and the macro row."""

    name: str = Field(..., min_length=1)
    split: str = ""
    config: EvalConfig = Field(default_factory=EvalConfig)
    classes: list[ClassMetricsSchema] = Field(default_factory=list)
    macro: ClassMetricsSchema
    best_f1: OperatingPointSchema | None = None

    @classmethod
    def from_report(cls, report: MetricsReport, name: str, split: str = "") -> "MetricsReportSchema":
        return cls(
            name=name,
            split=split,
            config=report.config,
            classes=[ClassMetricsSchema.from_metrics(r) for r in report.classes],
            macro=ClassMetricsSchema.from_metrics(report.macro),
            best_f1=OperatingPointSchema.from_point(report.best_f1) if report.best_f1 else None,
        )

    def headline(self) -> tuple[float, float, float, float, float]:
        """Macro (precision, recall, f1, mAP50, mAP50-95)."""
        m = self.macro
        return (m.precision, m.recall, m.f1, m.map50, m.map50_95)
