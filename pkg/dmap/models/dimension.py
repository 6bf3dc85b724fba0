from fractions import Fraction
from math import log
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict

from dmap.dimension import CoverReport, DimensionFit, PrecycleCover
from dmap.numerics import format_rational

SCALE_SCHEMA_VERSION = 1


class ScaleRow(BaseModel):
    schema_version: int = SCALE_SCHEMA_VERSION
    k: int
    N: int
    log_N: float

    @classmethod
    def from_report(cls, report: CoverReport) -> "ScaleRow":
        return cls(k=report.scale_exponent, N=report.box_count, log_N=log(report.box_count))

    @classmethod
    def header(cls) -> List[str]:
        return list(cls.model_fields)

    def values(self) -> List[str]:
        return [str(value) for value in self.model_dump().values()]


class FitSummary(BaseModel):
    beta: float
    intercept: float
    max_residual: float
    scales_used: List[int]

    @classmethod
    def from_fit(cls, fit: DimensionFit) -> "FitSummary":
        return cls(
            beta=fit.beta,
            intercept=fit.intercept,
            max_residual=fit.max_residual,
            scales_used=list(fit.scales_used)
        )


class CoverSummary(BaseModel):
    d: int
    m: int
    n: int
    points: int
    precycles: int
    counts_by_degree: Dict[int, int]
    bound: int
    n_max: Optional[int] = None
    radius: Optional[str] = None

    model_config = ConfigDict(json_schema_extra={
        "example": {
            "d": 2,
            "m": 1,
            "n": 3,
            "points": 14,
            "precycles": 9,
            "counts_by_degree": {"0": 4, "1": 5},
            "bound": 98
        }
    })

    @classmethod
    def from_cover(
        cls, cover: PrecycleCover, n_max: Optional[int] = None, radius: Optional[Fraction] = None
    ) -> "CoverSummary":
        return cls(
            d=cover.base,
            m=cover.max_degree,
            n=cover.max_size,
            points=len(cover.points),
            precycles=cover.count,
            counts_by_degree=cover.counts_by_degree,
            bound=cover.bound,
            n_max=n_max,
            radius=format_rational(radius) if radius is not None else None
        )
