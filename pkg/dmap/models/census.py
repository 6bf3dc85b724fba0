from typing import List

from pydantic import BaseModel

from dmap.enumeration import CensusRow
from dmap.numerics import format_rational

CENSUS_SCHEMA_VERSION = 1


class CensusCsvRow(BaseModel):
    schema_version: int = CENSUS_SCHEMA_VERSION
    d: int
    n: int
    m: int
    count: int
    bound: int
    ratio: str

    @classmethod
    def header(cls) -> List[str]:
        return list(cls.model_fields)

    def values(self) -> List[str]:
        return [str(value) for value in self.model_dump().values()]


def census_rows(row: CensusRow) -> List[CensusCsvRow]:
    ratios = row.bound_ratio
    return [
        CensusCsvRow(
            d=row.d, n=row.n, m=m, count=count,
            bound=row.bound(m), ratio=format_rational(ratios[m]) if m in ratios else ""
        )
        for m, count in sorted(row.counts_by_degree.items())
    ]
