from typing import List, Optional

from pydantic import BaseModel, ConfigDict

from dmap.degree import (crossings, degree, digit_portrait, leading_digits, map_degree, partition_of,
                         witness_map)
from dmap.numerics import format_rational
from dmap.orbits import Cycle, Orbit, Precycle


class PartitionModel(BaseModel):
    blocks: List[List[int]]
    i1: int


class CycleRecord(BaseModel):
    base: int
    n: int
    word: str
    points: List[str]
    sigma: List[int]
    degree: int
    crossings: List[int]
    portrait: List[int]
    dig: int
    partition: Optional[PartitionModel] = None
    model_config = ConfigDict(json_schema_extra={
        "example": {
            "base": 2,
            "n": 3,
            "word": "011",
            "points": ["3/7", "5/7", "6/7"],
            "sigma": [3, 1, 2],
            "degree": 1,
            "crossings": [1],
            "portrait": [1, 3],
            "dig": 2,
            "partition": {"blocks": [[1, 2, 3]], "i1": 1}
        }
    })

    @staticmethod
    def _analysis(C: Orbit) -> dict:
        portrait = digit_portrait(C)
        indices = crossings(C).indices
        partition = None
        if indices:
            spec = partition_of(C)
            partition = PartitionModel(blocks=[list(block) for block in spec.blocks], i1=spec.i1)
        return dict(
            base=C.base,
            n=C.n,
            points=[format_rational(p) for p in C.points],
            sigma=list(C.sigma),
            degree=degree(C),
            crossings=list(indices),
            portrait=list(portrait.values),
            dig=portrait.dig,
            partition=partition
        )

    @classmethod
    def from_cycle(cls, C: Cycle) -> "CycleRecord":
        return cls(word=str(C.word), **cls._analysis(C))


class PrecycleRecord(CycleRecord):
    preperiod: str
    preperiod_len: int
    period_len: int
    is_cycle: bool

    @classmethod
    def from_precycle(cls, P: Precycle) -> "PrecycleRecord":
        return cls(
            word=str(P.period),
            preperiod=str(P.preperiod),
            preperiod_len=P.preperiod_len,
            period_len=P.period_len,
            is_cycle=P.is_cycle,
            **cls._analysis(P)
        )


class DegreeRecord(BaseModel):
    base: int
    n: int
    degree: int
    crossings: List[int]
    witness_degree: Optional[int] = None
    witness_breakpoints: Optional[List[List[str]]] = None
    model_config = ConfigDict(json_schema_extra={
        "example": {
            "base": 3,
            "n": 4,
            "degree": 2,
            "crossings": [1, 3],
            "witness_degree": 2,
            "witness_breakpoints": [["3/10", "0/1"], ["2/5", "1/5"]]
        }
    })

    @classmethod
    def from_orbit(cls, C: Orbit) -> "DegreeRecord":
        record = cls(base=C.base, n=C.n, degree=degree(C), crossings=list(crossings(C).indices))
        if C.n > 1:
            W = witness_map(C)
            record.witness_degree = map_degree(W)
            record.witness_breakpoints = [
                [format_rational(x), format_rational(y)] for x, y in W.breakpoints
            ]
        return record


class PortraitRecord(BaseModel):
    base: int
    n: int
    portrait: List[int]
    dig: int
    leading_digits: List[int]

    @classmethod
    def from_orbit(cls, C: Orbit) -> "PortraitRecord":
        portrait = digit_portrait(C)
        return cls(
            base=C.base, n=C.n, portrait=list(portrait.values),
            dig=portrait.dig, leading_digits=list(leading_digits(C))
        )


class PartitionRecord(PartitionModel):
    base: int
    n: int
    crossings: List[int]

    @classmethod
    def from_orbit(cls, C: Orbit) -> "PartitionRecord":
        spec = partition_of(C)
        return cls(
            base=C.base, n=C.n, blocks=[list(block) for block in spec.blocks],
            i1=spec.i1, crossings=list(crossings(C).indices)
        )


class ConstructionRecord(BaseModel):
    word: str
    point: str
    distance: str
    block_len: int
    cycle: CycleRecord
