from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field, model_validator

from config import WORK_LIMIT


class Subcommand(str, Enum):
    orbit = "orbit"
    degree = "degree"
    portrait = "portrait"
    partition = "partition"
    enumerate = "enumerate"
    census = "census"
    construct = "construct"
    reconstruct = "reconstruct"
    dimension = "dimension"
    cover = "cover"


class OutputFormat(str, Enum):
    json = "json"
    jsonl = "jsonl"
    csv = "csv"
    table = "table"


class RunConfig(BaseModel):
    subcommand: Subcommand
    base: int = Field(ge=2)
    output_format: OutputFormat = OutputFormat.json
    work_limit: Optional[int] = Field(None, gt=0)
    shard_index: int = Field(0, ge=0)
    shard_count: int = Field(1, ge=1)
    workers: int = Field(1, ge=1)

    @model_validator(mode="after")
    def validate_shards(self):
        if self.shard_index >= self.shard_count:
            raise ValueError(f"shard index {self.shard_index} must be below shard count {self.shard_count}")
        return self

    @property
    def effective_work_limit(self) -> int:
        return self.work_limit or WORK_LIMIT
