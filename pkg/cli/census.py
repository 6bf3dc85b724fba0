from enum import Enum
from functools import reduce
from typing import Optional

import typer
from rich.table import Table

from dmap.degree import degree as crossing_number
from dmap.enumeration import (CensusRow, census as cycle_census, enumerate_cycles, enumerate_precycles,
                              precycle_census)
from dmap.models.census import CensusCsvRow, census_rows
from dmap.models.orbit import CycleRecord, PrecycleRecord
from dmap.models.run import OutputFormat, RunConfig, Subcommand
from dmap.utils.concurrency import run_sharded

from . import utils

app = typer.Typer(no_args_is_help=True)


class EnumerateFormat(str, Enum):
    jsonl = "jsonl"
    csv = "csv"


class CensusFormat(str, Enum):
    csv = "csv"
    jsonl = "jsonl"
    table = "table"


def collect_row(config: RunConfig, n: int, precycles: bool) -> CensusRow:
    """Census of one size, either a single shard or a local pool of `workers` shards."""
    func = precycle_census if precycles else cycle_census
    if config.workers > 1 and config.shard_count == 1:
        parts = run_sharded(func, config.base, n, config.effective_work_limit,
                            shard_count=config.workers, workers=config.workers)
        return reduce(CensusRow.merge, parts)
    return func(config.base, n, config.effective_work_limit, config.shard_index, config.shard_count)


@app.command(name="enumerate")
def enumerate_orbits(
    d: int = typer.Option(..., *utils.FLAGS["base"], help="Base of the d-map"),
    n: int = typer.Option(..., *utils.FLAGS["n"], min=1, help="Orbit size"),
    degree: Optional[int] = typer.Option(None, *utils.FLAGS["degree"], help="Keeps only this degree"),
    precycles: bool = typer.Option(False, *utils.FLAGS["precycles"], help="Enumerates precycles instead"),
    output_format: EnumerateFormat = typer.Option(EnumerateFormat.jsonl, *utils.FLAGS["format"]),
    work_limit: Optional[int] = typer.Option(None, *utils.FLAGS["work_limit"]),
    shard_index: int = typer.Option(0, *utils.FLAGS["shard_index"]),
    shard_count: int = typer.Option(1, *utils.FLAGS["shard_count"])
):
    """
    Lists every n-element cycle of the d-map

    JSON lines of cycle records by default; `--format csv` prints the
    census table of the same size instead.
    """
    config = utils.run_config(
        subcommand=Subcommand.enumerate, base=d, output_format=OutputFormat(output_format.value),
        work_limit=work_limit, shard_index=shard_index, shard_count=shard_count
    )
    with utils.domain_errors():
        if output_format == EnumerateFormat.csv:
            records = census_rows(collect_row(config, n, precycles))
            utils.print_csv(CensusCsvRow.header(), (record.values() for record in records))
            return

        if precycles:
            orbits = enumerate_precycles(d, n, config.effective_work_limit, shard_index, shard_count)
            to_record = PrecycleRecord.from_precycle
        else:
            orbits = enumerate_cycles(d, n, config.effective_work_limit, shard_index, shard_count)
            to_record = CycleRecord.from_cycle

        utils.print_jsonl(
            to_record(C) for C in orbits
            if degree is None or crossing_number(C) == degree
        )


@app.command(name="census")
def census(
    d: int = typer.Option(..., *utils.FLAGS["base"], help="Base of the d-map"),
    n_max: int = typer.Option(..., *utils.FLAGS["n_max"], min=1, help="Largest orbit size"),
    precycles: bool = typer.Option(False, *utils.FLAGS["precycles"], help="Counts precycles instead"),
    output_format: CensusFormat = typer.Option(CensusFormat.csv, *utils.FLAGS["format"]),
    work_limit: Optional[int] = typer.Option(None, *utils.FLAGS["work_limit"]),
    shard_index: int = typer.Option(0, *utils.FLAGS["shard_index"]),
    shard_count: int = typer.Option(1, *utils.FLAGS["shard_count"]),
    workers: int = typer.Option(1, *utils.FLAGS["workers"], help="Local worker processes")
):
    """
    Degree histogram of all cycles of size 1..n-max with bound ratios

    The ratio column is count / (n^(d-m+1) m^(n-1)), or n^(d-m+3) m^(n-1)
    for precycles.

    NOTE: With `--shard-index/--shard-count` only that shard is counted,
      summing the rows of every shard gives the full census.
    """
    config = utils.run_config(
        subcommand=Subcommand.census, base=d, output_format=OutputFormat(output_format.value),
        work_limit=work_limit, shard_index=shard_index, shard_count=shard_count, workers=workers
    )
    with utils.domain_errors():
        rows = [census_rows(collect_row(config, n, precycles)) for n in range(1, n_max + 1)]
        records = [record for row in rows for record in row]

    if output_format == CensusFormat.csv:
        utils.print_csv(CensusCsvRow.header(), (record.values() for record in records))
    elif output_format == CensusFormat.jsonl:
        utils.print_jsonl(records)
    else:
        utils.print_table(
            table=Table("d", "n", "m", "Count", "Bound", "Ratio"),
            rows=[
                (str(r.d), str(r.n), str(r.m), str(r.count), str(r.bound), r.ratio)
                for r in records
            ]
        )
