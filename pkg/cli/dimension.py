from enum import Enum
from pathlib import Path
from typing import List, Optional

import typer
from pydantic import BaseModel

from dmap.dimension import (build_E_approx, cantor_boxes, fit_dimension, precycle_cover, scale_ladder,
                            unsaturated)
from dmap.models.dimension import CoverSummary, FitSummary, ScaleRow
from dmap.models.run import OutputFormat, Subcommand

from . import utils

app = typer.Typer(no_args_is_help=True)


class Mode(str, Enum):
    cantor = "cantor"
    cycles = "cycles"


class DimensionFormat(str, Enum):
    csv = "csv"
    json = "json"


class DimensionReport(BaseModel):
    scales: List[ScaleRow]
    fit: FitSummary


@app.command(name="dimension")
def dimension(
    mode: Mode = typer.Option(Mode.cantor, "--mode", help="Cantor set A(m, d) or degree-m cycles"),
    d: int = typer.Option(..., *utils.FLAGS["base"], help="Base of the d-map"),
    m: int = typer.Option(..., *utils.FLAGS["m"], help="Digit count or cycle degree"),
    depth: int = typer.Option(10, "--depth", min=1, help="Finest scale k when no k range is given"),
    n_max: int = typer.Option(10, *utils.FLAGS["n_max"], min=1, help="Largest cycle size in cycles mode"),
    k_min: Optional[int] = typer.Option(None, "--k-min", min=0),
    k_max: Optional[int] = typer.Option(None, "--k-max", min=0),
    output_format: DimensionFormat = typer.Option(DimensionFormat.csv, *utils.FLAGS["format"]),
    summary: Optional[Path] = typer.Option(
        None, "--summary", help="Writes the JSON fit summary to this file"
    ),
    work_limit: Optional[int] = typer.Option(None, *utils.FLAGS["work_limit"]),
    workers: int = typer.Option(1, *utils.FLAGS["workers"], help="Local worker processes")
):
    """
    Box counts over d-adic grids and the fitted log-log slope

    In cycles mode, scales where the count saturates are dropped from the
    fit unless `--k-min/--k-max` is given.
    """
    config = utils.run_config(
        subcommand=Subcommand.dimension, base=d, output_format=OutputFormat(output_format.value),
        work_limit=work_limit, workers=workers
    )
    explicit = k_min is not None or k_max is not None
    first, last = k_min if k_min is not None else 1, k_max if k_max is not None else depth
    if first > last:
        raise typer.BadParameter("--k-min must not exceed --k-max")

    with utils.domain_errors():
        if mode == Mode.cantor:
            reports = [cantor_boxes(m, d, k) for k in range(first, last + 1)]
            used = reports
        else:
            points = build_E_approx(d, m, n_max, config.effective_work_limit, config.workers)
            reports = scale_ladder(points, d, last, first)
            used = reports if explicit else unsaturated(reports, len(points))

        rows = [ScaleRow.from_report(report) for report in reports]
        fit = None
        if output_format == DimensionFormat.json or summary:
            fit = FitSummary.from_fit(fit_dimension(used))

    if output_format == DimensionFormat.json:
        utils.print_json(DimensionReport(scales=rows, fit=fit))
    else:
        utils.print_csv(ScaleRow.header(), (row.values() for row in rows))

    if summary:
        summary.write_text(fit.model_dump_json())
        utils.success(f'Fit summary written to "{summary}".', auto_exit=False)


@app.command(name="cover")
def cover(
    d: int = typer.Option(..., *utils.FLAGS["base"], help="Base of the d-map"),
    m: int = typer.Option(..., *utils.FLAGS["m"], help="Largest precycle degree in the cover"),
    n: int = typer.Option(..., *utils.FLAGS["n"], min=1, help="Largest precycle size in the cover"),
    n_max: Optional[int] = typer.Option(
        None, *utils.FLAGS["n_max"], min=1,
        help="Also reports how far the degree-m cycles of size <= n-max lie from the cover"
    ),
    work_limit: Optional[int] = typer.Option(None, *utils.FLAGS["work_limit"]),
    workers: int = typer.Option(1, *utils.FLAGS["workers"], help="Local worker processes")
):
    """
    Covers by precycles of degree <= m and size <= n

    NOTE: `bound` sums the precycle bound over degrees 1..m;
    degree-0 precycles are counted but not bounded.
    """
    config = utils.run_config(
        subcommand=Subcommand.cover, base=d, output_format=OutputFormat.json,
        work_limit=work_limit, workers=workers
    )
    with utils.domain_errors():
        result = precycle_cover(d, m, n, config.effective_work_limit)
        radius = None
        if n_max is not None:
            radius = result.radius(build_E_approx(d, m, n_max, config.effective_work_limit, config.workers))

    utils.print_json(CoverSummary.from_cover(result, n_max, radius))
