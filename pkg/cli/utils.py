import csv
import logging
import sys
from contextlib import contextmanager
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional

import typer
from pydantic import BaseModel, ValidationError
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from dmap import logger
from dmap.exceptions import DMapError
from dmap.models.run import RunConfig
from dmap.numerics import DigitWord, parse_rational

rich_console = Console()

FLAGS: Dict[str, tuple] = {
    "base": ("--d", "-d"),
    "point": ("--point", "-p"),
    "cycle": ("--cycle", "-c"),
    "precycle": ("--precycle",),
    "precycles": ("--precycles",),
    "n": ("--n", "-n"),
    "n_max": ("--n-max",),
    "degree": ("--degree",),
    "m": ("--m", "-m"),
    "format": ("--format", "-f"),
    "work_limit": ("--work-limit",),
    "shard_index": ("--shard-index",),
    "shard_count": ("--shard-count",),
    "workers": ("--workers", "-w"),
    "verbose": ("--verbose", "-v"),
}


def success(text: str, auto_exit: bool = True):
    typer.echo(typer.style(text, fg=typer.colors.GREEN), err=True)
    if auto_exit:
        raise typer.Exit(0)


def error(text: str, auto_exit: bool = True):
    typer.echo(typer.style(text, fg=typer.colors.RED), err=True)
    if auto_exit:
        raise typer.Exit(1)


def setup_logging(verbose: bool = False):
    for handler in list(logger.handlers):
        if isinstance(handler, RichHandler):
            logger.removeHandler(handler)
    logger.addHandler(RichHandler(console=Console(stderr=True), show_path=False))
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)


@contextmanager
def domain_errors():
    """Reports any DMapError raised inside the block and exits with status 1."""
    try:
        yield
    except DMapError as exc:
        error(exc.details)


def run_config(**kwargs: Any) -> RunConfig:
    try:
        return RunConfig(**kwargs)
    except ValidationError as exc:
        messages = "; ".join(err["msg"] for err in exc.errors())
        raise typer.BadParameter(messages)


def parse_points(text: str, param_hint: str = "--cycle") -> List[Fraction]:
    try:
        return [parse_rational(part) for part in text.split(",") if part.strip()]
    except DMapError as exc:
        raise typer.BadParameter(exc.details, param_hint=param_hint)


def parse_point(text: str, param_hint: str = "--point") -> Fraction:
    try:
        return parse_rational(text)
    except DMapError as exc:
        raise typer.BadParameter(exc.details, param_hint=param_hint)


def parse_ints(text: str, param_hint: str, separator: str = ",") -> List[int]:
    try:
        return [int(part) for part in text.split(separator) if part.strip()]
    except ValueError:
        raise typer.BadParameter(f'"{text}" is not a list of integers', param_hint=param_hint)


def parse_word(text: str, base: int, param_hint: str) -> DigitWord:
    try:
        return DigitWord.parse(text, base)
    except DMapError as exc:
        raise typer.BadParameter(exc.details, param_hint=param_hint)


def print_json(model: BaseModel):
    typer.echo(model.model_dump_json())


def print_jsonl(models: Iterable[BaseModel]):
    for model in models:
        typer.echo(model.model_dump_json())


def print_csv(header: List[str], rows: Iterable[Iterable[Any]]):
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)


def print_table(
    table: Table,
    rows: Iterable[Iterable[Any]],
    console: Optional[Console] = None
):
    for row in rows:
        table.add_row(*row)

    (console or rich_console).print(table)
