import typer

from dmap.models.orbit import DegreeRecord, PartitionRecord, PortraitRecord
from dmap.models.run import Subcommand
from dmap.orbits import Orbit, cycle_from_points, precycle_from_points

from . import utils

app = typer.Typer(no_args_is_help=True)


def load_orbit(d: int, cycle: str, precycle: bool) -> Orbit:
    """Builds a cycle from the given points, or a precycle when tolerated."""
    points = utils.parse_points(cycle)
    if precycle:
        return precycle_from_points(points, d)
    return cycle_from_points(points, d)


@app.command(name="degree")
def degree(
    d: int = typer.Option(..., *utils.FLAGS["base"], help="Base of the d-map"),
    cycle: str = typer.Option(..., *utils.FLAGS["cycle"], help="Comma separated points, e.g. 1/5,2/5"),
    precycle: bool = typer.Option(False, *utils.FLAGS["precycle"], help="Accepts precycles as well")
):
    """
    Prints the degree and crossing indices of a cycle

    Also reports the winding number of the piecewise-linear witness map.
    """
    utils.run_config(subcommand=Subcommand.degree, base=d)
    with utils.domain_errors():
        utils.print_json(DegreeRecord.from_orbit(load_orbit(d, cycle, precycle)))


@app.command(name="portrait")
def portrait(
    d: int = typer.Option(..., *utils.FLAGS["base"], help="Base of the d-map"),
    cycle: str = typer.Option(..., *utils.FLAGS["cycle"], help="Comma separated points, e.g. 1/5,2/5"),
    precycle: bool = typer.Option(False, *utils.FLAGS["precycle"], help="Accepts precycles as well")
):
    """Prints the digit portrait F(0), ..., F(d-1) and dig"""
    utils.run_config(subcommand=Subcommand.portrait, base=d)
    with utils.domain_errors():
        utils.print_json(PortraitRecord.from_orbit(load_orbit(d, cycle, precycle)))


@app.command(name="partition")
def partition(
    d: int = typer.Option(..., *utils.FLAGS["base"], help="Base of the d-map"),
    cycle: str = typer.Option(..., *utils.FLAGS["cycle"], help="Comma separated points, e.g. 1/5,2/5"),
    precycle: bool = typer.Option(False, *utils.FLAGS["precycle"], help="Accepts precycles as well")
):
    """
    Prints the partition generated by a cycle

    NOTE: Fixed points have no crossing and therefore no partition.
    """
    utils.run_config(subcommand=Subcommand.partition, base=d)
    with utils.domain_errors():
        utils.print_json(PartitionRecord.from_orbit(load_orbit(d, cycle, precycle)))
