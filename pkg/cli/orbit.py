import typer

from dmap.models.orbit import PrecycleRecord
from dmap.models.run import Subcommand
from dmap.orbits import orbit as forward_orbit

from . import utils

app = typer.Typer(no_args_is_help=True)


@app.command(name="orbit")
def orbit(
    d: int = typer.Option(..., *utils.FLAGS["base"], help="Base of the d-map"),
    point: str = typer.Option(..., *utils.FLAGS["point"], help="Rational point as num/den")
):
    """
    Prints the forward orbit of a rational point

    The orbit is reported with its transient (preperiod) and periodic words.
    """
    utils.run_config(subcommand=Subcommand.orbit, base=d)
    x = utils.parse_point(point)
    with utils.domain_errors():
        utils.print_json(PrecycleRecord.from_precycle(forward_orbit(x, d)))
