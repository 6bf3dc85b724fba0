import typer

from . import analysis, census, construct, dimension, orbit, utils

app = typer.Typer(no_args_is_help=True, add_completion=False)

for module in (orbit, analysis, census, construct, dimension):
    app.registered_commands.extend(module.app.registered_commands)


@app.callback()
def main(verbose: bool = typer.Option(False, *utils.FLAGS["verbose"], help="Logs debug output to stderr")):
    """Exact cycles, degrees and box counts of the d-map x -> dx (mod 1)"""
    utils.setup_logging(verbose)
