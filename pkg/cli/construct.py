from typing import Optional

import typer

from dmap.constructors import (ApproximationRequest, approximate_with_cycle, approximation_distance,
                               approximation_word, reconstruct_cycle)
from dmap.degree import DigitPortrait, PartitionSpec
from dmap.models.orbit import ConstructionRecord, CycleRecord
from dmap.models.run import Subcommand
from dmap.numerics import format_rational

from . import utils

app = typer.Typer(no_args_is_help=True)


@app.command(name="construct")
def construct(
    d: int = typer.Option(..., *utils.FLAGS["base"], help="Base of the d-map"),
    digits: str = typer.Option(..., "--digits", help="Digit set b1,b2,... used by the prefix"),
    prefix: str = typer.Option(..., "--prefix", help="Digit word alpha_1...alpha_q to approximate"),
    pad: Optional[int] = typer.Option(
        None, "--pad", help="Block length N, defaults to the smallest valid one"
    )
):
    """
    Builds a cycle of degree m passing within d^-q of 0.prefix

    m is the size of the digit set and q the length of the prefix.
    """
    utils.run_config(subcommand=Subcommand.construct, base=d)
    digit_set = utils.parse_ints(digits, "--digits")
    word = utils.parse_word(prefix, d, "--prefix")
    with utils.domain_errors():
        req = ApproximationRequest(d, tuple(digit_set), word, pad or 0)
        if pad is None:
            req = ApproximationRequest(d, req.digit_set, word, req.min_block_len)
        c, C = approximate_with_cycle(req)
        utils.print_json(ConstructionRecord(
            word=str(approximation_word(req)),
            point=format_rational(c),
            distance=format_rational(approximation_distance(req, c)),
            block_len=req.block_len,
            cycle=CycleRecord.from_cycle(C)
        ))


@app.command(name="reconstruct")
def reconstruct(
    d: int = typer.Option(..., *utils.FLAGS["base"], help="Base of the d-map"),
    m: int = typer.Option(..., *utils.FLAGS["m"], help="Degree of the cycle"),
    n: int = typer.Option(..., *utils.FLAGS["n"], help="Size of the cycle"),
    blocks: str = typer.Option(..., "--blocks", help="Partition blocks, e.g. 3;1,2,4,5"),
    i1: int = typer.Option(..., "--i1", help="First crossing index"),
    portrait: str = typer.Option(..., "--portrait", help="Digit portrait f0,f1,..."),
):
    """
    Recovers the cycle with the given partition, first crossing and portrait

    NOTE: Exits with status 1 when no cycle has this key.
    """
    utils.run_config(subcommand=Subcommand.reconstruct, base=d)
    parsed_blocks = [utils.parse_ints(block, "--blocks") for block in blocks.split(";")]
    values = utils.parse_ints(portrait, "--portrait")
    with utils.domain_errors():
        C = reconstruct_cycle(d, m, n, PartitionSpec(tuple(map(tuple, parsed_blocks)), i1),
                              DigitPortrait(d, tuple(values)))
        if C is None:
            utils.error("No cycle has this partition, first crossing and portrait.")
        utils.print_json(CycleRecord.from_cycle(C))
