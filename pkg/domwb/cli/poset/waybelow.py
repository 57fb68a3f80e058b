import logging

import click

from domwb.cli.common import (
    element_argument,
    emit,
    format_option,
    read_poset_argument,
    verbose_option,
)
from domwb.finposet import way_below
from domwb.logs import logging_setup


@click.command(
    name="waybelow",
    help="Decide whether element X is way below element Y.",
    no_args_is_help=True,
)
@verbose_option
@format_option
@click.argument("poset_file", type=str)
@click.argument("x", type=str)
@click.argument("y", type=str)
def waybelow(verbose, fmt, poset_file, x, y):
    logging_setup(verbose)
    _log = logging.getLogger(__name__)

    poset = read_poset_argument(poset_file)
    i, j = element_argument(poset, x), element_argument(poset, y)
    result = way_below(poset, i, j)
    _log.info(f"{x} << {y}: {result}")
    emit(dict(x=x, y=y, way_below=result, leq=poset.le(i, j)), fmt)
