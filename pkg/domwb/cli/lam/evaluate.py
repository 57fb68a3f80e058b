import logging

import click

from domwb.cli.common import as_usage_error, emit, format_option, verbose_option
from domwb.cli.lam.terms import read_closed_term
from domwb.cli.tower.options import build_tower_or_fail, levels_option, tab_limit_option
from domwb.errors import DomwbError
from domwb.lam import denote, format_term, has_stabilized
from domwb.logs import logging_setup


@click.command(
    name="eval",
    help=(
        "Denote a closed term at truncation N. TERM is a term such as '\\x.x x' "
        "or a corpus name such as Omega, Y or two."
    ),
    no_args_is_help=True,
)
@verbose_option
@format_option
@levels_option
@tab_limit_option
@click.argument("term", type=str)
def evaluate(verbose, fmt, levels, tab_limit, term):
    logging_setup(verbose)
    _log = logging.getLogger(__name__)

    parsed = read_closed_term(term)
    tower = build_tower_or_fail(levels, tab_limit)
    larger = build_tower_or_fail(levels + 1, tower.tab_limit)

    try:
        denotation = denote(tower, parsed)
        refined = denote(larger, parsed)
    except DomwbError as error:
        raise as_usage_error(error)
    stabilized = has_stabilized(tower, denotation, refined)
    _log.info(f"Denoted {format_term(parsed)} at N={levels}")

    components = [tower.name(n, x) for n, x in enumerate(denotation.components)]
    emit(
        dict(term=format_term(parsed), N=levels, components=components, stabilized=stabilized),
        fmt,
    )
