import logging

import click

from domwb.cli.common import as_usage_error, emit, format_option, verbose_option
from domwb.cli.lam.terms import read_closed_term
from domwb.cli.tower.options import levels_option, tab_limit_option
from domwb.errors import DomwbError
from domwb.lam import beta_compare, format_term
from domwb.logs import logging_setup


@click.command(
    name="compare",
    help="Compare the denotations of two closed terms at truncation N.",
    no_args_is_help=True,
)
@verbose_option
@format_option
@levels_option
@tab_limit_option
@click.argument("first", type=str)
@click.argument("second", type=str)
def compare(verbose, fmt, levels, tab_limit, first, second):
    logging_setup(verbose)
    _log = logging.getLogger(__name__)

    t1, t2 = read_closed_term(first), read_closed_term(second)
    try:
        comparison = beta_compare(t1, t2, levels, tab_limit)
    except (DomwbError, ValueError) as error:
        raise as_usage_error(error)

    _log.info(f"Compared at N={levels}: {comparison.verdict.value}")
    payload = comparison.to_dict()
    payload.update(first=format_term(t1), second=format_term(t2))
    emit(payload, fmt)
