import logging

import click

from domwb.cli.common import as_usage_error, emit, format_option, verbose_option
from domwb.dyadics import DyadicSyntaxError, parse_dyadic, to_rational
from domwb.logs import logging_setup


@click.command(
    name="val",
    help="Print the rational value of a dyadic tree such as 'r(l(c))'.",
    no_args_is_help=True,
)
@verbose_option
@format_option
@click.argument("expression", type=str)
def val(verbose, fmt, expression):
    logging_setup(verbose)
    _log = logging.getLogger(__name__)

    try:
        tree = parse_dyadic(expression)
    except DyadicSyntaxError as error:
        raise as_usage_error(error)
    value = to_rational(tree)
    _log.info(f"{expression} = {value.num}/{value.den}")
    emit(value.to_dict(), fmt)
