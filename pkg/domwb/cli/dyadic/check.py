import logging

import click

from domwb.cli.common import emit, format_option, verbose_option
from domwb.dyadics import check_dyadic_order, enumerate_dyadics
from domwb.logs import logging_setup


@click.command(
    name="check",
    help="Check the order on all dyadic trees up to a depth: strict, total, dense, no endpoints.",
)
@verbose_option
@format_option
@click.option(
    "--depth",
    default=4,
    show_default=True,
    type=click.IntRange(min=0),
    help="Largest tree depth to enumerate.",
)
def check(verbose, fmt, depth):
    logging_setup(verbose)
    _log = logging.getLogger(__name__)

    report = check_dyadic_order(depth)
    _log.info(f"Dyadic order check up to depth {depth} passed: {report.passed}")
    payload = report.to_dict()
    payload.update(depth=depth, count=len(enumerate_dyadics(depth)))
    emit(payload, fmt)
