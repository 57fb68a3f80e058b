import logging

import click

from domwb.cli.common import emit, format_option, read_poset_argument, verbose_option
from domwb.finposet import (
    check_order_from_way_below,
    check_poset_axioms,
    check_way_below_properties,
    is_compact,
    least,
)
from domwb.logs import logging_setup


@click.command(
    name="check",
    help="Check the partial order axioms and the way-below properties of a poset.",
    no_args_is_help=True,
)
@verbose_option
@format_option
@click.argument("poset_file", type=str)
def check(verbose, fmt, poset_file):
    logging_setup(verbose)
    _log = logging.getLogger(__name__)

    poset = read_poset_argument(poset_file)
    axioms = check_poset_axioms(poset)
    payload = dict(passed=axioms.passed, size=poset.size, axioms=axioms.to_dict())

    if axioms.passed:
        way_below = check_way_below_properties(poset)
        way_below.merge(check_order_from_way_below(poset))
        bottom = least(poset)
        payload.update(
            passed=way_below.passed,
            way_below=way_below.to_dict(),
            least=None if bottom is None else poset.name(bottom),
            compact=[poset.name(x) for x in range(poset.size) if is_compact(poset, x)],
        )
    else:
        _log.info(f"{poset_file} is not a partial order")

    emit(payload, fmt)
