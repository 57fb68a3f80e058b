import logging

import click

from domwb.cli.common import emit, format_option, verbose_option
from domwb.cli.idl.options import basis_option, depth_option, poset_file_option, resolve_basis
from domwb.ideal import Principal, subset, way_below_ideal
from domwb.logs import logging_setup


@click.command(
    name="waybelow",
    help="Decide whether the principal ideal of X is way below the principal ideal of Y.",
    no_args_is_help=True,
)
@verbose_option
@format_option
@basis_option
@poset_file_option
@depth_option
@click.argument("x", type=str)
@click.argument("y", type=str)
def waybelow(verbose, fmt, basis_name, poset_file, depth, x, y):
    logging_setup(verbose)
    _log = logging.getLogger(__name__)

    basis, parse_element = resolve_basis(basis_name, poset_file)
    a, b = Principal(parse_element(x)), Principal(parse_element(y))

    judgement = way_below_ideal(basis, a, b, depth)
    inclusion = subset(basis, a, b, depth)
    _log.info(f"{x} << {y} in Idl({basis.name}): {judgement.truth.value}")
    emit(
        dict(
            basis=basis.name,
            x=basis.format(a.b),
            y=basis.format(b.b),
            depth=depth,
            way_below=judgement.to_dict(basis.format),
            subset=inclusion.to_dict(basis.format),
        ),
        fmt,
    )
