import logging

import click

from domwb.cli.common import emit, format_option, verbose_option
from domwb.cli.idl.options import basis_option, depth_option, poset_file_option, resolve_basis
from domwb.ideal import check_abstract_basis
from domwb.logs import logging_setup


@click.command(
    name="check-basis",
    help="Check transitivity and the interpolation properties of an abstract basis.",
)
@verbose_option
@format_option
@basis_option
@poset_file_option
@depth_option
def check_basis(verbose, fmt, basis_name, poset_file, depth):
    logging_setup(verbose)
    _log = logging.getLogger(__name__)

    basis, _ = resolve_basis(basis_name, poset_file)
    report = check_abstract_basis(basis, depth)
    _log.info(f"Basis {basis.name} check at depth {depth} passed: {report.passed}")
    payload = report.to_dict()
    payload.update(basis=basis.name, depth=depth, carrier_size=len(basis.enumerate(depth)))
    emit(payload, fmt)
