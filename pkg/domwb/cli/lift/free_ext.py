import logging

import click

from domwb.cli.common import as_usage_error, emit, format_option, require_json_file, verbose_option
from domwb.errors import DomwbError
from domwb.finposet import FinPoset, MonotoneMap
from domwb.io import poset_from_dict, read_json
from domwb.lifting import check_free_extension_dcpo, free_extension_dcpo
from domwb.logs import logging_setup


def read_map(document: dict) -> MonotoneMap:
    """
    ``{"carrier": [...] | "domain": <poset>, "codomain": <poset>, "map": {x: y}}``.

    A carrier is a plain set; a domain is a finite poset.
    """
    if "carrier" in document:
        carrier = [str(x) for x in document["carrier"]]
        dom = FinPoset.antichain(len(carrier), names=carrier)
    else:
        dom = poset_from_dict(document.get("domain"))
    cod = poset_from_dict(document.get("codomain"))
    mapping = document.get("map", {})
    table = [cod.index(str(mapping[name])) for name in dom.elements]
    return MonotoneMap.checked(dom, cod, table)


@click.command(
    name="free-ext",
    help=(
        "Extend a map from a set or finite dcpo into a pointed dcpo to its lifting, "
        "and check that the extension is the unique strict continuous one."
    ),
    no_args_is_help=True,
)
@verbose_option
@format_option
@click.argument("map_file", type=str)
def free_ext(verbose, fmt, map_file):
    logging_setup(verbose)
    _log = logging.getLogger(__name__)

    require_json_file(map_file)
    try:
        f = read_map(read_json(map_file))
        extension = free_extension_dcpo(f)
        report = check_free_extension_dcpo(f)
    except (DomwbError, KeyError, TypeError, AttributeError) as error:
        raise as_usage_error(error)

    _log.info(f"Free extension check passed: {report.passed}")
    payload = report.to_dict()
    payload["extension"] = {
        extension.dom.name(x): f.cod.name(extension(x)) for x in range(extension.dom.size)
    }
    emit(payload, fmt)
