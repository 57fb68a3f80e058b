import logging

import click

from domwb.errors import DomwbError
from domwb.finposet import FinPoset
from domwb.io import check_file_exists, is_json, load_poset, to_json
from domwb.text import render_text

_log = logging.getLogger(__name__)

format_option = click.option(
    "--format",
    "fmt",
    default="json",
    show_default=True,
    type=click.Choice(["json", "text"], case_sensitive=True),
    help="Output format; text renders the same payload as the JSON output.",
)

verbose_option = click.option("-v", "--verbose", default=1, count=True)


def emit(payload: dict, fmt: str):
    """
    Write the payload to stdout and exit 1 if it reports a failed property.
    """
    if fmt == "text":
        click.echo(render_text(payload))
    else:
        click.echo(to_json(payload), nl=False)

    if isinstance(payload, dict) and payload.get("passed") is False:
        raise SystemExit(1)


def require_json_file(path: str):
    if not check_file_exists(path=path):
        e = click.UsageError(f"File {path} does not exist!")
        _log.error(e)
        raise e
    if not is_json(path=path):
        e = click.UsageError(f"File {path} is not a .json file")
        _log.error(e)
        raise e


def read_poset_argument(path: str) -> FinPoset:
    require_json_file(path)
    try:
        return load_poset(path)
    except (DomwbError, ValueError) as error:
        e = click.UsageError(f"Could not read a poset from {path}: {error}")
        _log.error(e)
        raise e


def element_argument(poset: FinPoset, name: str) -> int:
    try:
        return poset.index(name)
    except DomwbError as error:
        e = click.UsageError(str(error))
        _log.error(e)
        raise e


def as_usage_error(error: Exception) -> click.UsageError:
    e = click.UsageError(str(error))
    _log.error(e)
    return e
