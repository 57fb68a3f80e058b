import logging

import click

from domwb.cli.common import read_poset_argument, verbose_option
from domwb.finposet import to_dot
from domwb.io import get_filesystem
from domwb.logs import logging_setup


@click.command(
    name="export-dot",
    help="Write the Hasse diagram of a poset as Graphviz DOT.",
    no_args_is_help=True,
)
@verbose_option
@click.argument("poset_file", type=str)
@click.option(
    "--output",
    type=str,
    default=None,
    help="Path of the .dot file to write, by default the DOT source goes to stdout.",
)
@click.option("--name", type=str, default="poset", show_default=True, help="Graph name.")
def export_dot(verbose, poset_file, output, name):
    logging_setup(verbose)
    _log = logging.getLogger(__name__)

    source = to_dot(read_poset_argument(poset_file), name=name)
    if output is None:
        click.echo(source, nl=False)
        return

    fs = get_filesystem(path=output)
    with fs.open(output, "w") as file:
        file.write(source)
    _log.info(f"Written {output}")
