import logging

import click

from domwb.cli.common import emit, format_option, verbose_option
from domwb.cli.tower.options import build_tower_or_fail, levels_option, tab_limit_option
from domwb.io import dump_tower, write_json
from domwb.logs import logging_setup


@click.command(
    name="build",
    help="Enumerate the tower levels and tabulate their embedding-projection pairs.",
    no_args_is_help=True,
)
@verbose_option
@format_option
@levels_option
@tab_limit_option
@click.option(
    "--output",
    type=str,
    default=None,
    help="Write tower.json to this path instead of printing it.",
)
def build(verbose, fmt, levels, tab_limit, output):
    logging_setup(verbose)
    _log = logging.getLogger(__name__)

    tower = build_tower_or_fail(levels, tab_limit)
    payload = dump_tower(tower)
    if output is None:
        emit(payload, fmt)
        return

    write_json(output, payload)
    _log.info(f"Tower with {len(tower.levels)} enumerated levels written to {output}")
    emit(dict(output=output, sizes=[level.size for level in tower.levels]), fmt)
