import logging

import click

from domwb.cli.common import emit, format_option, verbose_option
from domwb.cli.tower.options import build_tower_or_fail, levels_option, tab_limit_option
from domwb.logs import logging_setup
from domwb.tower import check_tower


@click.command(
    name="check",
    help="Check the embedding-projection laws, functoriality and step bases of the tower.",
    no_args_is_help=True,
)
@verbose_option
@format_option
@levels_option
@tab_limit_option
def check(verbose, fmt, levels, tab_limit):
    logging_setup(verbose)
    _log = logging.getLogger(__name__)

    tower = build_tower_or_fail(levels, tab_limit)
    report = check_tower(tower)
    _log.info(f"Tower check passed: {report.passed}")

    payload = report.to_dict()
    payload.update(
        N=tower.N, tab_limit=tower.tab_limit, sizes=[level.size for level in tower.levels]
    )
    emit(payload, fmt)
