import click

from domwb.cli.common import as_usage_error
from domwb.errors import DomwbError
from domwb.tower import Tower, build_tower

levels_option = click.option(
    "--levels",
    "levels",
    required=True,
    type=click.IntRange(min=0),
    help="Truncation level N; elements keep the components D_0 .. D_N.",
)

tab_limit_option = click.option(
    "--tab-limit",
    type=click.IntRange(min=0),
    default=None,
    help="Last level to enumerate, by default DOMWB_TAB_LIMIT (capped at --levels).",
)

def build_tower_or_fail(levels: int, tab_limit: int | None) -> Tower:
    """Build the tower, turning budget and configuration errors into usage errors."""
    try:
        return build_tower(levels, tab_limit)
    except (DomwbError, ValueError) as error:
        raise as_usage_error(error)
