import click

from domwb.cli.tower.build import build
from domwb.cli.tower.check import check


@click.group(name="tower", help="Build and check truncations of the D-infinity tower.")
def tower():
    pass


tower.add_command(build)
tower.add_command(check)
