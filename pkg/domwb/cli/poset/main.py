import click

from domwb.cli.poset.check import check
from domwb.cli.poset.export_dot import export_dot
from domwb.cli.poset.waybelow import waybelow


@click.group(name="poset", help="Inspect finite posets given as JSON order tables.")
def poset():
    pass


poset.add_command(check)
poset.add_command(waybelow)
poset.add_command(export_dot)
