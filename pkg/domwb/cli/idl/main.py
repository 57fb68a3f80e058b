import click

from domwb.cli.idl.check_basis import check_basis
from domwb.cli.idl.waybelow import waybelow


@click.group(name="idl", help="Query rounded ideal completions of abstract bases.")
def idl():
    pass


idl.add_command(check_basis)
idl.add_command(waybelow)
