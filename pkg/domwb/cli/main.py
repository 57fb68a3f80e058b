import click

import domwb
from domwb.cli.dyadic.main import dyadic
from domwb.cli.idl.main import idl
from domwb.cli.lam.main import lam
from domwb.cli.lift.main import lift
from domwb.cli.poset.main import poset
from domwb.cli.tower.main import tower


@click.version_option(package_name="domwb", version=domwb.__version__)
@click.group(name="domwb", help="Inspect, check and evaluate finite domain-theoretic structures.")
def cli():
    pass


cli.add_command(poset)
cli.add_command(tower)
cli.add_command(lam)
cli.add_command(idl)
cli.add_command(dyadic)
cli.add_command(lift)
