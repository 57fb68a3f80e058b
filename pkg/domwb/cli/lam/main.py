import click

from domwb.cli.lam.compare import compare
from domwb.cli.lam.evaluate import evaluate


@click.group(name="lam", help="Evaluate untyped lambda terms in truncations of D-infinity.")
def lam():
    pass


lam.add_command(evaluate)
lam.add_command(compare)
