import click

from domwb.cli.dyadic.check import check
from domwb.cli.dyadic.val import val


@click.group(name="dyadic", help="Work with dyadic rationals written as c / l(..) / r(..) trees.")
def dyadic():
    pass


dyadic.add_command(check)
dyadic.add_command(val)
