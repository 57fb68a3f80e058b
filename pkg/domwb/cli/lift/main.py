import click

from domwb.cli.lift.free_ext import free_ext


@click.group(name="lift", help="The lifting construction and its universal property.")
def lift():
    pass


lift.add_command(free_ext)
