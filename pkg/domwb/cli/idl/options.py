from typing import Callable, Hashable

import click

from domwb.cli.common import as_usage_error, element_argument, read_poset_argument
from domwb.dyadics import DyadicSyntaxError, parse_dyadic
from domwb.ideal import BASES, AbstractBasis, preorder_basis, strict_basis

basis_option = click.option(
    "--basis",
    "basis_name",
    default="dyadic",
    show_default=True,
    type=click.Choice(sorted(BASES) + ["preorder", "strict"], case_sensitive=True),
    help="Abstract basis; preorder and strict read the order of --poset-file.",
)

poset_file_option = click.option(
    "--poset-file",
    type=str,
    default=None,
    help="JSON poset for the preorder and strict bases.",
)

depth_option = click.option(
    "--depth",
    default=4,
    show_default=True,
    type=click.IntRange(min=0),
    help="Carrier enumeration depth for the bounded searches.",
)

def resolve_basis(
    basis_name: str, poset_file: str | None
) -> tuple[AbstractBasis, Callable[[str], Hashable]]:
    """The basis and a parser for its elements as given on the command line."""
    if basis_name in BASES:
        if poset_file is not None:
            raise as_usage_error(ValueError(f"--poset-file is not used by the {basis_name} basis"))

        def parse_element(text: str) -> Hashable:
            try:
                return parse_dyadic(text)
            except DyadicSyntaxError as error:
                raise as_usage_error(error)

        return BASES[basis_name](), parse_element

    if poset_file is None:
        raise as_usage_error(ValueError(f"The {basis_name} basis needs --poset-file"))
    poset = read_poset_argument(poset_file)
    basis = preorder_basis(poset) if basis_name == "preorder" else strict_basis(poset)
    return basis, lambda text: element_argument(poset, text)
