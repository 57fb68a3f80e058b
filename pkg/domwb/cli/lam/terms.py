from domwb.cli.common import as_usage_error
from domwb.lam import CORPUS, LambdaSyntaxError, Term, corpus_term, free_variables, parse


def read_closed_term(text: str) -> Term:
    """A corpus name (`Omega`, `YG`, ...) or the text of a closed term."""
    try:
        term = corpus_term(text) if text in CORPUS else parse(text)
    except LambdaSyntaxError as error:
        raise as_usage_error(error)

    unbound = free_variables(term)
    if unbound:
        raise as_usage_error(ValueError(f"Term has free variables: {sorted(unbound)}"))
    return term
