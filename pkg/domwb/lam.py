"""
Untyped λ-terms and their denotations in truncated D∞.

A closed term denotes a `TowerElement` at the tower's truncation N. Application reads the
top component ``σ_N ∈ D_N`` as a function on ``D_{N-1}`` and embeds the result back;
abstraction tabulates a function on tower elements level by level through `pi_prime`.
Both are approximations of the isomorphism between D∞ and its function space, so
β-reduction is only sound as an inequality: ``⟦(λx.M) N⟧ ⊑ ⟦M[x:=N]⟧``.
"""

import enum
import logging
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

import lark

from domwb.errors import DomwbError
from domwb.finposet import PropertyReport
from domwb.tower import (
    Tower,
    TowerElement,
    Verdict,
    build_tower,
    compare_elements,
    embed_to_tower,
    pi_prime,
    tower_elements,
)

_log = logging.getLogger(__name__)


class LambdaSyntaxError(DomwbError):
    def __init__(self, message: str, line: int | None, column: int | None, position: int | None):
        self.line = line
        self.column = column
        self.position = position
        super().__init__(message)


class UnboundVariableError(DomwbError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"Unbound variable {name!r}")


class TruncationMismatchError(DomwbError):
    pass


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Lam:
    name: str
    body: "Term"


@dataclass(frozen=True)
class App:
    fun: "Term"
    arg: "Term"


Term = Var | Lam | App


_GRAMMAR = r"""
    ?start : term

    ?term : lam
          | app

    lam : _LAMBDA IDENT "." term

    app : atom+

    ?atom : IDENT           -> var
          | "(" term ")"

    _LAMBDA : "\\" | "λ"
    IDENT : /[A-Za-z][A-Za-z0-9_]*/

    %import common.WS
    %ignore WS
"""


class _ToTerm(lark.Transformer):
    def var(self, children):
        return Var(str(children[0]))

    def lam(self, children):
        name, body = children
        return Lam(str(name), body)

    def app(self, children):
        term = children[0]
        for arg in children[1:]:
            term = App(term, arg)
        return term


_parser = lark.Lark(_GRAMMAR, start="start", parser="lalr", transformer=_ToTerm())


def parse(text: str) -> Term:
    """
    Parse ``\\x. body`` (or ``λx. body``), left-associative application and parentheses.

    Raises
    ------
    LambdaSyntaxError
        Carrying the line, column and offset of the first unexpected input.
    """
    try:
        return _parser.parse(text)
    except lark.UnexpectedInput as error:
        token = getattr(error, "token", None)
        at_end = isinstance(error, lark.UnexpectedEOF) or getattr(token, "type", None) == "$END"
        where = "at end of input" if at_end else f"at line {error.line}, column {error.column}"
        e = LambdaSyntaxError(
            f"Syntax error {where} in {text!r}",
            line=error.line,
            column=error.column,
            position=getattr(error, "pos_in_stream", None),
        )
        _log.error(e)
        raise e


def format_term(term: Term) -> str:
    match term:
        case Var(name):
            return name
        case Lam(name, body):
            return f"\\{name}.{format_term(body)}"
        case App(fun, arg):
            left = f"({format_term(fun)})" if isinstance(fun, Lam) else format_term(fun)
            right = format_term(arg) if isinstance(arg, Var) else f"({format_term(arg)})"
            return f"{left} {right}"


def free_variables(term: Term) -> frozenset[str]:
    match term:
        case Var(name):
            return frozenset({name})
        case Lam(name, body):
            return free_variables(body) - {name}
        case App(fun, arg):
            return free_variables(fun) | free_variables(arg)


def _all_names(term: Term) -> set[str]:
    match term:
        case Var(name):
            return {name}
        case Lam(name, body):
            return {name} | _all_names(body)
        case App(fun, arg):
            return _all_names(fun) | _all_names(arg)


def fresh_name(base: str, avoid: Iterable[str]) -> str:
    avoid = set(avoid)
    i = 0
    while f"{base}_{i}" in avoid:
        i += 1
    return f"{base}_{i}"


def substitute(term: Term, name: str, value: Term) -> Term:
    """Capture-avoiding substitution ``term[name := value]``."""
    match term:
        case Var(other):
            return value if other == name else term
        case App(fun, arg):
            return App(substitute(fun, name, value), substitute(arg, name, value))
        case Lam(bound, body):
            if bound == name:
                return term
            if bound in free_variables(value) and name in free_variables(body):
                renamed = fresh_name(bound, _all_names(body) | _all_names(value) | {name})
                body = substitute(body, bound, Var(renamed))
                bound = renamed
            return Lam(bound, substitute(body, name, value))


def alpha_rename(term: Term, rename: Callable[[str, set[str]], str] | None = None) -> Term:
    """
    Rename every bound variable.

    `rename(name, avoid)` picks the new name; by default a fresh ``name_i`` avoiding every
    name already in the term.
    """
    avoid = _all_names(term)
    if rename is None:
        rename = fresh_name

    def go(t: Term) -> Term:
        match t:
            case Var():
                return t
            case App(fun, arg):
                return App(go(fun), go(arg))
            case Lam(bound, body):
                new = rename(bound, avoid | free_variables(body))
                avoid.add(new)
                return Lam(new, go(substitute(body, bound, Var(new))))

    return go(term)


def _de_bruijn(term: Term, scope: tuple[str, ...] = ()):
    match term:
        case Var(name):
            return ("var", scope.index(name)) if name in scope else ("free", name)
        case Lam(name, body):
            return ("lam", _de_bruijn(body, (name,) + scope))
        case App(fun, arg):
            return ("app", _de_bruijn(fun, scope), _de_bruijn(arg, scope))


def alpha_equivalent(a: Term, b: Term) -> bool:
    return _de_bruijn(a) == _de_bruijn(b)


Env = Mapping[str, TowerElement]


def _check_operands(tower: Tower, *elements: TowerElement):
    if tower.N == 0:
        e = TruncationMismatchError("Application needs a truncation of at least 1")
        _log.error(e)
        raise e
    for sigma in elements:
        if sigma.truncation != tower.N:
            e = TruncationMismatchError(
                f"Element truncated at {sigma.truncation}, tower truncated at {tower.N}"
            )
            _log.error(e)
            raise e


def apply(tower: Tower, sigma: TowerElement, tau: TowerElement) -> TowerElement:
    """``σ · τ = ε_{N-1,∞}(σ_N(τ_{N-1}))`` truncated at N."""
    _check_operands(tower, sigma, tau)
    N = tower.N
    top = tower.apply_fn(N, sigma.components[N], tau.components[N - 1])
    return embed_to_tower(tower, N - 1, top)


def _apply_join(tower: Tower, sigma: TowerElement, tau: TowerElement) -> TowerElement:
    _check_operands(tower, sigma, tau)
    candidates = [
        embed_to_tower(tower, k - 1, tower.apply_fn(k, sigma.components[k], tau.components[k - 1]))
        for k in range(1, tower.N + 1)
    ]
    return TowerElement(
        tuple(tower.join(n, [c.components[n] for c in candidates]) for n in range(tower.N + 1))
    )


def _apply_lagged(tower: Tower, sigma: TowerElement, tau: TowerElement) -> TowerElement:
    _check_operands(tower, sigma, tau)
    N = tower.N
    if N < 2:
        raise TruncationMismatchError("The lagged scheme needs a truncation of at least 2")
    return embed_to_tower(
        tower, N - 2, tower.apply_fn(N - 1, sigma.components[N - 1], tau.components[N - 2])
    )


APPLICATION_SCHEMES: dict[str, Callable[[Tower, TowerElement, TowerElement], TowerElement]] = {
    "top": apply,
    "join": _apply_join,
    "lagged": _apply_lagged,
}


def abstract(tower: Tower, f: Callable[[TowerElement], TowerElement]) -> TowerElement:
    """
    The element whose component k is ``π′_k(f)``.

    Raises
    ------
    MonotonicityViolationError
        If `f` is caught being non-monotone on a decidable level.
    """
    return TowerElement(tuple(pi_prime(tower, k)(f) for k in range(tower.N + 1)))


def denote(tower: Tower, term: Term, env: Env | None = None) -> TowerElement:
    """
    Denotation of a term at the tower's truncation.

    Raises
    ------
    UnboundVariableError
        If a free variable of `term` is missing from `env`.
    """
    env = {} if env is None else env
    match term:
        case Var(name):
            if name not in env:
                e = UnboundVariableError(name)
                _log.error(e)
                raise e
            return env[name]
        case App(fun, arg):
            return apply(tower, denote(tower, fun, env), denote(tower, arg, env))
        case Lam(name, body):
            return abstract(tower, lambda d: denote(tower, body, {**env, name: d}))


class BetaVerdict(enum.Enum):
    EQUAL = "equal_at_N"
    LEQ = "leq_at_N"
    GEQ = "geq_at_N"
    INCOMPARABLE = "incomparable"
    UNKNOWN = "unknown"


_FROM_VERDICT = {
    Verdict.EQUAL: BetaVerdict.EQUAL,
    Verdict.EQUAL_ON_SAMPLES: BetaVerdict.EQUAL,
    Verdict.LEQ: BetaVerdict.LEQ,
    Verdict.GEQ: BetaVerdict.GEQ,
    Verdict.INCOMPARABLE: BetaVerdict.INCOMPARABLE,
    Verdict.DIFFER: BetaVerdict.INCOMPARABLE,
    Verdict.UNKNOWN: BetaVerdict.UNKNOWN,
}


def element_leq(tower: Tower, sigma: TowerElement, tau: TowerElement) -> Verdict:
    """Componentwise comparison, combined over every level."""
    verdicts = {
        compare_elements(tower, n, a, b)
        for n, (a, b) in enumerate(zip(sigma.components, tau.components))
    }
    if verdicts <= {Verdict.EQUAL}:
        return Verdict.EQUAL
    if verdicts <= {Verdict.EQUAL, Verdict.LEQ}:
        return Verdict.LEQ
    if verdicts <= {Verdict.EQUAL, Verdict.GEQ}:
        return Verdict.GEQ
    if Verdict.INCOMPARABLE in verdicts or {Verdict.LEQ, Verdict.GEQ} <= verdicts:
        return Verdict.INCOMPARABLE
    if Verdict.DIFFER in verdicts:
        return Verdict.DIFFER
    if verdicts <= {Verdict.EQUAL, Verdict.EQUAL_ON_SAMPLES}:
        return Verdict.EQUAL_ON_SAMPLES
    return Verdict.UNKNOWN


def agree_below(tower: Tower, sigma: TowerElement, tau: TowerElement, n: int) -> bool:
    """True iff components 0..n are exactly equal."""
    return all(
        compare_elements(tower, k, sigma.components[k], tau.components[k]) is Verdict.EQUAL
        for k in range(n + 1)
    )


def has_stabilized(tower: Tower, sigma: TowerElement, refined: TowerElement) -> bool:
    """
    True iff `refined`, the denotation at truncation N + 1, agrees with `sigma` on the
    shared levels ``0 .. N-1``.

    The top component is left out: it carries the truncation-N reading of application.
    """
    return agree_below(tower, sigma, refined, tower.N - 1)


@dataclass(frozen=True)
class BetaComparison:
    verdict: BetaVerdict
    stabilized: bool
    N: int

    def to_dict(self) -> dict:
        return dict(verdict=self.verdict.value, stabilized=self.stabilized, N=self.N)


def beta_compare(
    t1: Term, t2: Term, N: int, tab_limit: int | None = None, budget: int | None = None
) -> BetaComparison:
    """
    Compare two closed terms at truncation N, and check that both denotations are
    unchanged on levels 0..N-1 when evaluated at truncation N + 1.
    """
    tower = build_tower(N, tab_limit, budget)
    larger = build_tower(N + 1, tab_limit, budget)
    d1, d2 = denote(tower, t1), denote(tower, t2)
    verdict = _FROM_VERDICT[element_leq(tower, d1, d2)]

    stabilized = all(
        has_stabilized(tower, small, big)
        for small, big in ((d1, denote(larger, t1)), (d2, denote(larger, t2)))
    )
    return BetaComparison(verdict=verdict, stabilized=stabilized, N=N)


CORPUS: dict[str, str] = {
    "I": r"\x.x",
    "K": r"\x.\y.x",
    "S": r"\x.\y.\z.x z (y z)",
    "Omega": r"(\x.x x) (\x.x x)",
    "Y": r"\f.(\x.f (x x)) (\x.f (x x))",
    "G": r"\h.\x.x",
    "YG": r"(\f.(\x.f (x x)) (\x.f (x x))) (\h.\x.x)",
    "zero": r"\f.\x.x",
    "one": r"\f.\x.f x",
    "two": r"\f.\x.f (f x)",
    "three": r"\f.\x.f (f (f x))",
}


def corpus_term(name: str) -> Term:
    return parse(CORPUS[name])


_BELOW = (Verdict.EQUAL, Verdict.LEQ)


def compare_schemes(tower: Tower) -> PropertyReport:
    """
    Exhaustive check of the application schemes at an enumerated truncation.

    Every scheme must be β-sound, ``s(abstract(f), τ) ⊑ f(τ)``, for the functions
    ``f = ρ · -`` and every τ; and the `top` scheme must dominate every other scheme
    pointwise.
    """
    elements = tower_elements(tower)
    report = PropertyReport()
    top = APPLICATION_SCHEMES["top"]

    for name, scheme in APPLICATION_SCHEMES.items():
        if name == "lagged" and tower.N < 2:
            continue
        unsound = []
        dominated = []
        for i, rho in enumerate(elements):
            abstracted = abstract(tower, lambda d, rho=rho: top(tower, rho, d))
            for j, tau in enumerate(elements):
                expected = top(tower, rho, tau)
                if element_leq(tower, scheme(tower, abstracted, tau), expected) not in _BELOW:
                    unsound.append((i, j))
                if element_leq(tower, scheme(tower, rho, tau), expected) not in _BELOW:
                    dominated.append((i, j))
        report.record(f"{name}.beta_sound", not unsound, unsound[:1])
        report.record(f"{name}.below_top", not dominated, dominated[:1])
    return report
