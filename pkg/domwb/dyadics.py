"""
The inductive dyadics: finite trees built from ``c``, ``l(x)`` and ``r(x)``.

Read ``c`` as 0, ``l(x)`` as ``(x - 1) / 2`` and ``r(x)`` as ``(x + 1) / 2``; the trees are
then exactly the dyadic rationals in the open interval (-1, 1), and `prec` is ``<``.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import lark

from domwb.errors import DomwbError
from domwb.finposet import PropertyReport

_log = logging.getLogger(__name__)


class PreconditionError(DomwbError):
    pass


class DyadicSyntaxError(DomwbError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        super().__init__(message)


@dataclass(frozen=True)
class Center:
    def __repr__(self) -> str:
        return "c"


@dataclass(frozen=True)
class Left:
    x: "Dyadic"

    def __repr__(self) -> str:
        return f"l({self.x!r})"


@dataclass(frozen=True)
class Right:
    x: "Dyadic"

    def __repr__(self) -> str:
        return f"r({self.x!r})"


Dyadic = Center | Left | Right

CENTER = Center()


def prec(x: Dyadic, y: Dyadic) -> bool:
    """The strict order on dyadics, by structural recursion on both trees."""
    match x, y:
        case Center(), Right():
            return True
        case Left(), Center() | Right():
            return True
        case Left(a), Left(b):
            return prec(a, b)
        case Right(a), Right(b):
            return prec(a, b)
        case _:
            return False


@dataclass(frozen=True)
class DyadicRational:
    """A dyadic rational ``num / den`` in lowest terms, ``den`` a power of two."""

    num: int
    den: int

    @classmethod
    def from_fraction(cls, value: Fraction) -> "DyadicRational":
        den = value.denominator
        if den & (den - 1):
            raise PreconditionError(f"{value} is not a dyadic rational")
        return cls(value.numerator, den)

    @property
    def value(self) -> Fraction:
        return Fraction(self.num, self.den)

    def to_dict(self) -> dict:
        return dict(num=self.num, den=self.den)


def _value(x: Dyadic) -> Fraction:
    match x:
        case Center():
            return Fraction(0)
        case Left(a):
            return (_value(a) - 1) / 2
        case Right(a):
            return (_value(a) + 1) / 2


def to_rational(x: Dyadic) -> DyadicRational:
    return DyadicRational.from_fraction(_value(x))


def from_rational(q: Fraction | DyadicRational) -> Dyadic:
    """
    The tree denoting a dyadic rational in (-1, 1).

    Raises
    ------
    PreconditionError
        If `q` is outside (-1, 1) or its denominator is not a power of two.
    """
    q = q.value if isinstance(q, DyadicRational) else Fraction(q)
    if not -1 < q < 1 or q.denominator & (q.denominator - 1):
        e = PreconditionError(f"{q} is not a dyadic rational in (-1, 1)")
        _log.error(e)
        raise e

    # Unwind iteratively: each step doubles the denominator away.
    steps = []
    while q != 0:
        if q < 0:
            steps.append(Left)
            q = 2 * q + 1
        else:
            steps.append(Right)
            q = 2 * q - 1
    tree = CENTER
    for constructor in reversed(steps):
        tree = constructor(tree)
    return tree


def density_witness(x: Dyadic, y: Dyadic) -> Dyadic:
    """
    A dyadic strictly between `x` and `y`: the tree of their midpoint.

    Raises
    ------
    PreconditionError
        If ``x ≺ y`` fails.
    """
    if not prec(x, y):
        e = PreconditionError(f"density_witness needs {x!r} ≺ {y!r}")
        _log.error(e)
        raise e
    return from_rational((_value(x) + _value(y)) / 2)


def endpoint_witnesses(x: Dyadic) -> tuple[Dyadic, Dyadic]:
    """Elements below and above `x`."""
    return Left(x), Right(x)


def depth(x: Dyadic) -> int:
    d = 0
    while not isinstance(x, Center):
        x = x.x
        d += 1
    return d


@lru_cache(maxsize=None)
def _enumerate(d: int) -> tuple[Dyadic, ...]:
    if d == 0:
        return (CENTER,)
    below = _enumerate(d - 1)
    return (CENTER,) + tuple(Left(e) for e in below) + tuple(Right(e) for e in below)


def enumerate_dyadics(d: int) -> list[Dyadic]:
    """All trees of depth at most `d`; there are ``2^(d+1) - 1`` of them."""
    if d < 0:
        raise ValueError(f"Depth must be non-negative, got {d}")
    return list(_enumerate(d))


_GRAMMAR = r"""
    dyadic : "c"               -> center
           | "l" "(" dyadic ")" -> left
           | "r" "(" dyadic ")" -> right

    %import common.WS
    %ignore WS
"""


class _ToDyadic(lark.Transformer):
    def center(self, _):
        return CENTER

    def left(self, children):
        return Left(children[0])

    def right(self, children):
        return Right(children[0])


_parser = lark.Lark(_GRAMMAR, start="dyadic", parser="lalr", transformer=_ToDyadic())


def parse_dyadic(text: str) -> Dyadic:
    """
    Parse the ``c`` / ``l(...)`` / ``r(...)`` syntax.

    Raises
    ------
    DyadicSyntaxError
        With the line and column of the offending input.
    """
    try:
        return _parser.parse(text)
    except lark.UnexpectedInput as error:
        e = DyadicSyntaxError(
            f"Invalid dyadic {text!r} at line {error.line}, column {error.column}",
            line=error.line,
            column=error.column,
        )
        _log.error(e)
        raise e


def format_dyadic(x: Dyadic) -> str:
    return repr(x)


def check_dyadic_order(max_depth: int) -> PropertyReport:
    """
    Irreflexivity, trichotomy, transitivity and numeric soundness over trees of bounded depth.

    Transitivity quantifies over triples and is capped at depth 3.
    """
    elements = enumerate_dyadics(max_depth)
    values = {x: _value(x) for x in elements}
    report = PropertyReport()

    reflexive = [format_dyadic(x) for x in elements if prec(x, x)]
    report.record("irreflexive", not reflexive, reflexive[:1])

    trichotomy = []
    soundness = []
    for x in elements:
        for y in elements:
            below = prec(x, y)
            if below + (x == y) + prec(y, x) != 1:
                trichotomy.append([format_dyadic(x), format_dyadic(y)])
            if below != (values[x] < values[y]):
                soundness.append([format_dyadic(x), format_dyadic(y)])
    report.record("trichotomy", not trichotomy, trichotomy[:1])
    report.record("numeric_soundness", not soundness, soundness[:1])

    small = enumerate_dyadics(min(max_depth, 3))
    transitivity = [
        [format_dyadic(x), format_dyadic(y), format_dyadic(z)]
        for x in small
        for y in small
        if prec(x, y)
        for z in small
        if prec(y, z) and not prec(x, z)
    ]
    report.record("transitive", not transitivity, transitivity[:1])

    density = []
    for x in elements:
        for y in elements:
            if prec(x, y):
                z = density_witness(x, y)
                if not (prec(x, z) and prec(z, y)):
                    density.append([format_dyadic(x), format_dyadic(y)])
    report.record("dense", not density, density[:1])

    endpoints = [
        format_dyadic(x)
        for x in elements
        if not (prec(endpoint_witnesses(x)[0], x) and prec(x, endpoint_witnesses(x)[1]))
    ]
    report.record("no_endpoints", not endpoints, endpoints[:1])
    _log.info(f"Checked dyadic order on {len(elements)} trees")
    return report
