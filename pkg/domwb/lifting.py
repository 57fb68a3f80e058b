"""
The lifting construction in the decidable fragment.

A partial element is either `UNDEFINED` or `Defined(x)`. The lifting of a finite set is
the flat poset with a fresh least element; `lift_dcpo` adds a fresh bottom below an
arbitrary finite poset.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Hashable, Sequence

import numpy as np

from domwb.errors import DomwbError
from domwb.exponential import compose
from domwb.finposet import (
    FinPoset,
    MonotoneMap,
    PropertyReport,
    enumerate_monotone_maps,
    least,
)

_log = logging.getLogger(__name__)


class NotPointedError(DomwbError):
    pass


class _Undefined:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNDEFINED"

    def __reduce__(self):
        return (_Undefined, ())


UNDEFINED = _Undefined()


@dataclass(frozen=True)
class Defined:
    value: Hashable


Partial = _Undefined | Defined


def is_defined(p: Partial) -> bool:
    return isinstance(p, Defined)


def lift_order(l: Partial, m: Partial) -> bool:
    """``l ⊑ m`` iff ``l`` is undefined or ``l = m``."""
    return l is UNDEFINED or l == m


def eta(x: Hashable) -> Defined:
    return Defined(x)


BOTTOM_NAME = "bot"


def eta_name(x) -> str:
    return f"eta({x})"


@dataclass(frozen=True, eq=False)
class LiftedPoset:
    """
    The lifting of a finite set ``X``.

    Index 0 of `poset` is ⊥; index ``i + 1`` is ``eta(carrier[i])``.
    """

    carrier: tuple
    poset: FinPoset

    def to_partial(self, i: int) -> Partial:
        return UNDEFINED if i == 0 else Defined(self.carrier[i - 1])

    def index_of(self, p: Partial) -> int:
        if p is UNDEFINED:
            return 0
        return self.carrier.index(p.value) + 1

    def eta_index(self, x) -> int:
        return self.carrier.index(x) + 1


def lifted_poset(carrier: Sequence[Hashable]) -> LiftedPoset:
    carrier = tuple(carrier)
    partials = [UNDEFINED] + [Defined(x) for x in carrier]
    leq = np.array([[lift_order(l, m) for m in partials] for l in partials], dtype=bool)
    names = [BOTTOM_NAME] + [eta_name(x) for x in carrier]
    return LiftedPoset(carrier=carrier, poset=FinPoset(names, leq))


def _require_bottom(poset: FinPoset) -> int:
    bottom = least(poset)
    if bottom is None:
        e = NotPointedError(f"{poset!r} has no least element")
        _log.error(e)
        raise e
    return bottom


def free_extension(f: Callable[[Hashable], int], lifted: LiftedPoset, cod: FinPoset) -> MonotoneMap:
    """
    The unique strict map ``L(X) → E`` extending ``f : X → E`` along ``eta``.

    Parameters
    ----------
    f : Callable
        Function from carrier labels to element indices of `cod`.
    lifted : LiftedPoset
        The lifting of the domain of `f`.
    cod : FinPoset
        A pointed poset.

    Returns
    -------
    MonotoneMap

    Raises
    ------
    NotPointedError
        If `cod` has no least element.
    """
    bottom = _require_bottom(cod)
    table = [bottom] + [f(x) for x in lifted.carrier]
    return MonotoneMap(lifted.poset, cod, tuple(table))


def subsingleton_sup(poset: FinPoset, cond: bool, value: int) -> int:
    """Supremum of the family indexed by a decidable proposition: `value` if `cond`, else ⊥."""
    bottom = _require_bottom(poset)
    return value if cond else bottom


def lifting_basis(lifted: LiftedPoset) -> tuple[list[int], dict[int, list[int]]]:
    """
    The basis ``[⊥, eta(x)...]`` with its approximating sets.

    Basis index 0 is ⊥; ⊥ is approximated by itself and ``eta(x)`` by ``{⊥, eta(x)}``.
    """
    beta = list(range(lifted.poset.size))
    approx = {0: [0]}
    for i in range(1, lifted.poset.size):
        approx[i] = [0, i]
    return beta, approx


def lift_dcpo(poset: FinPoset) -> FinPoset:
    """
    ``poset`` with a fresh least element at index 0; element ``i`` moves to ``i + 1``.
    """
    n = poset.size
    leq = np.zeros((n + 1, n + 1), dtype=bool)
    leq[0, :] = True
    leq[1:, 1:] = poset.leq
    name = BOTTOM_NAME
    while name in poset.elements:
        name = name + "'"
    return FinPoset([name] + [eta_name(x) for x in poset.elements], leq)


def eta_prime(poset: FinPoset) -> MonotoneMap:
    return MonotoneMap(poset, lift_dcpo(poset), tuple(range(1, poset.size + 1)))


def free_extension_dcpo(f: MonotoneMap, cod: FinPoset | None = None) -> MonotoneMap:
    """
    Strict extension of a continuous ``f : D → E`` through `eta_prime`.

    Raises
    ------
    NotPointedError
        If the codomain has no least element.
    """
    cod = f.cod if cod is None else cod
    bottom = _require_bottom(cod)
    return MonotoneMap(lift_dcpo(f.dom), cod, (bottom,) + f.table)


def check_free_extension_dcpo(f: MonotoneMap, budget: int | None = None) -> PropertyReport:
    """
    Freeness of ``lift_dcpo(D)`` over `eta_prime` for a continuous ``f : D → E``.

    The extension must be strict and continuous, satisfy ``f̄ ∘ η′ = f`` and be the only
    strict continuous map that does.
    """
    extension = free_extension_dcpo(f)
    embedding = eta_prime(f.dom)
    report = PropertyReport()
    report.record("input_continuous", f.preserves_directed_sups())
    report.record("triangle", compose(embedding, extension) == f)
    report.record("strict", extension.is_strict())
    report.record("continuous", extension.preserves_directed_sups())

    competitors = [
        g
        for g in enumerate_monotone_maps(extension.dom, f.cod, budget)
        if g.is_strict() and compose(embedding, g) == f and g.preserves_directed_sups()
    ]
    report.record("unique", competitors == [extension], [list(g.table) for g in competitors])
    return report
