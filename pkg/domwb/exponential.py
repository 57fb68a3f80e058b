"""
Exponential posets: monotone maps between finite posets, ordered pointwise.
"""

import logging
from dataclasses import dataclass
from typing import Iterable

import numpy as np
from toolz import unique

from domwb.errors import DomwbError
from domwb.finposet import (
    FinPoset,
    MonotoneMap,
    NotDirectedError,
    UnknownElementError,
    enumerate_monotone_maps,
    is_directed,
    least,
    supremum,
)

_log = logging.getLogger(__name__)


class DomainMismatchError(DomwbError):
    pass


def map_name(f: MonotoneMap) -> str:
    return "[" + ",".join(f.cod.elements[v] for v in f.table) + "]"


@dataclass(frozen=True, eq=False)
class ExponentialPoset:
    """
    The poset ``E^D`` of monotone maps from `dom` to `cod`.

    `poset` is the exponential as a FinPoset whose element ``i`` is ``maps[i]``.
    """

    dom: FinPoset
    cod: FinPoset
    maps: tuple[MonotoneMap, ...]
    poset: FinPoset

    @property
    def size(self) -> int:
        return len(self.maps)

    def index(self, f: MonotoneMap) -> int:
        try:
            return self._index[f.table]
        except KeyError:
            raise UnknownElementError(f"{f!r} is not a monotone map of this exponential")

    index_of = index

    def index_of_table(self, table: tuple[int, ...]) -> int | None:
        return self._index.get(tuple(table))

    @property
    def _index(self) -> dict[tuple[int, ...], int]:
        cached = self.__dict__.get("_index_cache")
        if cached is None:
            cached = {f.table: i for i, f in enumerate(self.maps)}
            object.__setattr__(self, "_index_cache", cached)
        return cached

    def least_map(self) -> MonotoneMap | None:
        bottom = least(self.poset)
        return None if bottom is None else self.maps[bottom]


def strict_maps(exp: ExponentialPoset) -> list[MonotoneMap]:
    """Maps of the exponential that send the least element of `dom` to that of `cod`."""
    return [f for f in exp.maps if f.is_strict()]


def pointwise_leq(f: MonotoneMap, g: MonotoneMap) -> bool:
    return all(f.cod.leq[a, b] for a, b in zip(f.table, g.table))


def build_exponential(dom: FinPoset, cod: FinPoset, budget: int | None = None) -> ExponentialPoset:
    """
    Build the exponential ``cod^dom``.

    On finite posets every monotone map preserves directed suprema, so the carrier is the
    set of all monotone maps. Maps come out in lexicographic order of their tables; when
    `cod` is pointed this puts the constantly-⊥ map first.

    Parameters
    ----------
    dom : FinPoset
    cod : FinPoset
    budget : int | None, optional
        Passed on to `enumerate_monotone_maps`.

    Returns
    -------
    ExponentialPoset
    """
    maps = tuple(enumerate_monotone_maps(dom, cod, budget=budget))
    tables = np.array([f.table for f in maps], dtype=np.int64).reshape(len(maps), dom.size)
    if dom.size:
        # leq[i, j] = all_x cod.leq[f_i(x), f_j(x)]
        leq = cod.leq[tables[:, None, :], tables[None, :, :]].all(axis=2)
    else:
        leq = np.ones((len(maps), len(maps)), dtype=bool)
    poset = FinPoset([map_name(f) for f in maps], leq)
    _log.info(f"Built exponential with {len(maps)} elements")
    return ExponentialPoset(dom=dom, cod=cod, maps=maps, poset=poset)


def evaluate(f: MonotoneMap, x: int) -> int:
    """Apply a tabulated map to an element index."""
    if not 0 <= x < f.dom.size:
        raise UnknownElementError(f"Index {x} is outside the domain of {f!r}")
    return f(x)


def pointwise_sup(maps: Iterable[MonotoneMap]) -> MonotoneMap:
    """
    Supremum of a directed family of maps, computed pointwise.

    Raises
    ------
    NotDirectedError
        If the family is empty or not directed in the pointwise order.
    """
    maps = list(maps)
    if not maps:
        raise NotDirectedError("The empty family is not directed")
    dom, cod = maps[0].dom, maps[0].cod

    members = list(unique(f.table for f in maps))
    leq = np.array(
        [[all(cod.leq[a, b] for a, b in zip(f, g)) for g in members] for f in members],
        dtype=bool,
    )
    if not leq.all(axis=0).any():
        e = NotDirectedError(f"Family of {len(members)} maps is not directed pointwise")
        _log.error(e)
        raise e

    table = tuple(supremum(cod, {f[x] for f in members}) for x in range(dom.size))
    return MonotoneMap(dom, cod, table)


def exponential_sup(exp: ExponentialPoset, maps: Iterable[MonotoneMap]) -> MonotoneMap:
    """Directed supremum computed by the finposet oracle inside the exponential poset."""
    indices = frozenset(exp.index(f) for f in maps)
    if not is_directed(exp.poset, indices):
        raise NotDirectedError(f"Maps {sorted(indices)} are not directed")
    return exp.maps[supremum(exp.poset, indices)]


def compose(f: MonotoneMap, g: MonotoneMap) -> MonotoneMap:
    """
    Diagrammatic composition: ``f`` first, then ``g`` (that is ``g ∘ f``).

    Raises
    ------
    DomainMismatchError
        If the codomain of `f` is not the domain of `g`.
    """
    if f.cod != g.dom:
        e = DomainMismatchError(
            f"Cannot compose: codomain of {f!r} has {f.cod.size} elements, "
            f"domain of {g!r} has {g.dom.size}"
        )
        _log.error(e)
        raise e
    return MonotoneMap(f.dom, g.cod, tuple(g.table[v] for v in f.table))
