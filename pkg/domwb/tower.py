"""
The sequential D∞ tower: ``D_0`` is the lifting of a one-point set and ``D_{n+1}`` is the
exponential ``D_n^{D_n}``, linked by embedding-projection pairs ``(ε_n, π_n)``.

Elements of ``D_n`` are represented according to the tabulation cutoff ``T``:

- ``n <= T``: an index into the enumerated poset of level ``n``;
- ``n == T + 1``: a tuple, the table of a monotone map on the enumerated level ``T``;
- ``n >= T + 2``: a `LazyMap`, a memoized closure from level ``n - 1`` to itself.

Order and equality are decidable up to level ``T + 1``. Above that they are only
sampled, and comparisons come back as a `Verdict`.
"""

import enum
import logging
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from domwb.config import get_default_tab_limit
from domwb.errors import DomwbError
from domwb.exponential import ExponentialPoset, build_exponential, compose
from domwb.finposet import (
    FinPoset,
    MonotoneMap,
    NotDirectedError,
    PropertyReport,
    check_ep_pair,
    enumerate_monotone_maps,
    is_compact,
    is_directed,
    least,
    supremum,
    verify_basis,
)
from domwb.lifting import lifted_poset, lifting_basis

_log = logging.getLogger(__name__)

UNIT = "*"


class LevelOutOfRangeError(DomwbError):
    pass


class LevelNotTabulatedError(DomwbError):
    pass


class MonotonicityViolationError(DomwbError):
    pass


class UndecidableComparisonError(DomwbError):
    pass


class Verdict(enum.Enum):
    EQUAL = "equal"
    LEQ = "leq"
    GEQ = "geq"
    INCOMPARABLE = "incomparable"
    EQUAL_ON_SAMPLES = "equal_on_samples"
    DIFFER = "differ"
    UNKNOWN = "unknown"


class LazyMap:
    """A monotone map above the tabulated levels, given by a closure and memoized."""

    def __init__(self, level: int, fn: Callable):
        self.level = level
        self._fn = fn
        self._cache = {}

    def __call__(self, x):
        try:
            return self._cache[x]
        except KeyError:
            value = self._fn(x)
            self._cache[x] = value
            return value

    def __repr__(self) -> str:
        return f"LazyMap(level={self.level})"


@dataclass(frozen=True)
class TowerElement:
    """A truncated D∞ element ``(σ_0, ..., σ_N)`` with ``π_n(σ_{n+1}) = σ_n``."""

    components: tuple

    @property
    def truncation(self) -> int:
        return len(self.components) - 1


@dataclass(eq=False)
class Tower:
    """
    The levels ``D_0 .. D_N`` with their embedding-projection pairs.

    `levels` and `exponentials` hold the enumerated levels ``0 .. tab_limit``;
    ``exponentials[n]`` is the exponential presentation of level ``n >= 1``
    (``exponentials[0]`` is None). `eps_maps[n]` / `pi_maps[n]` tabulate ``ε_n`` /
    ``π_n`` for ``n < tab_limit``.
    """

    N: int
    tab_limit: int
    levels: list[FinPoset] = field(default_factory=list)
    exponentials: list[ExponentialPoset | None] = field(default_factory=list)
    eps_maps: list[MonotoneMap] = field(default_factory=list)
    pi_maps: list[MonotoneMap] = field(default_factory=list)

    def check_level(self, n: int):
        if not 0 <= n <= self.N:
            e = LevelOutOfRangeError(f"Level {n} is outside 0..{self.N}")
            _log.error(e)
            raise e

    def is_decidable(self, n: int) -> bool:
        return n <= self.tab_limit + 1

    def bottom(self, n: int):
        if n <= self.tab_limit:
            return least(self.levels[n])
        if n == self.tab_limit + 1:
            return (least(self.levels[self.tab_limit]),) * self.levels[self.tab_limit].size
        return LazyMap(n, lambda x: self.bottom(n - 1))

    def apply_fn(self, n: int, f, x):
        """Apply ``f ∈ D_n`` (n >= 1) to ``x ∈ D_{n-1}``."""
        if n <= 0:
            raise LevelOutOfRangeError("Elements of level 0 are not functions")
        if n <= self.tab_limit:
            return self.exponentials[n].maps[f](x)
        if n == self.tab_limit + 1:
            return f[x]
        return f(x)

    def tabulate_fn(self, n: int, fn: Callable):
        """
        The element of ``D_n`` (n >= 1) acting as `fn` on ``D_{n-1}``.

        Raises
        ------
        MonotonicityViolationError
            If `fn` is not monotone on a decidable level.
        """
        if n <= 0:
            raise LevelOutOfRangeError("Level 0 has no function elements")
        if n <= self.tab_limit:
            table = tuple(int(fn(x)) for x in range(self.levels[n - 1].size))
            index = self.exponentials[n].index_of_table(table)
            if index is None:
                e = MonotonicityViolationError(f"Table {table} is not monotone on level {n - 1}")
                _log.error(e)
                raise e
            return index
        if n == self.tab_limit + 1:
            below = self.levels[n - 1]
            table = tuple(int(fn(x)) for x in range(below.size))
            for x, y in np.argwhere(below.leq):
                if not below.leq[table[x], table[y]]:
                    e = MonotonicityViolationError(
                        f"Table {table} is not monotone on level {n - 1} at ({x}, {y})"
                    )
                    _log.error(e)
                    raise e
            return table
        return LazyMap(n, fn)

    def eps(self, n: int, x):
        """``ε_n : D_n → D_{n+1}``."""
        if n < len(self.eps_maps) and isinstance(x, (int, np.integer)):
            return self.eps_maps[n](int(x))
        if n == 0:
            return self.tabulate_fn(1, lambda _: x)
        return self.tabulate_fn(
            n + 1, lambda y: self.eps(n - 1, self.apply_fn(n, x, self.pi(n - 1, y)))
        )

    def pi(self, n: int, x):
        """``π_n : D_{n+1} → D_n``."""
        if n < len(self.pi_maps) and isinstance(x, (int, np.integer)):
            return self.pi_maps[n](int(x))
        if n == 0:
            return self.apply_fn(1, x, self.bottom(0))
        return self.tabulate_fn(
            n, lambda y: self.pi(n - 1, self.apply_fn(n + 1, x, self.eps(n - 1, y)))
        )

    def leq(self, n: int, x, y) -> bool:
        """
        Exact order at a decidable level.

        Raises
        ------
        UndecidableComparisonError
            Above ``tab_limit + 1``.
        """
        if n <= self.tab_limit:
            return self.levels[n].le(x, y)
        if n == self.tab_limit + 1:
            below = self.levels[self.tab_limit]
            return all(below.leq[a, b] for a, b in zip(x, y))
        e = UndecidableComparisonError(
            f"Order on level {n} is not decidable with tab_limit {self.tab_limit}"
        )
        _log.error(e)
        raise e

    def join(self, n: int, elements: Sequence):
        """Binary-or-larger join at level n; every level is a finite lattice."""
        elements = list(elements)
        if n <= self.tab_limit:
            return supremum(self.levels[n], elements)
        if n == self.tab_limit + 1:
            below = self.levels[self.tab_limit]
            return tuple(
                supremum(below, {f[x] for f in elements}) for x in range(below.size)
            )
        return LazyMap(n, lambda x: self.join(n - 1, [self.apply_fn(n, f, x) for f in elements]))

    def samples(self, n: int) -> list:
        """Elements of level n: all of them when enumerated, else ε-images of level T."""
        if n <= self.tab_limit:
            return list(range(self.levels[n].size))
        return [self.eps(n - 1, x) for x in self.samples(n - 1)]

    def name(self, n: int, x) -> str:
        if n <= self.tab_limit:
            return self.levels[n].elements[x]
        if n == self.tab_limit + 1:
            below = self.levels[self.tab_limit]
            return "[" + ",".join(below.elements[v] for v in x) + "]"
        return f"<lazy level {n}>"


def build_tower(N: int, tab_limit: int | None = None, budget: int | None = None) -> Tower:
    """
    Enumerate the levels ``D_0 .. D_{tab_limit}`` and tabulate their ε/π maps.

    Parameters
    ----------
    N : int
        Truncation level.
    tab_limit : int | None, optional
        Last enumerated level, by default the DOMWB_TAB_LIMIT setting, capped at `N`.
    budget : int | None, optional
        Element budget for each level enumeration.

    Returns
    -------
    Tower

    Raises
    ------
    BudgetExceededError
        If a level has more elements than the budget allows.
    """
    if N < 0:
        raise LevelOutOfRangeError(f"Truncation level must be non-negative, got {N}")
    if tab_limit is None:
        tab_limit = get_default_tab_limit()
    tab_limit = min(tab_limit, N)

    tower = Tower(N=N, tab_limit=tab_limit)
    tower.levels.append(lifted_poset([UNIT]).poset)
    tower.exponentials.append(None)
    for n in range(1, tab_limit + 1):
        exponential = build_exponential(tower.levels[n - 1], tower.levels[n - 1], budget=budget)
        tower.exponentials.append(exponential)
        tower.levels.append(exponential.poset)
        _log.info(f"Level {n} has {exponential.size} elements")

    for n in range(tab_limit):
        eps_table = tuple(tower.eps(n, x) for x in range(tower.levels[n].size))
        pi_table = tuple(tower.pi(n, y) for y in range(tower.levels[n + 1].size))
        tower.eps_maps.append(MonotoneMap(tower.levels[n], tower.levels[n + 1], eps_table))
        tower.pi_maps.append(MonotoneMap(tower.levels[n + 1], tower.levels[n], pi_table))
    return tower


def _check_tabulated(tower: Tower, *levels: int):
    for n in levels:
        if n > tower.tab_limit:
            e = LevelNotTabulatedError(f"Level {n} is above tab_limit {tower.tab_limit}")
            _log.error(e)
            raise e


def eps_nm(tower: Tower, n: int, m: int) -> MonotoneMap:
    """The composite embedding ``ε_{n,m} : D_n → D_m`` for ``n <= m``."""
    if n > m:
        raise LevelOutOfRangeError(f"eps_nm needs n <= m, got {n} > {m}")
    _check_tabulated(tower, m)
    if n == m:
        return MonotoneMap.identity(tower.levels[n])
    return compose(eps_nm(tower, n, m - 1), tower.eps_maps[m - 1])


def pi_nm(tower: Tower, n: int, m: int) -> MonotoneMap:
    """The composite projection ``π_{n,m} : D_m → D_n`` for ``n <= m``."""
    if n > m:
        raise LevelOutOfRangeError(f"pi_nm needs n <= m, got {n} > {m}")
    _check_tabulated(tower, m)
    if n == m:
        return MonotoneMap.identity(tower.levels[n])
    return compose(tower.pi_maps[m - 1], pi_nm(tower, n, m - 1))


def embed_to_tower(tower: Tower, n: int, x) -> TowerElement:
    """``ε_{n,∞}(x)`` truncated at N: project below level n, embed above it."""
    tower.check_level(n)
    components = {n: x}
    for j in range(n - 1, -1, -1):
        components[j] = tower.pi(j, components[j + 1])
    for j in range(n + 1, tower.N + 1):
        components[j] = tower.eps(j - 1, components[j - 1])
    return TowerElement(tuple(components[j] for j in range(tower.N + 1)))


def project(tower: Tower, sigma: TowerElement, n: int):
    tower.check_level(n)
    return sigma.components[n]


def least_element(tower: Tower) -> TowerElement:
    return TowerElement(tuple(tower.bottom(n) for n in range(tower.N + 1)))


def tower_sup(tower: Tower, family: Iterable[TowerElement]) -> TowerElement:
    """
    Componentwise supremum of a directed family.

    Raises
    ------
    NotDirectedError
        If the family is empty, or not directed at a decidable level.
    """
    family = list(family)
    if not family:
        raise NotDirectedError("The empty family is not directed")
    components = []
    for n in range(tower.N + 1):
        values = [sigma.components[n] for sigma in family]
        if n <= tower.tab_limit and not is_directed(tower.levels[n], set(values)):
            e = NotDirectedError(f"Family is not directed at level {n}")
            _log.error(e)
            raise e
        components.append(tower.join(n, values))
    return TowerElement(tuple(components))


def compare_elements(tower: Tower, n: int, x, y) -> Verdict:
    """
    Compare two elements of level n.

    Decidable levels give EQUAL, LEQ, GEQ or INCOMPARABLE. Above them the maps are
    compared on `Tower.samples`: DIFFER is a proof of inequality, EQUAL_ON_SAMPLES is not
    a proof of equality.
    """
    if tower.is_decidable(n):
        below, above = tower.leq(n, x, y), tower.leq(n, y, x)
        if below and above:
            return Verdict.EQUAL
        if below:
            return Verdict.LEQ
        if above:
            return Verdict.GEQ
        return Verdict.INCOMPARABLE

    if x is y:
        return Verdict.EQUAL_ON_SAMPLES
    samples = tower.samples(n - 1)
    if not samples:
        return Verdict.UNKNOWN
    verdicts = {
        compare_elements(tower, n - 1, tower.apply_fn(n, x, s), tower.apply_fn(n, y, s))
        for s in samples
    }
    if verdicts <= {Verdict.EQUAL, Verdict.EQUAL_ON_SAMPLES}:
        return Verdict.EQUAL_ON_SAMPLES
    if verdicts & {Verdict.LEQ, Verdict.GEQ, Verdict.INCOMPARABLE, Verdict.DIFFER}:
        return Verdict.DIFFER
    return Verdict.UNKNOWN


def compare_tower_elements(tower: Tower, sigma: TowerElement, tau: TowerElement) -> Verdict:
    """Compatible elements are ordered by their top components."""
    return compare_elements(tower, tower.N, sigma.components[-1], tau.components[-1])


def is_compatible(tower: Tower, sigma: TowerElement) -> bool:
    """π-compatibility, checked on the decidable levels."""
    for n in range(min(tower.N, tower.tab_limit + 1)):
        projected = tower.pi(n, sigma.components[n + 1])
        if compare_elements(tower, n, projected, sigma.components[n]) is not Verdict.EQUAL:
            return False
    return True


def tower_elements(tower: Tower) -> list[TowerElement]:
    """Every element at truncation N; only available when N is enumerated."""
    _check_tabulated(tower, tower.N)
    return [embed_to_tower(tower, tower.N, x) for x in range(tower.levels[tower.N].size)]


def tower_elements_poset(tower: Tower) -> tuple[FinPoset, list[TowerElement]]:
    elements = tower_elements(tower)
    leq = np.array(
        [
            [all(tower.leq(n, a, b) for n, (a, b) in enumerate(zip(s.components, t.components)))
             for t in elements]
            for s in elements
        ],
        dtype=bool,
    )
    names = [tower.levels[tower.N].elements[s.components[-1]] for s in elements]
    return FinPoset(names, leq), elements


def eps_prime(tower: Tower, n: int) -> Callable:
    """
    Read an element of ``D_n`` as a function on truncated D∞ elements.

    For ``n >= 1``, ``f ↦ (σ ↦ embed_to_tower(n - 1, f(σ_{n-1})))``. Level 0 goes
    through ``ε_0``.
    """
    if n == 0:
        return lambda x: eps_prime(tower, 1)(tower.eps(0, x))
    tower.check_level(n)

    def reading(f) -> Callable[[TowerElement], TowerElement]:
        def function(sigma: TowerElement) -> TowerElement:
            return embed_to_tower(tower, n - 1, tower.apply_fn(n, f, sigma.components[n - 1]))

        return function

    return reading


def pi_prime(tower: Tower, n: int) -> Callable:
    """
    Tabulate a function on truncated D∞ elements as an element of ``D_n``.

    For ``n >= 1``, ``F ↦ (x ↦ project(F(embed_to_tower(n - 1, x)), n - 1))``. Level 0
    projects the level-1 reading with ``π_0``.
    """
    if n == 0:
        return lambda F: tower.pi(0, pi_prime(tower, 1)(F))
    if not 1 <= n <= tower.N + 1:
        raise LevelOutOfRangeError(f"pi_prime needs 1 <= n <= {tower.N + 1}, got {n}")

    def tabulate(F: Callable[[TowerElement], TowerElement]):
        return tower.tabulate_fn(
            n, lambda x: F(embed_to_tower(tower, n - 1, x)).components[n - 1]
        )

    return tabulate


def step_function(tower: Tower, m: int, a: int, b: int) -> int:
    """The step map ``x ↦ b if a ⊑ x else ⊥`` as an element of ``D_{m+1}``."""
    _check_tabulated(tower, m + 1)
    below = tower.levels[m]
    bottom = least(below)
    return tower.tabulate_fn(m + 1, lambda x: b if below.le(a, x) else bottom)


def step_functions(tower: Tower, m: int) -> dict[tuple[int, int], int]:
    below = tower.levels[m]
    return {
        (a, b): step_function(tower, m, a, b) for a in range(below.size) for b in range(below.size)
    }


def check_step_equivalence(tower: Tower, m: int) -> PropertyReport:
    """``(a ⇒ b) ⊑ f ⟺ b ⊑ f(a)`` for every a, b and every f at level m + 1."""
    level = tower.levels[m + 1]
    below = tower.levels[m]
    failures = [
        (a, b, f)
        for (a, b), step in step_functions(tower, m).items()
        for f in range(level.size)
        if level.le(step, f) != below.le(b, tower.apply_fn(m + 1, f, a))
    ]
    report = PropertyReport()
    report.record("step_equivalence", not failures, failures[:1])
    return report


def step_basis(tower: Tower, n: int) -> tuple[list[int], dict[int, list[int]]]:
    """
    A basis of ``D_n`` made of finite joins of step functions from level n - 1.

    Level 0 uses the lifting basis. Returns the basis elements and the approximating
    basis indices for every element of ``D_n``.

    Raises
    ------
    LevelNotTabulatedError
        If n is above the tabulation cutoff.
    """
    _check_tabulated(tower, n)
    level = tower.levels[n]
    if n == 0:
        return lifting_basis(lifted_poset([UNIT]))

    generators = sorted(set(step_functions(tower, n - 1).values()))
    closed = set(generators)
    frontier = list(generators)
    while frontier:
        new = []
        for x in frontier:
            for y in list(closed):
                # NoSupremumError here would mean a level is not a lattice.
                joined = supremum(level, {x, y})
                if joined not in closed:
                    closed.add(joined)
                    new.append(joined)
        frontier = new

    beta = sorted(closed)
    approx = {
        x: [b for b, element in enumerate(beta) if level.le(element, x)]
        for x in range(level.size)
    }
    _log.info(f"Step basis of level {n} has {len(beta)} elements")
    return beta, approx


def check_join_of_steps(tower: Tower, n: int) -> PropertyReport:
    """Every element of ``D_n`` (n >= 1) is the join of the step functions below it."""
    _check_tabulated(tower, n)
    level = tower.levels[n]
    steps = set(step_functions(tower, n - 1).values())
    failures = []
    for f in range(level.size):
        below = {s for s in steps if level.le(s, f)}
        if supremum(level, below) != f:
            failures.append(f)
    report = PropertyReport()
    report.record("join_of_steps", not failures, failures[:1])
    report.record(
        "steps_compact",
        all(is_compact(level, s) for s in steps),
        [s for s in steps if not is_compact(level, s)][:1],
    )
    return report


def tower_basis(tower: Tower, n: int) -> list[TowerElement]:
    beta, _ = step_basis(tower, n)
    return [embed_to_tower(tower, n, b) for b in beta]


def check_tower(tower: Tower) -> PropertyReport:
    """
    Embedding-projection laws, functoriality of the composites and the basis checks on
    every enumerated level.
    """
    report = PropertyReport()
    T = tower.tab_limit
    for n in range(T):
        report.merge(check_ep_pair(tower.eps_maps[n], tower.pi_maps[n]), prefix=f"level_{n}.")

    functorial = []
    for k in range(T + 1):
        for n in range(k, T + 1):
            for m in range(n, T + 1):
                if compose(eps_nm(tower, k, n), eps_nm(tower, n, m)) != eps_nm(tower, k, m):
                    functorial.append(["eps", k, n, m])
                if compose(pi_nm(tower, n, m), pi_nm(tower, k, n)) != pi_nm(tower, k, m):
                    functorial.append(["pi", k, n, m])
    report.record("functoriality", not functorial, functorial[:1])

    identity = [
        n for n in range(T + 1) if eps_nm(tower, n, n) != MonotoneMap.identity(tower.levels[n])
    ]
    report.record("composite_identity", not identity, identity[:1])

    strict = [
        [n, m]
        for n in range(T + 1)
        for m in range(n, T + 1)
        if not pi_nm(tower, n, m).is_strict()
    ]
    report.record("composite_strict", not strict, strict[:1])

    for n in range(1, T + 1):
        report.merge(check_join_of_steps(tower, n), prefix=f"level_{n}.")
        beta, approx = step_basis(tower, n)
        report.record(f"level_{n}.step_basis", verify_basis(tower.levels[n], beta, approx).passed)
    for m in range(T):
        report.merge(check_step_equivalence(tower, m), prefix=f"level_{m}.")

    top = embed_to_tower(tower, 0, tower.levels[0].index("eta(*)"))
    bottom = least_element(tower)
    collapsed = [
        n
        for n in range(tower.N + 1)
        if compare_elements(tower, n, top.components[n], bottom.components[n])
        in (Verdict.EQUAL, Verdict.EQUAL_ON_SAMPLES)
    ]
    report.record("non_trivial", not collapsed, collapsed[:1])
    return report


@dataclass(frozen=True)
class Cone:
    """Maps ``g_n : E → D_n`` for n <= N with ``π_n ∘ g_{n+1} = g_n``."""

    apex: FinPoset
    legs: tuple[MonotoneMap, ...]


@dataclass(frozen=True)
class Cocone:
    """Maps ``h_n : D_n → E`` for n <= N with ``h_{n+1} ∘ ε_n = h_n``."""

    apex: FinPoset
    legs: tuple[MonotoneMap, ...]


def cone_from_top(tower: Tower, g: MonotoneMap) -> Cone:
    """The cone whose legs are the projections of a map ``E → D_N``."""
    return Cone(g.dom, tuple(compose(g, pi_nm(tower, n, tower.N)) for n in range(tower.N + 1)))


def cocone_from_top(tower: Tower, h: MonotoneMap) -> Cocone:
    """The cocone whose legs are the restrictions of a map ``D_N → E`` along the embeddings."""
    return Cocone(h.cod, tuple(compose(eps_nm(tower, n, tower.N), h) for n in range(tower.N + 1)))


def limit_mediator(tower: Tower, cone: Cone) -> MonotoneMap:
    """``e ↦ (g_0(e), ..., g_N(e))``, as a map into the truncated D∞ poset."""
    poset, elements = tower_elements_poset(tower)
    index = {sigma.components: i for i, sigma in enumerate(elements)}
    table = tuple(
        index[tuple(leg(e) for leg in cone.legs)] for e in range(cone.apex.size)
    )
    return MonotoneMap(cone.apex, poset, table)


def colimit_mediator(tower: Tower, cocone: Cocone) -> MonotoneMap:
    """``σ ↦ ⊔_n h_n(σ_n)``."""
    poset, elements = tower_elements_poset(tower)
    table = tuple(
        supremum(cocone.apex, {leg(c) for leg, c in zip(cocone.legs, sigma.components)})
        for sigma in elements
    )
    return MonotoneMap(poset, cocone.apex, table)


def check_limit(tower: Tower, cone: Cone, budget: int | None = None) -> PropertyReport:
    """The mediator commutes with the projections and is the only monotone map that does."""
    report = PropertyReport()
    mediator = limit_mediator(tower, cone)
    poset, elements = tower_elements_poset(tower)

    def commutes(u: MonotoneMap) -> bool:
        return all(
            elements[u(e)].components[n] == cone.legs[n](e)
            for n in range(tower.N + 1)
            for e in range(cone.apex.size)
        )

    report.record("commutes", commutes(mediator))
    competitors = [u for u in enumerate_monotone_maps(cone.apex, poset, budget) if commutes(u)]
    report.record("unique", competitors == [mediator], [list(u.table) for u in competitors])
    return report


def check_colimit(tower: Tower, cocone: Cocone, budget: int | None = None) -> PropertyReport:
    """The mediator commutes with the embeddings and is the only monotone map that does."""
    report = PropertyReport()
    mediator = colimit_mediator(tower, cocone)
    poset, elements = tower_elements_poset(tower)
    index = {sigma.components: i for i, sigma in enumerate(elements)}

    def commutes(u: MonotoneMap) -> bool:
        return all(
            u(index[embed_to_tower(tower, n, x).components]) == cocone.legs[n](x)
            for n in range(tower.N + 1)
            for x in range(tower.levels[n].size)
        )

    report.record("commutes", commutes(mediator))
    competitors = [u for u in enumerate_monotone_maps(poset, cocone.apex, budget) if commutes(u)]
    report.record("unique", competitors == [mediator], [list(u.table) for u in competitors])
    return report
