"""
Finite posets with exhaustive order-theoretic oracles.

Elements are identified by index; names are labels only. Subsets of the carrier are
``frozenset``s of indices. Every family on a finite carrier has the same suprema as its
image, so directed families are represented by their image subsets.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

import networkx as nx
import numpy as np
from tqdm import tqdm

from domwb.config import get_enumeration_budget
from domwb.errors import DomwbError

_log = logging.getLogger(__name__)

Subset = frozenset[int]


class MalformedPosetError(DomwbError):
    pass


class UnknownElementError(DomwbError, KeyError):
    pass


class NotDirectedError(DomwbError):
    pass


class BudgetExceededError(DomwbError):
    pass


class NoSupremumError(DomwbError):
    def __init__(self, subset: Iterable[int], directed: bool):
        self.subset = frozenset(subset)
        self.directed = directed
        super().__init__(
            f"Subset {sorted(self.subset)} has no least upper bound (directed={directed})"
        )


class FinPoset:
    """
    Finite poset given by an explicit order table.

    The order is stored as a read-only boolean ``(n, n)`` numpy array where
    ``leq[x, y]`` is True iff ``x ⊑ y``. The constructor only checks the shape of the
    table; use `check_poset_axioms` to check that it is a partial order.
    """

    def __init__(self, elements: Sequence[str], leq):
        elements = tuple(str(element) for element in elements)
        try:
            table = np.array(leq, dtype=bool)
        except (TypeError, ValueError) as error:
            raise MalformedPosetError(f"Order table is not a boolean matrix: {error}")

        n = len(elements)
        if table.shape != (n, n):
            raise MalformedPosetError(
                f"Order table has shape {table.shape}, expected ({n}, {n}) for {n} elements"
            )
        if len(set(elements)) != n:
            raise MalformedPosetError(f"Element names are not unique: {list(elements)}")

        table.flags.writeable = False
        self.elements = elements
        self.leq = table

    @classmethod
    def chain(cls, n: int, names: Sequence[str] | None = None) -> "FinPoset":
        names = names if names is not None else [str(i) for i in range(n)]
        return cls(names, np.triu(np.ones((n, n), dtype=bool)))

    @classmethod
    def antichain(cls, n: int, names: Sequence[str] | None = None) -> "FinPoset":
        names = names if names is not None else [str(i) for i in range(n)]
        return cls(names, np.eye(n, dtype=bool))

    @classmethod
    def from_covers(cls, elements: Sequence[str], covers: Iterable[tuple[int, int]]) -> "FinPoset":
        """Reflexive-transitive closure of the cover pairs ``(x, y)``, read as ``x ⊑ y``."""
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(elements)))
        graph.add_edges_from(covers)
        closure = nx.transitive_closure(graph, reflexive=True)
        leq = np.zeros((len(elements), len(elements)), dtype=bool)
        for x, y in closure.edges:
            leq[x, y] = True
        return cls(elements, leq)

    @property
    def size(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.size))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinPoset):
            return NotImplemented
        return self.elements == other.elements and np.array_equal(self.leq, other.leq)

    def __hash__(self) -> int:
        return hash((self.elements, self.leq.tobytes()))

    def __repr__(self) -> str:
        return f"FinPoset(elements={list(self.elements)!r})"

    def le(self, x: int, y: int) -> bool:
        return bool(self.leq[x, y])

    def index(self, name: str) -> int:
        try:
            return self.elements.index(name)
        except ValueError:
            raise UnknownElementError(f"No element named {name!r} in {self!r}")

    def name(self, x: int) -> str:
        return self.elements[x]

    def upper_bounds(self, subset: Iterable[int]) -> list[int]:
        members = sorted(subset)
        if not members:
            return list(range(self.size))
        return np.flatnonzero(self.leq[members].all(axis=0)).tolist()

    def check_subset(self, subset: Iterable[int]) -> Subset:
        subset = frozenset(subset)
        for x in subset:
            if not 0 <= x < self.size:
                raise UnknownElementError(f"Index {x} is outside the carrier of {self!r}")
        return subset

    @cached_property
    def directed_subsets(self) -> tuple[tuple[Subset, int], ...]:
        """
        Every nonempty directed subset together with its maximum.

        Iterates over all 2^n subsets, so only meant for the oracle sizes (n up to ~20).
        """
        n = self.size
        found = []
        for mask in range(1, 1 << n):
            members = [i for i in range(n) if mask >> i & 1]
            top = _maximum(self, members)
            if top is not None:
                found.append((frozenset(members), top))
        _log.debug(f"{self!r} has {len(found)} directed subsets")
        return tuple(found)


def _maximum(poset: FinPoset, members: list[int]) -> int | None:
    # A finite subset is directed iff it is inhabited and contains an upper bound of itself.
    if not members:
        return None
    block = poset.leq[np.ix_(members, members)]
    tops = np.flatnonzero(block.all(axis=0))
    if tops.size == 0:
        return None
    return members[int(tops[0])]


@dataclass(frozen=True)
class AxiomResult:
    passed: bool
    witness: tuple[int, ...] | None = None

    def to_dict(self) -> dict:
        return dict(passed=self.passed, witness=list(self.witness) if self.witness else None)


@dataclass(frozen=True)
class AxiomReport:
    reflexive: AxiomResult
    antisymmetric: AxiomResult
    transitive: AxiomResult

    @property
    def passed(self) -> bool:
        return self.reflexive.passed and self.antisymmetric.passed and self.transitive.passed

    def to_dict(self) -> dict:
        return dict(
            passed=self.passed,
            reflexive=self.reflexive.to_dict(),
            antisymmetric=self.antisymmetric.to_dict(),
            transitive=self.transitive.to_dict(),
        )


def check_poset_axioms(poset: FinPoset) -> AxiomReport:
    """
    Check reflexivity, antisymmetry and transitivity of the order table.

    A failing axiom carries a counterexample: ``(x,)`` for reflexivity, ``(a, b)`` for
    antisymmetry and ``(x, y, z)`` for transitivity.
    """
    leq = poset.leq
    n = poset.size

    missing_diagonal = np.flatnonzero(~np.diagonal(leq))
    if missing_diagonal.size:
        reflexive = AxiomResult(False, (int(missing_diagonal[0]),))
    else:
        reflexive = AxiomResult(True)

    symmetric_pairs = np.argwhere(leq & leq.T & ~np.eye(n, dtype=bool))
    if symmetric_pairs.size:
        a, b = symmetric_pairs[0]
        antisymmetric = AxiomResult(False, (int(a), int(b)))
    else:
        antisymmetric = AxiomResult(True)

    as_int = leq.astype(np.int64)
    broken = np.argwhere(((as_int @ as_int) > 0) & ~leq)
    if broken.size:
        x, z = (int(i) for i in broken[0])
        y = int(np.flatnonzero(leq[x] & leq[:, z])[0])
        transitive = AxiomResult(False, (x, y, z))
    else:
        transitive = AxiomResult(True)

    return AxiomReport(reflexive=reflexive, antisymmetric=antisymmetric, transitive=transitive)


def is_directed(poset: FinPoset, subset: Iterable[int]) -> bool:
    """
    True iff the subset is inhabited and every pair in it has an upper bound in it.

    Parameters
    ----------
    poset : FinPoset
    subset : Iterable[int]
        Element indices.

    Returns
    -------
    bool
    """
    members = sorted(poset.check_subset(subset))
    return _maximum(poset, members) is not None


def supremum(poset: FinPoset, subset: Iterable[int]) -> int:
    """
    Least upper bound of a subset.

    The join is returned whenever it exists, directed or not; for a directed subset it is
    the maximum of the subset.

    Raises
    ------
    NoSupremumError
        If the subset has no least upper bound. The error records whether the subset was
        directed.
    """
    subset = poset.check_subset(subset)
    bounds = poset.upper_bounds(subset)
    for candidate in bounds:
        if poset.leq[candidate, bounds].all():
            if subset and not is_directed(poset, subset):
                _log.debug(f"Join of non-directed subset {sorted(subset)} is {candidate}")
            return candidate
    raise NoSupremumError(subset, directed=is_directed(poset, subset))


def least(poset: FinPoset) -> int | None:
    """Index of the least element, or None if the poset is not pointed."""
    bottoms = np.flatnonzero(poset.leq.all(axis=1))
    if bottoms.size == 0:
        return None
    return int(bottoms[0])


def way_below(poset: FinPoset, x: int, y: int) -> bool:
    """
    Decide ``x ≪ y`` by quantifying over every nonempty directed subset.

    ``x ≪ y`` holds iff for every directed ``S`` with ``y ⊑ ⊔S`` some ``s ∈ S`` has
    ``x ⊑ s``. Complexity is O(2^n) in the size of the poset.
    """
    for subset, top in poset.directed_subsets:
        if poset.leq[y, top] and not any(poset.leq[x, s] for s in subset):
            return False
    return True


def is_compact(poset: FinPoset, x: int) -> bool:
    return way_below(poset, x, x)


def way_below_matrix(poset: FinPoset) -> np.ndarray:
    n = poset.size
    matrix = np.zeros((n, n), dtype=bool)
    for x in range(n):
        for y in range(n):
            matrix[x, y] = way_below(poset, x, y)
    matrix.flags.writeable = False
    return matrix


@dataclass
class PropertyReport:
    """Named boolean checks, each with an optional counterexample."""

    checks: dict[str, bool] = field(default_factory=dict)
    counterexamples: dict[str, object] = field(default_factory=dict)

    def record(self, name: str, passed: bool, counterexample=None):
        self.checks[name] = bool(passed)
        if not passed and counterexample is not None:
            self.counterexamples[name] = counterexample

    def merge(self, other: "PropertyReport", prefix: str = ""):
        for name, passed in other.checks.items():
            self.record(prefix + name, passed, other.counterexamples.get(name))

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return dict(
            passed=self.passed,
            checks=dict(self.checks),
            counterexamples={k: _jsonable(v) for k, v in self.counterexamples.items()},
        )


def _jsonable(value):
    if isinstance(value, (frozenset, set)):
        return sorted(_jsonable(v) for v in value)
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)
    return value


def _first_pair(mask: np.ndarray) -> tuple[int, ...] | None:
    hits = np.argwhere(mask)
    if hits.size == 0:
        return None
    return tuple(int(i) for i in hits[0])


def _bool_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return (a.astype(np.int64) @ b.astype(np.int64)) > 0


def check_way_below_properties(poset: FinPoset, matrix: np.ndarray | None = None) -> PropertyReport:
    """
    Check the way-below property list on a finite poset.

    (ii) x ≪ y implies x ⊑ y; (iii) x ⊑ y ≪ v ⊑ w implies x ≪ w; (iv) antisymmetry;
    (v) transitivity; plus the finite-case collapse ``≪ = ⊑``.
    """
    wb = way_below_matrix(poset) if matrix is None else matrix
    leq = poset.leq
    report = PropertyReport()

    report.record("below_implies_leq", not (wb & ~leq).any(), _first_pair(wb & ~leq))

    sandwiched = _bool_product(_bool_product(leq, wb), leq)
    report.record("sandwich", not (sandwiched & ~wb).any(), _first_pair(sandwiched & ~wb))

    both_ways = wb & wb.T & ~np.eye(poset.size, dtype=bool)
    report.record("antisymmetric", not both_ways.any(), _first_pair(both_ways))

    composed = _bool_product(wb, wb)
    report.record("transitive", not (composed & ~wb).any(), _first_pair(composed & ~wb))

    report.record("finite_collapse", np.array_equal(wb, leq), _first_pair(wb != leq))
    return report


def check_order_from_way_below(poset: FinPoset) -> PropertyReport:
    """Check ``x ⊑ y ⟺ ∀b. b ≪ x → b ≪ y`` with the identity basis."""
    wb = way_below_matrix(poset)
    n = poset.size
    derived = np.zeros((n, n), dtype=bool)
    for x in range(n):
        for y in range(n):
            derived[x, y] = bool(np.all(~wb[:, x] | wb[:, y]))
    report = PropertyReport()
    report.record(
        "order_from_way_below",
        np.array_equal(derived, poset.leq),
        _first_pair(derived != poset.leq),
    )
    return report


@dataclass(frozen=True, eq=False)
class MonotoneMap:
    """
    Tabulated function between finite posets: ``table[x]`` is the image of ``x``.

    The constructor checks the shape of the table only; `MonotoneMap.checked` also
    rejects tables that are not order preserving.
    """

    dom: FinPoset
    cod: FinPoset
    table: tuple[int, ...]

    def __post_init__(self):
        table = tuple(int(v) for v in self.table)
        object.__setattr__(self, "table", table)
        if len(table) != self.dom.size:
            raise MalformedPosetError(
                f"Map table has {len(table)} entries for a domain of {self.dom.size} elements"
            )
        for value in table:
            if not 0 <= value < self.cod.size:
                raise MalformedPosetError(f"Map value {value} outside codomain {self.cod!r}")

    @classmethod
    def checked(cls, dom: FinPoset, cod: FinPoset, table: Sequence[int]) -> "MonotoneMap":
        f = cls(dom, cod, tuple(table))
        if not f.is_monotone():
            raise MalformedPosetError(f"Table {f.table} is not monotone")
        return f

    @classmethod
    def identity(cls, poset: FinPoset) -> "MonotoneMap":
        return cls(poset, poset, tuple(range(poset.size)))

    @classmethod
    def constant(cls, dom: FinPoset, cod: FinPoset, value: int) -> "MonotoneMap":
        return cls(dom, cod, (value,) * dom.size)

    def __call__(self, x: int) -> int:
        return self.table[x]

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonotoneMap):
            return NotImplemented
        return self.table == other.table and self.dom == other.dom and self.cod == other.cod

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        return f"MonotoneMap({self.table})"

    def image(self, subset: Iterable[int]) -> Subset:
        return frozenset(self.table[x] for x in subset)

    def is_monotone(self) -> bool:
        pairs = np.argwhere(self.dom.leq)
        return all(self.cod.leq[self.table[x], self.table[y]] for x, y in pairs)

    def is_strict(self) -> bool:
        bottom, cod_bottom = least(self.dom), least(self.cod)
        if bottom is None or cod_bottom is None:
            return False
        return self.table[bottom] == cod_bottom

    def is_deflation(self) -> bool:
        if self.dom != self.cod:
            return False
        return all(self.dom.leq[self.table[x], x] for x in range(self.dom.size))

    def preserves_directed_sups(self) -> bool:
        """Scott continuity checked over every directed subset of the domain."""
        for subset, top in self.dom.directed_subsets:
            if supremum(self.cod, self.image(subset)) != self.table[top]:
                return False
        return True


def enumerate_monotone_maps(
    dom: FinPoset, cod: FinPoset, budget: int | None = None
) -> list[MonotoneMap]:
    """
    All order-preserving maps ``dom → cod`` in lexicographic order of their tables.

    Parameters
    ----------
    dom : FinPoset
    cod : FinPoset
    budget : int | None, optional
        Maximum number of maps to produce, by default the DOMWB_BUDGET setting.

    Returns
    -------
    list[MonotoneMap]

    Raises
    ------
    BudgetExceededError
        If more than `budget` maps exist.
    """
    if budget is None:
        budget = get_enumeration_budget()

    n = dom.size
    below = [[j for j in range(i) if dom.leq[j, i]] for i in range(n)]
    above = [[j for j in range(i) if dom.leq[i, j]] for i in range(n)]
    table = [0] * n
    found: list[MonotoneMap] = []

    def extend(i: int):
        if i == n:
            yield tuple(table)
            return
        allowed = np.ones(cod.size, dtype=bool)
        for j in below[i]:
            allowed &= cod.leq[table[j]]
        for j in above[i]:
            allowed &= cod.leq[:, table[j]]
        for candidate in np.flatnonzero(allowed):
            table[i] = int(candidate)
            yield from extend(i + 1)

    with tqdm(
        desc=f"Monotone maps {dom.size} -> {cod.size}",
        unit="map",
        disable=not _log.isEnabledFor(logging.INFO),
    ) as progress:
        for entry in extend(0):
            if len(found) >= budget:
                e = BudgetExceededError(
                    f"More than {budget} monotone maps from a {dom.size}-element poset "
                    f"to a {cod.size}-element poset"
                )
                _log.error(e)
                raise e
            found.append(MonotoneMap(dom, cod, entry))
            progress.update(1)

    _log.info(f"Enumerated {len(found)} monotone maps {dom.size} -> {cod.size}")
    return found


@dataclass
class BasisReport:
    passed: bool
    failures: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return dict(passed=self.passed, failures=_jsonable(self.failures))


def canonical_approximations(poset: FinPoset, beta: Sequence[int]) -> dict[int, list[int]]:
    """Approximating sets ``{b : β(b) ≪ x}`` for every element ``x``."""
    return {
        x: [b for b, element in enumerate(beta) if way_below(poset, element, x)]
        for x in range(poset.size)
    }


def verify_basis(
    poset: FinPoset, beta: Sequence[int], approx: Mapping[int, Iterable[int]]
) -> BasisReport:
    """
    Check that ``beta`` with the approximating sets ``approx`` is a basis.

    For each element ``x`` the image of ``approx[x]`` under ``beta`` must be directed,
    its supremum must be ``x`` and every member must be way below ``x``.

    Parameters
    ----------
    poset : FinPoset
    beta : Sequence[int]
        ``beta[b]`` is the element of `poset` named by basis index ``b``.
    approx : Mapping[int, Iterable[int]]
        Basis indices approximating each element.

    Returns
    -------
    BasisReport
    """
    failures = []
    for x in range(poset.size):
        indices = list(approx.get(x, ()))
        image = frozenset(beta[b] for b in indices)
        if not image:
            failures.append(dict(element=x, reason="empty approximating family"))
            continue
        if not is_directed(poset, image):
            failures.append(dict(element=x, reason="not directed", family=sorted(image)))
            continue
        top = supremum(poset, image)
        if top != x:
            failures.append(dict(element=x, reason="supremum differs", supremum=top))
            continue
        for b in indices:
            if not way_below(poset, beta[b], x):
                failures.append(dict(element=x, reason="not way below", basis_index=b))
                break
    return BasisReport(passed=not failures, failures=failures)


def is_algebraic_basis(
    poset: FinPoset, beta: Sequence[int], approx: Mapping[int, Iterable[int]]
) -> BasisReport:
    """`verify_basis` plus compactness of every basis element."""
    report = verify_basis(poset, beta, approx)
    for b, element in enumerate(beta):
        if not is_compact(poset, element):
            report.failures.append(dict(basis_index=b, reason="basis element not compact"))
    report.passed = not report.failures
    return report


def check_interpolation(poset: FinPoset, beta: Sequence[int]) -> PropertyReport:
    """Nullary, unary and binary interpolation of a basis, exhaustively."""
    wb = way_below_matrix(poset)
    images = sorted(set(beta))
    report = PropertyReport()

    nullary = [x for x in range(poset.size) if not any(wb[b, x] for b in images)]
    report.record("nullary", not nullary, nullary[:1])

    unary = [
        (x, y)
        for x in range(poset.size)
        for y in range(poset.size)
        if wb[x, y] and not any(wb[x, b] and wb[b, y] for b in images)
    ]
    report.record("unary", not unary, unary[:1])

    binary = [
        (x, y, z)
        for z in range(poset.size)
        for x, y in combinations(range(poset.size), 2)
        if wb[x, z] and wb[y, z] and not any(wb[x, b] and wb[y, b] and wb[b, z] for b in images)
    ]
    report.record("binary", not binary, binary[:1])
    return report


def check_ep_pair(eps: MonotoneMap, pi: MonotoneMap) -> PropertyReport:
    """
    Embedding-projection laws for ``eps : D → E`` and ``pi : E → D``.

    ``pi ∘ eps = id``, ``eps ∘ pi`` is a deflation, and ``pi`` is strict when both
    posets are pointed.
    """
    report = PropertyReport()
    section = [x for x in range(eps.dom.size) if pi(eps(x)) != x]
    report.record("section", not section, section[:1])

    deflation = [y for y in range(pi.dom.size) if not pi.dom.leq[eps(pi(y)), y]]
    report.record("deflation", not deflation, deflation[:1])

    if least(pi.dom) is not None and least(pi.cod) is not None:
        report.record("strict", pi.is_strict(), [least(pi.dom)])
    report.record("monotone", eps.is_monotone() and pi.is_monotone())
    return report


def hasse_edges(poset: FinPoset) -> list[tuple[int, int]]:
    """Cover pairs ``(x, y)`` (``x`` covered by ``y``), via transitive reduction."""
    graph = nx.DiGraph()
    graph.add_nodes_from(range(poset.size))
    graph.add_edges_from(
        (int(x), int(y)) for x, y in np.argwhere(poset.leq) if x != y
    )
    reduced = nx.transitive_reduction(graph)
    return sorted(reduced.edges)


def to_dot(poset: FinPoset, name: str = "poset") -> str:
    """DOT source of the Hasse diagram, drawn bottom to top."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for x in range(poset.size):
        label = poset.elements[x].replace('"', '\\"')
        lines.append(f'  n{x} [label="{label}"];')
    for x, y in hasse_edges(poset):
        lines.append(f"  n{x} -> n{y};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def generate_posets(n: int) -> Iterator[FinPoset]:
    """
    Every partial order on ``{0, ..., n-1}`` contained in the usual order of the integers.

    Every finite poset is isomorphic to one of these (label along a linear extension),
    so this covers all n-element posets up to isomorphism, with repetitions.
    """
    pairs = list(combinations(range(n), 2))
    names = [f"p{i}" for i in range(n)]
    for mask in range(1 << len(pairs)):
        leq = np.eye(n, dtype=bool)
        for bit, (x, y) in enumerate(pairs):
            if mask >> bit & 1:
                leq[x, y] = True
        if not (_bool_product(leq, leq) & ~leq).any():
            yield FinPoset(names, leq)


def generate_posets_up_to(max_size: int) -> Iterator[FinPoset]:
    for n in range(1, max_size + 1):
        yield from generate_posets(n)
