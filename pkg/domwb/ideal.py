"""
Abstract bases with a decidable order and their rounded ideal completions.

Ideals are never materialized over infinite bases. An ideal is one of

- `Principal(b)`: the elements strictly below ``b``, ``{y : y ≺ b}``;
- `Generated(chain)`: the union of the principal ideals of an ascending chain;
- `DownSet(members)`: an explicit finite set, for finite bases.

Queries that cannot be settled within the inspection depth answer `Truth.UNKNOWN`.
"""

import enum
import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Hashable, Sequence

import numpy as np
from toolz import unique

from domwb.config import get_enumeration_budget
from domwb.dyadics import (
    density_witness,
    endpoint_witnesses,
    enumerate_dyadics,
    format_dyadic,
    prec,
)
from domwb.errors import DomwbError
from domwb.finposet import (
    BudgetExceededError,
    FinPoset,
    MonotoneMap,
    PropertyReport,
    canonical_approximations,
    enumerate_monotone_maps,
    supremum,
    verify_basis,
    way_below_matrix,
)

_log = logging.getLogger(__name__)


class IdealError(DomwbError):
    pass


class NotDirectedAtDepthError(DomwbError):
    pass


@dataclass(frozen=True, eq=False)
class AbstractBasis:
    """
    A carrier with a decidable transitive relation and interpolation witnesses.

    Parameters
    ----------
    name : str
    enumerate : Callable[[int], list]
        Carrier elements up to a depth; finite bases ignore the depth.
    prec : Callable
        The order ``≺``.
    interpolant : Callable
        ``(x, y) ↦ z`` with ``x ≺ z ≺ y`` when ``x ≺ y``, or None if there is none.
    below_witness : Callable
        ``x ↦ y`` with ``y ≺ x``, or None.
    upper_bound : Callable | None
        ``(a, b) ↦ c`` with ``a, b ⪯ c``; used to merge generators of a supremum.
    finite : bool
        The enumeration is the whole carrier at every depth.
    principal_inclusion_exact : bool
        ``↓x ⊆ ↓z`` holds exactly when ``x = z`` or ``x ≺ z``.
    """

    name: str
    enumerate: Callable[[int], list]
    prec: Callable[[Hashable, Hashable], bool]
    interpolant: Callable[[Hashable, Hashable], Hashable | None]
    below_witness: Callable[[Hashable], Hashable | None]
    upper_bound: Callable[[Hashable, Hashable], Hashable] | None = None
    finite: bool = True
    principal_inclusion_exact: bool = False
    format: Callable[[Hashable], str] = field(default=str)


def _search(candidates, test):
    return next((c for c in candidates if test(c)), None)


def preorder_basis(poset: FinPoset) -> AbstractBasis:
    """A finite poset as a reflexive abstract basis; every element interpolates itself."""
    carrier = list(range(poset.size))
    return AbstractBasis(
        name="preorder",
        enumerate=lambda depth: carrier,
        prec=poset.le,
        interpolant=lambda x, y: x if poset.le(x, y) else None,
        below_witness=lambda x: x,
        finite=True,
        principal_inclusion_exact=True,
        format=poset.name,
    )


def strict_basis(poset: FinPoset) -> AbstractBasis:
    """The strict part of a finite order. Minimal elements have no element below them."""
    carrier = list(range(poset.size))

    def lt(x, y) -> bool:
        return x != y and poset.le(x, y)

    return AbstractBasis(
        name="strict",
        enumerate=lambda depth: carrier,
        prec=lt,
        interpolant=lambda x, y: _search(carrier, lambda z: lt(x, z) and lt(z, y)),
        below_witness=lambda x: _search(carrier, lambda y: lt(y, x)),
        finite=True,
        principal_inclusion_exact=False,
        format=poset.name,
    )


def _dyadic_max(a, b):
    return b if prec(a, b) else a


def dyadic_basis() -> AbstractBasis:
    """The dyadics: dense, without endpoints, and with no compact ideals."""
    return AbstractBasis(
        name="dyadic",
        enumerate=enumerate_dyadics,
        prec=prec,
        interpolant=lambda x, y: density_witness(x, y) if prec(x, y) else None,
        below_witness=lambda x: endpoint_witnesses(x)[0],
        upper_bound=_dyadic_max,
        finite=False,
        principal_inclusion_exact=True,
        format=format_dyadic,
    )


def basis_as_abstract_basis(poset: FinPoset, beta: Sequence[int]) -> AbstractBasis:
    """A basis of a finite poset with ``b ≺ b′`` read as ``β(b) ≪ β(b′)``."""
    carrier = list(range(len(beta)))

    matrix = way_below_matrix(poset)

    def wb(b, c) -> bool:
        return bool(matrix[beta[b], beta[c]])

    return AbstractBasis(
        name="basis",
        enumerate=lambda depth: carrier,
        prec=wb,
        interpolant=lambda x, y: _search(carrier, lambda z: wb(x, z) and wb(z, y)),
        below_witness=lambda x: _search(carrier, lambda y: wb(y, x)),
        finite=True,
        principal_inclusion_exact=all(wb(b, b) for b in carrier),
        format=lambda b: poset.name(beta[b]),
    )


BASES: dict[str, Callable[[], AbstractBasis]] = {"dyadic": dyadic_basis}


@dataclass(frozen=True)
class Principal:
    b: Hashable


@dataclass(frozen=True, eq=False)
class Generated:
    """The ideal generated by an infinite ascending chain ``i ↦ chain(i)``."""

    chain: Callable[[int], Hashable]

    def prefix(self, depth: int) -> list:
        return [self.chain(i) for i in range(depth + 1)]


@dataclass(frozen=True)
class DownSet:
    members: frozenset


Ideal = Principal | Generated | DownSet


def generated(chain: Sequence | Callable[[int], Hashable]) -> Ideal:
    """A generated ideal; a finite chain generates the principal ideal of its last element."""
    if callable(chain):
        return Generated(chain)
    chain = list(chain)
    if not chain:
        raise IdealError("Ideals are inhabited: the chain must not be empty")
    return Principal(chain[-1])


class Truth(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Judgement:
    truth: Truth
    witness: Hashable | None = None

    def __bool__(self) -> bool:
        return self.truth is Truth.TRUE

    def to_dict(self, fmt: Callable = str) -> dict:
        witness = None if self.witness is None else fmt(self.witness)
        return dict(truth=self.truth.value, witness=witness)


def member(basis: AbstractBasis, ideal: Ideal, b, depth: int) -> bool:
    """
    Membership; exact for principal ideals and down-sets, bounded by `depth` for chains.
    """
    match ideal:
        case Principal(x):
            return basis.prec(b, x)
        case Generated():
            return any(basis.prec(b, c) for c in ideal.prefix(depth))
        case DownSet(members):
            return b in members
    raise IdealError(f"Not an ideal: {ideal!r}")


def _points(basis: AbstractBasis, ideal: Ideal, depth: int) -> list:
    """Elements of the ideal worth testing: the carrier to `depth` plus its own witnesses."""
    extra = []
    match ideal:
        case Principal(x):
            extra = [basis.below_witness(x), x]
        case Generated():
            extra = ideal.prefix(depth)
        case DownSet(members):
            extra = sorted(members, key=repr)
    candidates = unique(
        [c for c in extra if c is not None] + list(basis.enumerate(depth)), key=repr
    )
    return [c for c in candidates if member(basis, ideal, c, depth)]


def subset(basis: AbstractBasis, first: Ideal, second: Ideal, depth: int) -> Judgement:
    """
    Decide ``first ⊆ second``.

    A FALSE judgement carries a witness in ``first`` that is missing from ``second``.
    Principal ideals of an exact basis, and all ideals of a finite basis, are decided
    exactly; the other cases are searched up to `depth` and may come back UNKNOWN.
    """
    match first, second:
        case Principal(x), Principal(y) if basis.principal_inclusion_exact:
            if x == y or basis.prec(x, y):
                return Judgement(Truth.TRUE)
            candidates = [y, x, basis.interpolant(y, x)] + list(basis.enumerate(depth))
            witness = _search(
                (c for c in candidates if c is not None),
                lambda z: basis.prec(z, x) and not basis.prec(z, y),
            )
            return Judgement(Truth.FALSE, witness)

    if basis.finite or not isinstance(second, Generated):
        missing = _search(
            _points(basis, first, depth), lambda z: not member(basis, second, z, depth)
        )
        if missing is not None:
            return Judgement(Truth.FALSE, missing)
        if basis.finite:
            return Judgement(Truth.TRUE)

    match first, second:
        case Principal(x), Generated():
            for c in second.prefix(depth):
                if subset(basis, first, Principal(c), depth).truth is Truth.TRUE:
                    return Judgement(Truth.TRUE, c)
        case Generated(), Principal(y):
            for c in first.prefix(depth):
                inner = subset(basis, Principal(c), second, depth)
                if inner.truth is Truth.FALSE:
                    return inner
        case Generated(), Generated() if first.chain is second.chain:
            return Judgement(Truth.TRUE)
        case DownSet(members), _:
            if all(member(basis, second, z, depth) for z in members):
                return Judgement(Truth.TRUE)
    return Judgement(Truth.UNKNOWN)


def _candidates_in(basis: AbstractBasis, ideal: Ideal, depth: int, hint=None) -> list:
    points = _points(basis, ideal, depth)
    if hint is not None and isinstance(ideal, Principal):
        z = basis.interpolant(hint, ideal.b)
        if z is not None and member(basis, ideal, z, depth):
            points = [z] + points
    return points


def way_below_ideal(basis: AbstractBasis, first: Ideal, second: Ideal, depth: int) -> Judgement:
    """
    Decide ``first ≪ second``: some ``x`` in `second` has ``first ⊆ ↓x``.

    A TRUE judgement carries such an ``x``. Principal ideals of an exact basis are
    decided exactly: ``↓a ≪ ↓b`` iff ``a ≺ b``, witnessed by an interpolant.
    """
    match first, second:
        case Principal(a), Principal(b) if basis.principal_inclusion_exact:
            if basis.prec(a, b):
                return Judgement(Truth.TRUE, basis.interpolant(a, b))
            return Judgement(Truth.FALSE)

    hint = first.b if isinstance(first, Principal) else None
    undecided = False
    for x in _candidates_in(basis, second, depth, hint):
        truth = subset(basis, first, Principal(x), depth).truth
        if truth is Truth.TRUE:
            return Judgement(Truth.TRUE, x)
        undecided |= truth is Truth.UNKNOWN
    if basis.finite and not undecided:
        return Judgement(Truth.FALSE)
    return Judgement(Truth.UNKNOWN)


def _generator(ideal: Ideal, i: int):
    match ideal:
        case Principal(x):
            return x
        case Generated():
            return ideal.chain(i)
    raise IdealError("Only principal and generated ideals can be merged into a chain")


def ideal_sup(
    basis: AbstractBasis,
    family: Sequence[Ideal] | Callable[[int], Ideal],
    depth: int,
) -> Ideal:
    """
    Supremum of a directed family of ideals.

    A finite directed family contains an upper bound of itself, which is its supremum. An
    ascending sequence ``k ↦ I_k`` is merged into one generating chain with the basis's
    `upper_bound`.

    Raises
    ------
    NotDirectedAtDepthError
        If a pair of members has no member above both that can be confirmed at `depth`.
    """
    if callable(family):
        if basis.upper_bound is None:
            raise IdealError(f"Basis {basis.name} cannot merge generators into a chain")

        def chain(i: int):
            top = _generator(family(0), 0)
            for k in range(1, i + 1):
                top = basis.upper_bound(top, _generator(family(k), k))
            return top

        return Generated(chain)

    family = list(family)
    if not family:
        raise NotDirectedAtDepthError("The empty family is not directed")
    for candidate in family:
        if all(subset(basis, ideal, candidate, depth) for ideal in family):
            return candidate
    for first, second in combinations(family, 2):
        if not any(
            subset(basis, first, k, depth) and subset(basis, second, k, depth) for k in family
        ):
            e = NotDirectedAtDepthError(
                f"No member above {first!r} and {second!r} at depth {depth}"
            )
            _log.error(e)
            raise e
    e = NotDirectedAtDepthError(f"No member above the whole family at depth {depth}")
    _log.error(e)
    raise e


def agree_to_depth(basis: AbstractBasis, first: Ideal, second: Ideal, depth: int) -> bool:
    """Same membership for every carrier element up to `depth`."""
    return all(
        member(basis, first, b, depth) == member(basis, second, b, depth)
        for b in basis.enumerate(depth)
    )


def interpolate_ideals(basis: AbstractBasis, first: Ideal, last: Ideal, depth: int) -> Ideal:
    """
    An ideal strictly between two principal ideals in the way-below order.

    Raises
    ------
    IdealError
        If ``first ≪ last`` cannot be confirmed or the ideals are not principal.
    """
    if not (isinstance(first, Principal) and isinstance(last, Principal)):
        raise IdealError("Interpolation is only available between principal ideals")
    if way_below_ideal(basis, first, last, depth).truth is not Truth.TRUE:
        e = IdealError(f"{first!r} is not way below {last!r}")
        _log.error(e)
        raise e
    return Principal(basis.interpolant(first.b, last.b))


def check_abstract_basis(basis: AbstractBasis, depth: int) -> PropertyReport:
    """
    Transitivity and the interpolation witnesses over the carrier up to `depth`.

    Triples are capped at depth 3 for infinite bases.
    """
    elements = list(basis.enumerate(depth))
    triples = elements if basis.finite else list(basis.enumerate(min(depth, 3)))
    fmt = basis.format
    report = PropertyReport()

    transitive = [
        [fmt(x), fmt(y), fmt(z)]
        for x in triples
        for y in triples
        if basis.prec(x, y)
        for z in triples
        if basis.prec(y, z) and not basis.prec(x, z)
    ]
    report.record("transitive", not transitive, transitive[:1])

    nullary = []
    for x in elements:
        w = basis.below_witness(x)
        if w is None or not basis.prec(w, x):
            nullary.append(fmt(x))
    report.record("nullary_interpolation", not nullary, nullary[:1])

    unary = []
    for x in elements:
        for y in elements:
            if basis.prec(x, y):
                z = basis.interpolant(x, y)
                if z is None or not (basis.prec(x, z) and basis.prec(z, y)):
                    unary.append([fmt(x), fmt(y)])
    report.record("unary_interpolation", not unary, unary[:1])

    binary = []
    for z in triples:
        below = [x for x in triples if basis.prec(x, z)]
        for x, y in combinations(below, 2):
            candidates = [basis.interpolant(x, z), basis.interpolant(y, z)] + elements
            if _search(
                (w for w in candidates if w is not None),
                lambda w: basis.prec(x, w) and basis.prec(y, w) and basis.prec(w, z),
            ) is None:
                binary.append([fmt(x), fmt(y), fmt(z)])
    report.record("binary_interpolation", not binary, binary[:1])
    _log.info(f"Checked abstract basis {basis.name} on {len(elements)} elements")
    return report


def roundedness_check(basis: AbstractBasis, ideal: Ideal, depth: int) -> PropertyReport:
    """Every inspected member has a strictly larger member."""
    failures = []
    for x in _points(basis, ideal, depth):
        match ideal:
            case Principal(b):
                candidates = [basis.interpolant(x, b)]
            case Generated():
                candidates = ideal.prefix(depth + 1)
            case DownSet(members):
                candidates = sorted(members, key=repr)
        y = _search(
            (c for c in candidates if c is not None),
            lambda c: basis.prec(x, c) and member(basis, ideal, c, depth + 1),
        )
        if y is None:
            failures.append(basis.format(x))
    report = PropertyReport()
    report.record("rounded", not failures, failures[:1])
    return report


def is_rounded_ideal(basis: AbstractBasis, members: frozenset) -> bool:
    """Finite test: inhabited, lower, directed and rounded."""
    if not members:
        return False
    carrier = basis.enumerate(0)
    for y in members:
        if any(basis.prec(z, y) and z not in members for z in carrier):
            return False
        if not any(basis.prec(y, w) for w in members):
            return False
    for a, b in combinations(members, 2):
        if not any(basis.prec(a, c) and basis.prec(b, c) for c in members):
            return False
    return True


def enumerate_ideals(basis: AbstractBasis, budget: int | None = None) -> list[DownSet]:
    """
    Every rounded ideal of a finite basis, in bitmask order of the carrier.

    Raises
    ------
    BudgetExceededError
        If there are more ideals than the budget allows.
    """
    if not basis.finite:
        raise IdealError(f"Ideals of the infinite basis {basis.name} cannot be enumerated")
    if budget is None:
        budget = get_enumeration_budget()
    carrier = list(basis.enumerate(0))
    ideals = []
    for mask in range(1, 1 << len(carrier)):
        members = frozenset(x for bit, x in enumerate(carrier) if mask >> bit & 1)
        if is_rounded_ideal(basis, members):
            if len(ideals) >= budget:
                e = BudgetExceededError(f"More than {budget} ideals of basis {basis.name}")
                _log.error(e)
                raise e
            ideals.append(DownSet(members))
    _log.info(f"Basis {basis.name} has {len(ideals)} rounded ideals")
    return ideals


def principal_down_set(basis: AbstractBasis, x) -> DownSet:
    return DownSet(frozenset(y for y in basis.enumerate(0) if basis.prec(y, x)))


def ideal_completion_poset(basis: AbstractBasis) -> tuple[FinPoset, list[DownSet]]:
    """The ideals of a finite basis ordered by inclusion."""
    ideals = enumerate_ideals(basis)
    leq = np.array([[a.members <= b.members for b in ideals] for a in ideals], dtype=bool)
    names = [
        "{" + ",".join(basis.format(x) for x in sorted(ideal.members)) + "}" for ideal in ideals
    ]
    return FinPoset(names, leq), ideals


def free_extension_idl(f: MonotoneMap) -> tuple[MonotoneMap, list[DownSet]]:
    """
    Extend a monotone ``f : P → D`` to the ideal completion of P: ``I ↦ ⊔ f[I]``.

    Raises
    ------
    NoSupremumError
        If some image has no supremum in D.
    """
    basis = preorder_basis(f.dom)
    poset, ideals = ideal_completion_poset(basis)
    table = tuple(supremum(f.cod, f.image(ideal.members)) for ideal in ideals)
    return MonotoneMap(poset, f.cod, table), ideals


def check_free_extension_idl(f: MonotoneMap, budget: int | None = None) -> PropertyReport:
    """The triangle ``f̄(↓x) = f(x)`` and uniqueness among all monotone maps."""
    extension, ideals = free_extension_idl(f)
    basis = preorder_basis(f.dom)
    index = {ideal.members: i for i, ideal in enumerate(ideals)}
    principal = [index[principal_down_set(basis, x).members] for x in range(f.dom.size)]

    def triangle(g: MonotoneMap) -> bool:
        return all(g(principal[x]) == f(x) for x in range(f.dom.size))

    report = PropertyReport()
    report.record("triangle", triangle(extension))
    competitors = [
        g for g in enumerate_monotone_maps(extension.dom, f.cod, budget) if triangle(g)
    ]
    report.record("unique", competitors == [extension], [list(g.table) for g in competitors])
    return report


def retract_roundtrip(poset: FinPoset) -> PropertyReport:
    """
    The finite dcpo as a retract of the ideal completion of its identity basis.

    ``s(x) = {b : b ≪ x}`` and ``r(I) = ⊔ I``. Checks ``r ∘ s = id``, monotonicity of both
    maps, that ``s ∘ r`` is deflationary on the image of s, and that ``r`` of the
    principal ideals is again a basis.
    """
    beta = list(range(poset.size))
    basis = basis_as_abstract_basis(poset, beta)
    completion, ideals = ideal_completion_poset(basis)
    index = {ideal.members: i for i, ideal in enumerate(ideals)}
    matrix = way_below_matrix(poset)

    def section(x: int) -> int:
        return index[frozenset(b for b in beta if matrix[b, x])]

    def retraction(i: int) -> int:
        return supremum(poset, ideals[i].members)

    s = MonotoneMap(poset, completion, tuple(section(x) for x in range(poset.size)))
    r = MonotoneMap(completion, poset, tuple(retraction(i) for i in range(len(ideals))))

    report = PropertyReport()
    roundtrip = [x for x in range(poset.size) if r(s(x)) != x]
    report.record("roundtrip", not roundtrip, roundtrip[:1])
    report.record("section_monotone", s.is_monotone())
    report.record("retraction_monotone", r.is_monotone())
    deflation = [x for x in range(poset.size) if not completion.le(s(r(s(x))), s(x))]
    report.record("deflationary_on_image", not deflation, deflation[:1])

    principal = [retraction(index[principal_down_set(basis, b).members]) for b in beta]
    report.record(
        "retracted_basis",
        verify_basis(poset, principal, canonical_approximations(poset, principal)).passed,
    )
    return report


def check_principal_basis(basis: AbstractBasis, x, depth: int) -> PropertyReport:
    """
    The principal ideals below ``↓x`` approximate it: each is way below ``↓x`` and their
    supremum agrees with ``↓x`` one level below `depth`.
    """
    below = [y for y in basis.enumerate(depth) if basis.prec(y, x)]
    report = PropertyReport()
    if not below:
        report.record("approximated", False, [basis.format(x)])
        return report
    failures = [
        basis.format(y)
        for y in below
        if way_below_ideal(basis, Principal(y), Principal(x), depth).truth is not Truth.TRUE
    ]
    report.record("way_below", not failures, failures[:1])
    sup = ideal_sup(basis, [Principal(y) for y in below], depth)
    report.record("supremum", agree_to_depth(basis, sup, Principal(x), max(depth - 1, 0)))
    return report
