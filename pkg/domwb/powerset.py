"""
Kuratowski-finite subsets, directed unions and bounded compactness witnesses.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np
from toolz import unique

from domwb.errors import DomwbError
from domwb.finposet import FinPoset, NotDirectedError

_log = logging.getLogger(__name__)


class EmptyFamilyError(DomwbError):
    pass


class CoverageViolationError(DomwbError):
    pass


@dataclass(frozen=True)
class ListSubset:
    """The subset of elements occurring in a finite list; the list may repeat elements."""

    gen: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "gen", tuple(self.gen))

    @property
    def members(self) -> frozenset:
        return frozenset(self.gen)

    @property
    def bound(self) -> int | None:
        return None

    def contains(self, x) -> bool:
        return x in self.members

    def __eq__(self, other) -> bool:
        if isinstance(other, ListSubset):
            return self.members == other.members
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.members)


@dataclass(frozen=True, eq=False)
class BoundedPredicateSubset:
    """
    A decidable subset of the natural numbers, inspected only below `bound`.
    """

    pred: Callable[[int], bool]
    bound: int
    name: str = field(default="predicate")

    def contains(self, x) -> bool:
        return isinstance(x, int) and 0 <= x and bool(self.pred(x))

    @property
    def members(self) -> frozenset:
        return frozenset(x for x in range(self.bound) if self.contains(x))


Subset = ListSubset | BoundedPredicateSubset


def iota(gen: Iterable[Hashable]) -> ListSubset:
    return ListSubset(tuple(gen))


def _point_key(x):
    return (0, x, "") if isinstance(x, int) else (1, 0, repr(x))


def _inspection_range(subsets: Sequence[Subset]) -> list:
    """Elements worth inspecting to compare the given subsets."""
    points = set()
    bound = None
    for subset in subsets:
        if isinstance(subset, ListSubset):
            points |= subset.members
        else:
            bound = subset.bound if bound is None else max(bound, subset.bound)
    if bound is not None:
        points |= set(range(bound))
    return sorted(points, key=_point_key)


def subset_leq(a: Subset, b: Subset, bound: int | None = None) -> bool:
    """Inclusion checked over the inspection range of both subsets (capped at `bound`)."""
    points = _inspection_range([a, b])
    if bound is not None:
        points = [x for x in points if not isinstance(x, int) or x < bound]
    return all(b.contains(x) for x in points if a.contains(x))


def subset_eq(a: Subset, b: Subset, bound: int | None = None) -> bool:
    return subset_leq(a, b, bound) and subset_leq(b, a, bound)


def directed_union(family: Sequence[Subset]) -> Subset:
    """
    Pointwise existential union of a nonempty family.

    The union of list subsets is the list subset of the concatenation; as soon as one
    member is a predicate subset, the union is a predicate subset whose bound is the
    largest bound in the family.

    Raises
    ------
    EmptyFamilyError
        If `family` is empty.
    """
    family = list(family)
    if not family:
        e = EmptyFamilyError("Cannot take the union of an empty family")
        _log.error(e)
        raise e

    if all(isinstance(member, ListSubset) for member in family):
        return ListSubset(tuple(x for member in family for x in member.gen))

    bound = max(
        member.bound if isinstance(member, BoundedPredicateSubset) else _list_bound(member)
        for member in family
    )
    members = tuple(family)
    return BoundedPredicateSubset(
        pred=lambda x: any(member.contains(x) for member in members),
        bound=bound,
        name="union",
    )


def _list_bound(subset: ListSubset) -> int:
    naturals = [x for x in subset.members if isinstance(x, int) and x >= 0]
    return max(naturals) + 1 if naturals else 0


def is_directed_family(family: Sequence[Subset]) -> bool:
    """Every pair of members has a member containing both (checked below the bounds)."""
    family = list(family)
    if not family:
        return False
    for a, b in combinations(family, 2):
        if not any(subset_leq(a, c) and subset_leq(b, c) for c in family):
            return False
    return True


@dataclass(frozen=True)
class CompactnessVerdict:
    """
    Outcome of a compactness search.

    `member` is the index of a member containing the subset, or None. When it is None,
    `escapes` maps each inspected member index to an element of the subset it misses.
    """

    member: int | None
    escapes: dict = field(default_factory=dict)

    @property
    def contained(self) -> bool:
        return self.member is not None

    def to_dict(self) -> dict:
        return dict(member=self.member, escapes={str(k): v for k, v in self.escapes.items()})


def compactness_witness(
    subset: Subset,
    family: Sequence[Subset] | Callable[[int], Subset],
    depth: int | None = None,
) -> CompactnessVerdict:
    """
    Look for a member of a directed family that contains `subset`.

    Parameters
    ----------
    subset : Subset
    family : Sequence[Subset] | Callable[[int], Subset]
        A finite directed family, or an ascending chain ``k ↦ A_k``. A chain is inspected
        for ``k < depth`` only.
    depth : int | None, optional
        Number of chain members to inspect; required for chains.

    Returns
    -------
    CompactnessVerdict

    Raises
    ------
    NotDirectedError
        If a finite family is not directed.
    CoverageViolationError
        If the inspected union does not cover `subset`.
    """
    if callable(family):
        if depth is None or depth < 1:
            raise ValueError("A chain family needs a positive inspection depth")
        members = [family(k) for k in range(depth)]
        chain = True
    else:
        members = list(family)
        chain = False
        if not members:
            raise EmptyFamilyError("Cannot search an empty family")
        if not is_directed_family(members):
            e = NotDirectedError(f"Family of {len(members)} subsets is not directed")
            _log.error(e)
            raise e

    points = [x for x in _inspection_range([subset]) if subset.contains(x)]
    if chain:
        # Bounded search: coverage of n points is looked for within depth + n members.
        union = directed_union([family(k) for k in range(depth + len(points))])
    else:
        union = directed_union(members)
    uncovered = [x for x in points if not union.contains(x)]
    if uncovered:
        e = CoverageViolationError(f"Family does not cover {uncovered[:5]}")
        _log.error(e)
        raise e

    escapes = {}
    for i, member in enumerate(members):
        missing = next((x for x in points if not member.contains(x)), None)
        if missing is None:
            _log.debug(f"Member {i} contains the subset")
            return CompactnessVerdict(member=i)
        escapes[i] = missing
    return CompactnessVerdict(member=None, escapes=escapes)


@dataclass(frozen=True)
class FinitePresentation:
    size: int
    enumeration: list
    complete: bool

    def to_dict(self) -> dict:
        return dict(size=self.size, enumeration=self.enumeration, complete=self.complete)


def is_kuratowski_finite_presentation(subset: Subset) -> FinitePresentation:
    """
    An enumeration of the subset.

    List subsets are presented by their deduplicated generating list. Predicate subsets
    are enumerated below their bound and flagged incomplete, since nothing is known
    beyond it.
    """
    if isinstance(subset, ListSubset):
        enumeration = list(unique(subset.gen))
        return FinitePresentation(len(enumeration), enumeration, complete=True)
    enumeration = sorted(subset.members)
    return FinitePresentation(len(enumeration), enumeration, complete=False)


def powerset_poset(carrier: Sequence[Hashable]) -> tuple[FinPoset, list[frozenset]]:
    """
    The powerset of a finite carrier ordered by inclusion.

    Returns the poset and the subset named by each index; subsets are listed by bitmask
    over `carrier`, so index 0 is the empty set.
    """
    carrier = list(carrier)
    subsets = [
        frozenset(x for bit, x in enumerate(carrier) if mask >> bit & 1)
        for mask in range(1 << len(carrier))
    ]
    leq = np.array([[a <= b for b in subsets] for a in subsets], dtype=bool)
    names = ["{" + ",".join(str(x) for x in carrier if x in s) + "}" for s in subsets]
    return FinPoset(names, leq), subsets


def powerset_basis(subsets: Sequence[frozenset]) -> tuple[list[int], dict[int, list[int]]]:
    """Every subset is a basis element, approximated by all of its subsets."""
    beta = list(range(len(subsets)))
    approx = {x: [b for b, s in enumerate(subsets) if s <= subsets[x]] for x in beta}
    return beta, approx
