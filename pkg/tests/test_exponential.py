from itertools import combinations, product

import pytest

from domwb.exponential import (
    DomainMismatchError,
    build_exponential,
    compose,
    evaluate,
    exponential_sup,
    map_name,
    pointwise_leq,
    pointwise_sup,
    strict_maps,
)
from domwb.finposet import (
    FinPoset,
    MonotoneMap,
    NotDirectedError,
    UnknownElementError,
    check_poset_axioms,
    enumerate_monotone_maps,
    generate_posets_up_to,
    is_directed,
    least,
)


@pytest.fixture
def two():
    return FinPoset.chain(2, names=["bot", "top"])


@pytest.fixture
def diamond():
    return FinPoset.from_covers(["bot", "a", "b", "top"], [(0, 1), (0, 2), (1, 3), (2, 3)])


def test_exponential_of_two_point_chain(two):
    exp = build_exponential(two, two)
    assert exp.size == 3
    assert list(exp.poset.elements) == ["[bot,bot]", "[bot,top]", "[top,top]"]
    assert exp.least_map().table == (0, 0)
    assert [f.table for f in strict_maps(exp)] == [(0, 0), (0, 1)]


def test_exponential_order_is_pointwise(diamond):
    exp = build_exponential(diamond, diamond)
    assert check_poset_axioms(exp.poset).passed
    for i, f in enumerate(exp.maps):
        for j, g in enumerate(exp.maps):
            assert exp.poset.le(i, j) == pointwise_leq(f, g)


def test_lookup(two):
    exp = build_exponential(two, two)
    f = MonotoneMap(two, two, (0, 1))
    assert exp.index_of(f) == 1
    assert exp.index_of_table((1, 1)) == 2
    assert exp.index_of_table((1, 0)) is None
    with pytest.raises(UnknownElementError):
        exp.index(MonotoneMap(two, two, (1, 0)))


def test_evaluate(two):
    f = MonotoneMap(two, two, (0, 1))
    assert evaluate(f, 1) == 1
    with pytest.raises(UnknownElementError):
        evaluate(f, 2)


def test_directed_sup_agrees_with_the_exponential_poset(diamond):
    exp = build_exponential(diamond, diamond)
    family = [
        MonotoneMap(diamond, diamond, (0, 0, 0, 0)),
        MonotoneMap(diamond, diamond, (0, 1, 0, 1)),
        MonotoneMap(diamond, diamond, (0, 1, 2, 3)),
    ]
    sup = pointwise_sup(family)
    assert sup.table == (0, 1, 2, 3)
    assert exponential_sup(exp, family) == sup


def test_pointwise_sup_rejects_non_directed_families(diamond):
    family = [MonotoneMap.constant(diamond, diamond, 1), MonotoneMap.constant(diamond, diamond, 2)]
    with pytest.raises(NotDirectedError):
        pointwise_sup(family)
    with pytest.raises(NotDirectedError):
        pointwise_sup([])


def test_compose_applies_first_map_first(two, diamond):
    f = MonotoneMap(two, diamond, (0, 1))
    g = MonotoneMap(diamond, two, (0, 1, 0, 1))
    assert compose(f, g).table == (0, 1)
    assert compose(g, f).table == (0, 1, 0, 1)
    with pytest.raises(DomainMismatchError):
        compose(f, f)


def test_map_name(two, diamond):
    assert map_name(MonotoneMap(two, diamond, (1, 3))) == "[a,top]"


SMALL = list(generate_posets_up_to(3))
SMALL_IDS = [f"{p.size}:{int(p.leq.sum())}:{i}" for i, p in enumerate(SMALL)]
UP_TO_FOUR = list(generate_posets_up_to(4))
UP_TO_FOUR_IDS = [f"{p.size}:{int(p.leq.sum())}:{i}" for i, p in enumerate(UP_TO_FOUR)]


@pytest.mark.parametrize("dom", SMALL, ids=SMALL_IDS)
def test_pointwise_sup_matches_the_exponential_supremum(dom):
    for cod in SMALL:
        exp = build_exponential(dom, cod)
        for k in (1, 2, 3):
            for indices in combinations(range(exp.size), k):
                family = [exp.maps[i] for i in indices]
                if is_directed(exp.poset, indices):
                    assert pointwise_sup(family) == exponential_sup(exp, family)
                else:
                    with pytest.raises(NotDirectedError):
                        pointwise_sup(family)


def test_pointwise_sup_ignores_repeated_maps(diamond):
    f = MonotoneMap(diamond, diamond, (0, 1, 0, 1))
    g = MonotoneMap(diamond, diamond, (0, 1, 2, 3))
    assert pointwise_sup([f, g, f, g]) == g
    assert pointwise_sup([f, f]) == f


@pytest.mark.parametrize("dom", UP_TO_FOUR, ids=UP_TO_FOUR_IDS)
def test_exponential_axioms(dom):
    for cod in UP_TO_FOUR:
        exp = build_exponential(dom, cod)
        assert exp.size == sum(1 for _ in enumerate_monotone_maps(dom, cod))
        assert check_poset_axioms(exp.poset).passed
        assert all(f.is_monotone() for f in exp.maps)
        bottom = least(cod)
        if bottom is None:
            continue
        assert exp.least_map().table == (bottom,) * dom.size
        if least(dom) is not None:
            assert all(f.is_strict() == (f(least(dom)) == bottom) for f in exp.maps)


@pytest.mark.parametrize("dom", SMALL, ids=SMALL_IDS)
def test_every_small_exponential_is_ordered_pointwise(dom):
    for cod in SMALL:
        exp = build_exponential(dom, cod)
        for i, f in enumerate(exp.maps):
            for j, g in enumerate(exp.maps):
                assert bool(exp.poset.leq[i, j]) == pointwise_leq(f, g)


def test_compose_is_associative():
    posets = list(generate_posets_up_to(2)) + [FinPoset.chain(3)]
    maps = {
        (a, b): list(enumerate_monotone_maps(posets[a], posets[b]))
        for a in range(len(posets))
        for b in range(len(posets))
    }
    for a, b, c, d in product(range(len(posets)), repeat=4):
        for f in maps[a, b]:
            for g in maps[b, c]:
                fg = compose(f, g)
                assert fg.is_monotone()
                for h in maps[c, d]:
                    assert compose(fg, h) == compose(f, compose(g, h))
