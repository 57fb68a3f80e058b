from itertools import product

import pytest

from domwb.exponential import compose
from domwb.finposet import (
    FinPoset,
    MonotoneMap,
    check_poset_axioms,
    enumerate_monotone_maps,
    generate_posets_up_to,
    is_algebraic_basis,
    is_compact,
    least,
)
from domwb.lifting import (
    UNDEFINED,
    Defined,
    NotPointedError,
    check_free_extension_dcpo,
    eta,
    eta_prime,
    free_extension,
    free_extension_dcpo,
    is_defined,
    lift_dcpo,
    lift_order,
    lifted_poset,
    lifting_basis,
    subsingleton_sup,
)


@pytest.fixture
def diamond():
    return FinPoset.from_covers(["bot", "a", "b", "top"], [(0, 1), (0, 2), (1, 3), (2, 3)])


def test_partial_elements():
    assert not is_defined(UNDEFINED)
    assert is_defined(eta("a"))
    assert eta("a") == Defined("a")
    assert lift_order(UNDEFINED, eta("a"))
    assert lift_order(eta("a"), eta("a"))
    assert not lift_order(eta("a"), eta("b"))
    assert not lift_order(eta("a"), UNDEFINED)


def test_lifted_poset_is_flat():
    lifted = lifted_poset(["a", "b"])
    assert list(lifted.poset.elements) == ["bot", "eta(a)", "eta(b)"]
    assert least(lifted.poset) == 0
    assert not lifted.poset.le(1, 2)
    assert lifted.to_partial(0) is UNDEFINED
    assert lifted.to_partial(2) == Defined("b")
    assert lifted.index_of(Defined("a")) == 1
    assert lifted.eta_index("b") == 2


def test_free_extension_is_the_unique_strict_extension(diamond):
    lifted = lifted_poset(["a", "b"])
    f = {"a": 1, "b": 3}.__getitem__
    extension = free_extension(f, lifted, diamond)
    assert extension.table == (0, 1, 3)
    assert extension.is_strict()

    triangle = [
        g
        for g in enumerate_monotone_maps(lifted.poset, diamond)
        if g.is_strict() and all(g(lifted.eta_index(x)) == f(x) for x in lifted.carrier)
    ]
    assert triangle == [extension]


def test_free_extension_needs_a_pointed_codomain():
    with pytest.raises(NotPointedError):
        free_extension(lambda x: 0, lifted_poset(["a"]), FinPoset.antichain(2))


def test_subsingleton_sup(diamond):
    assert subsingleton_sup(diamond, True, 2) == 2
    assert subsingleton_sup(diamond, False, 2) == 0


def test_lifting_basis_is_algebraic():
    lifted = lifted_poset(["a", "b", "c"])
    beta, approx = lifting_basis(lifted)
    assert approx[2] == [0, 2]
    assert is_algebraic_basis(lifted.poset, beta, approx).passed


def test_lift_dcpo_adds_a_fresh_bottom(diamond):
    lifted = lift_dcpo(diamond)
    assert lifted.size == 5
    assert least(lifted) == 0
    assert lifted.elements[0] == "bot'"
    assert check_poset_axioms(lifted).passed
    assert eta_prime(diamond).is_monotone()


def test_free_extension_dcpo(diamond):
    two = FinPoset.chain(2)
    f = MonotoneMap(two, diamond, (1, 3))
    extension = free_extension_dcpo(f)
    assert extension.table == (0, 1, 3)
    assert compose(eta_prime(two), extension) == f
    assert check_free_extension_dcpo(f).passed


def test_free_extension_dcpo_into_unpointed_codomain():
    f = MonotoneMap(FinPoset.chain(1), FinPoset.antichain(2), (0,))
    with pytest.raises(NotPointedError):
        free_extension_dcpo(f)


def _pointed_posets(max_size):
    return [poset for poset in generate_posets_up_to(max_size) if least(poset) is not None]


@pytest.mark.parametrize("size", [1, 2, 3])
def test_free_extension_is_unique_for_every_function(size):
    lifted = lifted_poset([f"x{i}" for i in range(size)])
    for cod in _pointed_posets(4):
        strict = [g for g in enumerate_monotone_maps(lifted.poset, cod) if g.is_strict()]
        for values in product(range(cod.size), repeat=size):
            f = dict(zip(lifted.carrier, values)).__getitem__
            extension = free_extension(f, lifted, cod)
            triangle = [
                g for g in strict if all(g(lifted.eta_index(x)) == f(x) for x in lifted.carrier)
            ]
            assert triangle == [extension]


@pytest.mark.parametrize("dom", list(generate_posets_up_to(3)))
def test_free_extension_dcpo_for_every_map(dom):
    for cod in _pointed_posets(3):
        for f in enumerate_monotone_maps(dom, cod):
            assert check_free_extension_dcpo(f).passed


def test_strict_maps_preserve_subsingleton_sups():
    posets = _pointed_posets(3)
    for dom in posets:
        for cod in posets:
            for g in enumerate_monotone_maps(dom, cod):
                if not g.is_strict():
                    continue
                for cond, value in product([True, False], range(dom.size)):
                    assert g(subsingleton_sup(dom, cond, value)) == subsingleton_sup(
                        cod, cond, g(value)
                    )


@pytest.mark.parametrize("size", range(7))
def test_lifted_posets_are_pointed_and_compact(size):
    lifted = lifted_poset(range(size))
    assert check_poset_axioms(lifted.poset).passed
    assert least(lifted.poset) == 0
    assert all(is_compact(lifted.poset, x) for x in range(lifted.poset.size))


@pytest.mark.parametrize("size", range(6))
def test_lifting_basis_for_every_small_carrier(size):
    lifted = lifted_poset(range(size))
    beta, approx = lifting_basis(lifted)
    assert is_algebraic_basis(lifted.poset, beta, approx).passed
