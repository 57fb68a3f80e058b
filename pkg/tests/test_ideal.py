import pytest

from domwb.dyadics import CENTER, Left, Right, enumerate_dyadics, format_dyadic, parse_dyadic
from domwb.finposet import FinPoset, MonotoneMap, enumerate_monotone_maps, generate_posets_up_to
from domwb.ideal import (
    DownSet,
    Generated,
    IdealError,
    NotDirectedAtDepthError,
    Principal,
    Truth,
    agree_to_depth,
    basis_as_abstract_basis,
    check_abstract_basis,
    check_free_extension_idl,
    check_principal_basis,
    dyadic_basis,
    enumerate_ideals,
    free_extension_idl,
    generated,
    ideal_completion_poset,
    ideal_sup,
    interpolate_ideals,
    member,
    preorder_basis,
    retract_roundtrip,
    roundedness_check,
    strict_basis,
    subset,
    way_below_ideal,
)


@pytest.fixture
def dyadics():
    return dyadic_basis()


@pytest.fixture
def diamond():
    return FinPoset.from_covers(["bot", "a", "b", "top"], [(0, 1), (0, 2), (1, 3), (2, 3)])


def test_dyadic_basis_is_an_abstract_basis(dyadics):
    assert check_abstract_basis(dyadics, 3).passed


def test_strict_order_of_a_chain_fails_nullary_interpolation():
    report = check_abstract_basis(strict_basis(FinPoset.chain(3)), 0)
    assert not report.checks["nullary_interpolation"]
    assert report.counterexamples["nullary_interpolation"] == ["0"]
    assert not report.checks["unary_interpolation"]


def test_preorder_basis(diamond):
    assert check_abstract_basis(preorder_basis(diamond), 0).passed


def test_membership(dyadics):
    below_half = Principal(Right(CENTER))
    assert member(dyadics, below_half, CENTER, 3)
    assert not member(dyadics, below_half, Right(CENTER), 3)
    assert generated([CENTER, Right(CENTER)]) == below_half
    with pytest.raises(IdealError):
        generated([])


def test_principal_way_below_is_decided_exactly(dyadics):
    c, r = CENTER, Right(CENTER)
    judgement = way_below_ideal(dyadics, Principal(c), Principal(r), 3)
    assert judgement.truth is Truth.TRUE
    assert judgement.witness == Right(Left(CENTER))
    assert judgement
    assert way_below_ideal(dyadics, Principal(r), Principal(c), 3).truth is Truth.FALSE
    assert way_below_ideal(dyadics, Principal(c), Principal(c), 3).truth is Truth.FALSE
    assert judgement.to_dict(dyadics.format) == {"truth": "true", "witness": "r(l(c))"}


def test_principal_inclusion(dyadics):
    c, r = CENTER, Right(CENTER)
    assert subset(dyadics, Principal(c), Principal(r), 3).truth is Truth.TRUE
    judgement = subset(dyadics, Principal(r), Principal(c), 3)
    assert judgement.truth is Truth.FALSE
    assert judgement.witness == CENTER


@pytest.mark.parametrize("text", ["c", "l(c)", "r(c)", "r(l(c))"])
def test_principal_ideals_are_sups_of_smaller_principal_ideals(dyadics, text):
    x = parse_dyadic(text)
    below = [Principal(y) for y in enumerate_dyadics(4) if dyadics.prec(y, x)]
    sup = ideal_sup(dyadics, below, 4)
    assert agree_to_depth(dyadics, sup, Principal(x), 3)
    assert check_principal_basis(dyadics, x, 4).passed


def test_sup_of_an_ascending_sequence(dyadics):
    # r(c), r(r(c)), ... climbs towards 1.
    def chain(k):
        x = CENTER
        for _ in range(k + 1):
            x = Right(x)
        return x

    sup = ideal_sup(dyadics, lambda k: Principal(chain(k)), 4)
    assert isinstance(sup, Generated)
    assert sup.prefix(2) == [chain(0), chain(1), chain(2)]
    assert member(dyadics, sup, Right(Right(CENTER)), 3)
    assert subset(dyadics, Principal(chain(0)), sup, 3).truth is Truth.TRUE
    assert roundedness_check(dyadics, sup, 3).passed


def test_sup_of_a_non_directed_family():
    basis = preorder_basis(FinPoset.antichain(2))
    with pytest.raises(NotDirectedAtDepthError):
        ideal_sup(basis, [DownSet(frozenset({0})), DownSet(frozenset({1}))], 0)
    with pytest.raises(NotDirectedAtDepthError):
        ideal_sup(basis, [], 0)


def test_interpolate_ideals(dyadics):
    first, last = Principal(CENTER), Principal(Right(CENTER))
    middle = interpolate_ideals(dyadics, first, last, 3)
    assert way_below_ideal(dyadics, first, middle, 3)
    assert way_below_ideal(dyadics, middle, last, 3)
    with pytest.raises(IdealError):
        interpolate_ideals(dyadics, last, first, 3)


def test_roundedness_of_principal_ideals(dyadics):
    for x in enumerate_dyadics(2):
        assert roundedness_check(dyadics, Principal(x), 3).passed


def test_ideal_completion_of_a_finite_poset(diamond):
    basis = preorder_basis(diamond)
    ideals = enumerate_ideals(basis)
    assert len(ideals) == diamond.size
    poset, _ = ideal_completion_poset(basis)
    assert poset.leq.tolist() == diamond.leq.tolist()


def test_free_extension_to_the_ideal_completion(diamond):
    f = MonotoneMap(diamond, FinPoset.chain(3), (0, 1, 1, 2))
    extension, ideals = free_extension_idl(f)
    assert len(ideals) == 4
    assert check_free_extension_idl(f).passed
    assert extension.is_monotone()


@pytest.mark.parametrize("poset", list(generate_posets_up_to(5)))
def test_finite_posets_are_retracts_of_their_ideal_completion(poset):
    assert retract_roundtrip(poset).passed


def test_basis_of_a_finite_dcpo_as_an_abstract_basis(diamond):
    basis = basis_as_abstract_basis(diamond, list(range(diamond.size)))
    assert basis.principal_inclusion_exact
    assert check_abstract_basis(basis, 0).passed


@pytest.mark.parametrize("dom", list(generate_posets_up_to(3)))
def test_free_extension_to_the_ideal_completion_for_every_map(dom):
    for cod in generate_posets_up_to(3):
        for f in enumerate_monotone_maps(dom, cod):
            assert check_free_extension_idl(f).passed


@pytest.mark.parametrize("x", enumerate_dyadics(4), ids=format_dyadic)
def test_no_dyadic_ideal_is_compact(dyadics, x):
    judgement = way_below_ideal(dyadics, Principal(x), Principal(x), 4)
    assert judgement.truth is Truth.FALSE


def _climb_to_one(k):
    x = CENTER
    for _ in range(k + 1):
        x = Right(x)
    return x


def _climb_to_one_from_below(k):
    x = Left(Right(CENTER))
    for _ in range(k + 1):
        x = Right(x)
    return x


@pytest.mark.parametrize("x", enumerate_dyadics(3), ids=format_dyadic)
def test_way_below_a_chain_only_improves_with_depth(dyadics, x):
    sup = Generated(_climb_to_one)
    truths = [way_below_ideal(dyadics, Principal(x), sup, depth).truth for depth in range(5)]
    assert Truth.FALSE not in truths
    first_true = truths.index(Truth.TRUE)
    assert all(truth is Truth.TRUE for truth in truths[first_true:])


def test_inclusion_of_chains_may_stay_unknown(dyadics):
    first, second = Generated(_climb_to_one), Generated(_climb_to_one_from_below)
    assert subset(dyadics, first, second, 4).truth is Truth.UNKNOWN
    assert subset(dyadics, first, first, 4).truth is Truth.TRUE


def test_chain_not_included_in_a_principal_ideal(dyadics):
    judgement = subset(dyadics, Generated(_climb_to_one), Principal(Right(CENTER)), 3)
    assert judgement.truth is Truth.FALSE
    assert judgement.witness == Right(CENTER)


def test_down_sets_of_a_finite_basis(diamond):
    basis = preorder_basis(diamond)
    small, large = DownSet(frozenset({0, 1})), DownSet(frozenset({0, 1, 2}))
    assert subset(basis, small, large, 0).truth is Truth.TRUE
    judgement = subset(basis, large, small, 0)
    assert judgement.truth is Truth.FALSE
    assert judgement.witness == 2

    assert way_below_ideal(basis, DownSet(frozenset({0})), small, 0).truth is Truth.TRUE
    everything = DownSet(frozenset(range(diamond.size)))
    assert way_below_ideal(basis, everything, small, 0).truth is Truth.FALSE
