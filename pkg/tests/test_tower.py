import pytest

from domwb.exponential import compose
from domwb.finposet import (
    FinPoset,
    MonotoneMap,
    NotDirectedError,
    check_ep_pair,
    enumerate_monotone_maps,
    verify_basis,
)
from domwb.tower import (
    LazyMap,
    LevelNotTabulatedError,
    LevelOutOfRangeError,
    MonotonicityViolationError,
    UndecidableComparisonError,
    Verdict,
    build_tower,
    check_colimit,
    check_limit,
    check_step_equivalence,
    check_tower,
    cocone_from_top,
    compare_elements,
    compare_tower_elements,
    cone_from_top,
    embed_to_tower,
    eps_nm,
    eps_prime,
    is_compatible,
    least_element,
    pi_nm,
    pi_prime,
    project,
    step_basis,
    step_function,
    tower_basis,
    tower_elements,
    tower_elements_poset,
    tower_sup,
)


@pytest.fixture(scope="module")
def tower():
    return build_tower(2, tab_limit=2)


@pytest.fixture(scope="module")
def tall_tower():
    return build_tower(4, tab_limit=2)


def top_element(tower):
    return embed_to_tower(tower, 0, tower.levels[0].index("eta(*)"))


def test_level_sizes(tower):
    assert [level.size for level in tower.levels] == [2, 3, 10]
    assert list(tower.levels[0].elements) == ["bot", "eta(*)"]
    assert tower.bottom(2) == 0


def test_tab_limit_is_capped_at_the_truncation():
    assert build_tower(1, tab_limit=5).tab_limit == 1
    with pytest.raises(LevelOutOfRangeError):
        build_tower(-1)


def test_ep_pairs(tower):
    for n in range(2):
        assert check_ep_pair(tower.eps_maps[n], tower.pi_maps[n]).passed


def test_composites(tower):
    assert eps_nm(tower, 1, 1) == MonotoneMap.identity(tower.levels[1])
    assert compose(eps_nm(tower, 0, 2), pi_nm(tower, 0, 2)) == MonotoneMap.identity(tower.levels[0])
    with pytest.raises(LevelOutOfRangeError):
        eps_nm(tower, 2, 1)
    with pytest.raises(LevelNotTabulatedError):
        pi_nm(tower, 0, 3)


def test_check_tower(tower):
    report = check_tower(tower)
    assert report.passed
    assert report.checks["non_trivial"]
    assert report.checks["level_1.step_equivalence"]


def test_tower_elements_are_compatible(tower):
    elements = tower_elements(tower)
    assert len(elements) == 10
    assert all(is_compatible(tower, sigma) for sigma in elements)
    poset, _ = tower_elements_poset(tower)
    assert poset.leq.tolist() == tower.levels[2].leq.tolist()


def test_least_and_top_elements(tower):
    bottom, top = least_element(tower), top_element(tower)
    assert bottom.components == (0, 0, 0)
    assert project(tower, top, 0) == 1
    assert compare_tower_elements(tower, bottom, top) is Verdict.LEQ
    assert tower_sup(tower, [bottom, top]) == top
    with pytest.raises(NotDirectedError):
        tower_sup(tower, [])


def test_levels_above_the_cutoff(tall_tower):
    assert isinstance(tall_tower.bottom(4), LazyMap)
    assert isinstance(tall_tower.bottom(3), tuple)
    assert tall_tower.is_decidable(3)
    assert not tall_tower.is_decidable(4)

    top = top_element(tall_tower)
    bottom = least_element(tall_tower)
    assert is_compatible(tall_tower, top)
    assert compare_elements(tall_tower, 3, bottom.components[3], top.components[3]) is Verdict.LEQ
    top_4, bottom_4 = top.components[4], bottom.components[4]
    assert compare_elements(tall_tower, 4, top_4, top_4) is Verdict.EQUAL_ON_SAMPLES
    assert compare_elements(tall_tower, 4, bottom_4, top_4) is Verdict.DIFFER
    with pytest.raises(UndecidableComparisonError):
        tall_tower.leq(4, bottom.components[4], top.components[4])


def test_check_level(tower):
    with pytest.raises(LevelOutOfRangeError):
        tower.check_level(3)
    with pytest.raises(LevelOutOfRangeError):
        tower.apply_fn(0, 0, 0)


def test_tabulating_a_non_monotone_function(tower):
    with pytest.raises(MonotonicityViolationError):
        tower.tabulate_fn(1, lambda x: 1 - x)


def test_step_functions(tower):
    # (eta(*) => eta(*)) is the identity on D_0.
    identity = step_function(tower, 0, 1, 1)
    assert tower.exponentials[1].maps[identity].table == (0, 1)
    assert check_step_equivalence(tower, 1).passed

    beta, approx = step_basis(tower, 2)
    assert verify_basis(tower.levels[2], beta, approx).passed
    assert len(tower_basis(tower, 2)) == len(beta)
    with pytest.raises(LevelNotTabulatedError):
        step_basis(tower, 3)


@pytest.mark.parametrize("n", [1, 2])
def test_eps_prime_and_pi_prime_form_a_retraction(tower, n):
    for f in range(tower.levels[n].size):
        assert pi_prime(tower, n)(eps_prime(tower, n)(f)) == f


def test_limit_of_a_cone():
    tower = build_tower(1, tab_limit=1)
    g = MonotoneMap(FinPoset.chain(2), tower.levels[1], (0, 2))
    report = check_limit(tower, cone_from_top(tower, g))
    assert report.passed


def test_colimit_of_a_cocone():
    tower = build_tower(1, tab_limit=1)
    h = MonotoneMap(tower.levels[1], FinPoset.chain(2), (0, 0, 1))
    report = check_colimit(tower, cocone_from_top(tower, h))
    assert report.passed


APEXES = [FinPoset.chain(2), FinPoset.chain(3), FinPoset.antichain(2)]
APEX_IDS = ["chain2", "chain3", "antichain2"]


@pytest.mark.parametrize("N", [1, 2])
@pytest.mark.parametrize("apex", APEXES, ids=APEX_IDS)
def test_limit_of_every_cone(N, apex):
    tower = build_tower(N, tab_limit=N)
    for g in enumerate_monotone_maps(apex, tower.levels[N]):
        assert check_limit(tower, cone_from_top(tower, g)).passed


@pytest.mark.parametrize("N", [1, 2])
@pytest.mark.parametrize("apex", APEXES, ids=APEX_IDS)
def test_colimit_of_every_cocone(N, apex):
    tower = build_tower(N, tab_limit=N)
    for h in enumerate_monotone_maps(tower.levels[N], apex):
        assert check_colimit(tower, cocone_from_top(tower, h)).passed


def test_eps_prime_agrees_along_the_embeddings(tower):
    elements = tower_elements(tower)
    for n in range(tower.N + 1):
        for m in range(n, tower.N + 1):
            embedding = eps_nm(tower, n, m)
            for x in range(tower.levels[n].size):
                lifted = eps_prime(tower, m)(embedding(x))
                direct = eps_prime(tower, n)(x)
                assert all(lifted(sigma) == direct(sigma) for sigma in elements)


@pytest.mark.parametrize("N", [1, 2, 3])
def test_top_of_level_zero_is_not_bottom(N):
    tower = build_tower(N, tab_limit=2)
    top, bottom = top_element(tower), least_element(tower)
    for n in range(N + 1):
        verdict = compare_elements(tower, n, bottom.components[n], top.components[n])
        assert verdict is Verdict.LEQ
