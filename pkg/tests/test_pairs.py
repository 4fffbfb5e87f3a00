import pytest

from liecert.catalog import (
    abelian,
    omega_from_pairs,
    rank_one_pair,
    sl2,
    sl2_pair,
    sl2_plus_h3_pair,
    sl2_sl2_pair,
    three_step_nilpotent_pair,
)
from liecert.pairs import (
    Grading,
    SymmetricPair,
    SymplecticPairForm,
    check_rank_one_type,
    format_weight,
    validate_grading,
    validate_pair,
    validate_symplectic_pair,
    weight_decompose,
)


@pytest.mark.parametrize("make", [sl2_pair, sl2_sl2_pair, sl2_plus_h3_pair])
def test_transvective_symplectic_pairs(make):
    S = make()
    rep = validate_pair(S.pair)
    assert rep.passed and rep.details["transvective"]
    assert validate_symplectic_pair(S).passed


def test_transvectivity_flag():
    S, _ = three_step_nilpotent_pair()
    assert validate_pair(S.pair).details["transvective"]
    rep = validate_pair(SymmetricPair.from_indices(abelian(3), [0], [1, 2]))
    assert rep.passed and not rep.details["transvective"]


def test_bad_split_is_named():
    L = sl2()
    assert validate_pair(SymmetricPair.from_indices(L, [1], [0, 2])).failed_names() == ["[k,p] in p"]
    assert validate_pair(SymmetricPair.from_indices(L, [0], [1])).failed_names() == ["k + p = g direct"]


def test_non_invariant_form():
    base = sl2_plus_h3_pair()
    S = SymplecticPairForm(base.pair, omega_from_pairs(4, [(0, 2, 1), (1, 3, 1)]))
    assert validate_symplectic_pair(S).failed_names() == ["ad_k-invariant"]


def test_degenerate_form():
    base = sl2_pair()
    S = SymplecticPairForm(base.pair, omega_from_pairs(2, []))
    assert validate_symplectic_pair(S).failed_names() == ["non-degenerate"]


@pytest.mark.parametrize("n", [1, 2])
def test_rank_one_catalog(n):
    S, G, t = rank_one_pair(n)
    assert validate_grading(G).passed
    assert check_rank_one_type(G, *t).passed
    assert validate_symplectic_pair(S).passed


def test_rank_one_type_needs_grading_element():
    S, G, (e0, ep, em) = rank_one_pair(1)
    rep = check_rank_one_type(G, tuple(2 * x for x in e0), ep, em)
    assert rep.failed_names() == ["grading element"]


def test_grading_law_violation():
    L = sl2()
    rep = validate_grading(Grading(L, (0, 1, 1)))
    assert rep.failed_names() == ["[g_a, g_b] in g_(a+b)"]


def test_weights_of_sl2_pair():
    S = sl2_pair()
    L = S.pair.algebra
    W = weight_decompose(S.pair, L.coordinate_span([0]), L.whole())
    assert sorted(format_weight(w) for w, _ in W.p_weights) == sorted(["(-2)", "(2)"])
    with pytest.raises(ValueError):
        weight_decompose(S.pair, [L.basis_vector(1)])
