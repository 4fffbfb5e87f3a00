import copy
import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from liecert.catalog import (
    flat_pair,
    omega_from_pairs,
    rank_one_pair,
    rank_one_pair_with_trivial_extension,
    sl2_pair,
    three_step_nilpotent_pair,
)
from liecert.obstruction import (
    NO_REALIZATION,
    SOLVABLE,
    ObstructionError,
    RankOneInput,
    canonical_json,
    compare_certificates,
    expand_conditions,
    find_invariant_abelian,
    oracle_certificate,
    prove_no_realization,
    replay_paper_chain,
    semisimple_certificate,
    solve_lemma_chain,
    verify_certificate,
)
from liecert.obstruction import formal as F
from liecert.obstruction.certificate import closed_forms
from liecert.pairs import SymplecticPairForm
from liecert.reduction import ReductionInput
from liecert.scalars import GaussianRational
from liecert.sl2 import standard_module

# ---- formal calculus ---------------------------------------------------------


@pytest.mark.parametrize("k", range(0, 5))
def test_formal_E_matches_standard_module(k):
    _, Ep, Em = standard_module(2 * k)
    for j in range(2 * k + 1):
        r = j - k
        v = {(k, r, "u"): Fraction(1)}
        for sign, M in (("+", Ep), ("-", Em)):
            img = F.apply_E(sign, v)
            want = {(k, i - k, "u"): Fraction(M[i, j].to_fraction()) for i in range(2 * k + 1) if M[i, j]}
            assert img == want


keys = st.integers(0, 4).flatmap(lambda k: st.tuples(st.just(k), st.integers(-k, k), st.sampled_from("uwt")))
vecs = st.dictionaries(keys, st.fractions(min_value=-3, max_value=3).filter(bool), max_size=4)


@given(vecs, vecs)
def test_circ_commutator_is_weight(x, y):
    C = F.circ(x, y)
    lhs = F.circ_add(F.circ_E("+", F.circ_E("-", C)), F.circ_scale(-1, F.circ_E("-", F.circ_E("+", C))))
    want = {m: 2 * (m[0][1] + m[1][1]) * c for m, c in C.items()}
    assert lhs == {m: c for m, c in want.items() if c}


@pytest.mark.parametrize("k,l", [(k, l) for k in range(1, 5) for l in range(-k, k + 1)])
def test_casimir_convention(k, l):
    v = {(k, l, "u"): Fraction(1)}
    assert F.apply_E("+", F.apply_E("-", v)) == ({(k, l, "u"): Fraction(k * (k + 1) - l * (l - 1))}
                                                  if k * (k + 1) - l * (l - 1) else {})


# ---- constraint system and lemma chain ---------------------------------------


@pytest.mark.parametrize("n", [1, 2])
def test_eigenvalue_table_and_uniqueness(n):
    C = expand_conditions(n, (1,))
    for comp, (eig, _) in C.eigenvalues.items():
        (k1, r1), (k2, r2) = comp
        assert eig == k1 * k1 + k1 + k2 * k2 + k2 - 2 * r1 * r1
    hits = [comp for comp, eig, hit in C.uniqueness if hit]
    assert hits == [((0, 0), (n, 0))]


def test_n2_s1_contains_first_condition_component():
    C = expand_conditions(2, (1,))
    assert C.component("first", ((1, 1), (1, -1)))


@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("S", [(1,), (2,), (1, 2)])
def test_every_case_infeasible(n, S):
    cert = solve_lemma_chain(expand_conditions(n, S))
    assert cert["verdict"] == "infeasible"
    assert cert["witness"]


def test_oracle_values_match_closed_forms():
    for n in (1, 2):
        cert = oracle_certificate(n)
        for case in cert["cases"]:
            for step in case["steps"]:
                v = step["values"]
                if step["lemma"] == "casimir-diagonal":
                    assert Fraction(v["c_k"]) == closed_forms(n, v["k"])["c_k"]
                if step["lemma"] == "r-values":
                    assert Fraction(v["product"]) == closed_forms(n, v["k"])["product"]


def test_n2_r_values():
    cert = oracle_certificate(2)
    rv = {s["values"]["k"]: s["values"] for c in cert["cases"] for s in c["steps"] if s["lemma"] == "r-values"}
    assert rv[1]["r_plus"] == rv[1]["r_minus"] == "1/3"
    assert rv[2]["r_plus"] == rv[2]["r_minus"] == "-1/3"
    assert rv[1]["product"] == rv[2]["product"] == "1/9"


def test_n1_excluded_by_diagonal_coefficient():
    cert = oracle_certificate(1)
    diag = {s["values"]["k"]: s["values"] for c in cert["cases"] for s in c["steps"] if s["lemma"] == "casimir-diagonal"}
    assert diag[1]["c_k"] == "-2" and not diag[1]["holds"]
    assert not diag[2]["holds"]
    assert all(c["witness"]["reason"] == "diagonal coefficient" for c in cert["cases"])


def test_replay_reference_values():
    r2 = replay_paper_chain(2)
    a0 = next(s["values"] for s in r2["common_steps"] if s["lemma"] == "a0-shape")
    assert a0["alpha"]["2,2"] == "1/2" and a0["beta"]["2,2"] == "-1/6"
    rv = {s["values"]["k"]: s["values"] for c in r2["cases"] for s in c["steps"] if s["lemma"] == "r-values"}
    assert rv[1]["r_plus"] == "1/3" and rv[2]["r_plus"] == "-1/3" and rv[1]["product"] == "1/9"
    r1 = replay_paper_chain(1)
    c2 = [s["values"]["c_k"] for c in r1["cases"] for s in c["steps"]
          if s["lemma"] == "casimir-diagonal" and s["values"]["k"] == 2]
    assert set(c2) == {"-46/5"}
    assert all(c["verdict"] == "infeasible" for c in r1["cases"] + r2["cases"])


def test_discrepancies_are_stable_and_expected():
    for n in (1, 2):
        a, b = replay_paper_chain(n)["discrepancies"], replay_paper_chain(n)["discrepancies"]
        assert a == b
        quantities = {(d["k"], d["quantity"]): (d["oracle"], d["replay"]) for d in a}
        assert quantities[("2", "alpha_coefficient")] == ("16", "24")
    o, r = oracle_certificate(2), replay_paper_chain(2)
    assert compare_certificates(o, r) == r["discrepancies"]


def test_biconditional_and_high_k_coefficients_nonzero():
    cert = oracle_certificate(2)
    steps = {s["lemma"]: s["values"] for s in cert["common_steps"]}
    bic = steps["biconditional"]
    assert bic["conclusion"] == "a_+^k = 0 iff a_-^k = 0"
    for table in (v for v in bic.values() if isinstance(v, dict)):
        assert all(Fraction(x) != 0 for x in table.values())
    assert all(Fraction(x) != 0 for x in steps["high-k-vanishing"]["W_k^3 o W_k^-3 coefficient"].values())
    assert "free-block" in steps


@pytest.mark.parametrize("n", [1, 2])
def test_certificates_recheck(n):
    o = oracle_certificate(n)
    assert verify_certificate(o).passed
    assert verify_certificate(replay_paper_chain(n, o)).passed
    assert canonical_json(o) == canonical_json(oracle_certificate(n))


def test_tampering_is_detected():
    o = oracle_certificate(2)
    bad = copy.deepcopy(o)
    step = next(s for s in bad["cases"][0]["steps"] if s["lemma"] == "r-values")
    step["values"]["product"] = "1"
    assert not verify_certificate(bad).passed
    bad = copy.deepcopy(o)
    bad["cases"][0]["verdict"] = "feasible"
    assert not verify_certificate(bad).passed
    bad = copy.deepcopy(o)
    bad["common_steps"][0]["values"]["beta"]["1,1"] = "1/3"
    assert not verify_certificate(bad).passed


def test_semisimple_certificate():
    cert = semisimple_certificate(GaussianRational(1))
    assert cert["cases"][0]["verdict"] == "infeasible"
    assert verify_certificate(cert).passed
    assert semisimple_certificate(GaussianRational(0))["cases"][0]["verdict"] == "feasible"


# ---- invariant abelian subalgebra --------------------------------------------


@pytest.mark.parametrize("n", [1, 2])
def test_find_invariant_abelian(n):
    S, G, t = rank_one_pair(n)
    res = find_invariant_abelian(S, G, t)
    assert res.n == n and len(res.chain) == 2 * n + 1
    assert res.checks.passed
    assert S.value(t[1], res.a_minus) == n == S.value(t[2], res.a_plus)


def test_normalization_rescales_chain():
    S, G, t = rank_one_pair(2)
    scaled = SymplecticPairForm(S.pair, type(S.omega)(S.omega.gram.scale(3), "antisymmetric"))
    res = find_invariant_abelian(scaled, G, t)
    assert res.scale == GaussianRational(Fraction(1, 3))
    assert scaled.value(t[1], res.a_minus) == 2


def test_trivial_summand_outside_center():
    S, G, t = rank_one_pair_with_trivial_extension()
    with pytest.raises(ObstructionError, match="a contains no non-zero ad_l-invariant element"):
        find_invariant_abelian(S, G, t)


# ---- pipeline ----------------------------------------------------------------


def test_pipeline_sl2():
    S = sl2_pair()
    L = S.pair.algebra
    out = prove_no_realization(ReductionInput(S.pair, L.whole(), L.coordinate_span([0]), S))
    assert out.verdict == NO_REALIZATION and out.established
    assert verify_certificate(out.document["oracle"]).passed


@pytest.mark.parametrize("n", [1, 2])
def test_pipeline_rank_one(n):
    S, G, t = rank_one_pair(n)
    L = S.pair.algebra
    out = prove_no_realization(ReductionInput(S.pair, L.coordinate_span([0, 1, 2]), L.coordinate_span([0]), S))
    assert out.verdict == NO_REALIZATION
    assert out.document["abelian"]["n"] == n
    assert out.document["oracle"]["n"] == n and out.document["replay"]["mode"] == "replay"


def test_pipeline_solvable_inputs():
    out = prove_no_realization(RankOneInput(flat_pair(2)))
    assert out.verdict == SOLVABLE and out.document["series"]["derived_length"] == 1
    S, G = three_step_nilpotent_pair()
    out = prove_no_realization(RankOneInput(S, G))
    assert out.verdict == SOLVABLE
    assert out.document["series"]["nilpotency_class"] == 3


def test_pipeline_rejects_non_symplectic():
    S = sl2_pair()
    bad = SymplecticPairForm(S.pair, omega_from_pairs(2, []))
    L = S.pair.algebra
    with pytest.raises(ObstructionError):
        prove_no_realization(ReductionInput(S.pair, L.whole(), L.coordinate_span([0]), bad))
