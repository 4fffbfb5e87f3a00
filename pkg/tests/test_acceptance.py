"""The nine primary acceptance criteria, one test each, with their stated tolerances and time limits."""
import json
import random
import time
from fractions import Fraction

from liecert.catalog import (
    heisenberg,
    omega_from_pairs,
    sl2,
    sl2_pair,
    sl2_plus_h3,
    three_step_nilpotent_pair,
)
from liecert.cli import main
from liecert.lie import center, killing_form, radical
from liecert.linalg import Matrix
from liecert.obstruction import (
    NO_REALIZATION,
    SOLVABLE,
    RankOneInput,
    expand_conditions,
    oracle_certificate,
    prove_no_realization,
    replay_paper_chain,
    solve_lemma_chain,
    verify_certificate,
)
from liecert.realization import CircElement, circ_to_operator, in_sp, validate_realization
from liecert.reduction import ReductionInput, reduce
from liecert.scalars import GaussianRational
from liecert.sl2 import _block_diag, decompose_sl2_module, lambda2_decomposition, standard_module

from conftest import FIXTURES
from realization_cases import ACCEPT, REJECT, flat


def test_criterion_1_sl2_identities(criterion):
    with criterion(1, "sl2 standard-module identities for n <= 10, exact, < 1 s"):
        t = time.perf_counter()
        for n in range(11):
            E0, Ep, Em = standard_module(n)
            assert E0.commutator(Ep) == Ep.scale(2)
            assert E0.commutator(Em) == Em.scale(-2)
            assert Ep.commutator(Em) == E0
            h = Fraction(n, 2)
            PM, MP = Ep @ Em, Em @ Ep
            for j in range(n + 1):
                r = Fraction(2 * j - n, 2)
                assert E0[j, j] == 2 * r
                assert PM[j, j] == h * (h + 1) - r * (r - 1)
                assert MP[j, j] == h * (h + 1) - r * (r + 1)
                if j < n:
                    assert Ep[j + 1, j] == h - r
                if j > 0:
                    assert Em[j - 1, j] == h + r
            for M in (PM, MP, E0):
                assert all(i == k for i, k, _ in M.entries())
        assert time.perf_counter() - t < 1.0


def _basis_change(rng, d):
    lo = {(i, i): 1 for i in range(d)}
    lo.update({(i, j): rng.randint(-2, 2) for i in range(d) for j in range(i) if rng.random() < 0.3})
    up = {(i, i): Fraction(rng.choice([1, -1, 2, -2, 3]), rng.choice([1, 2, 3])) for i in range(d)}
    up.update({(i, j): Fraction(rng.randint(-2, 2), rng.randint(1, 3))
               for i in range(d) for j in range(i + 1, d) if rng.random() < 0.3})
    return Matrix.from_entries(d, d, lo) @ Matrix.from_entries(d, d, up)


def test_criterion_2_decomposition_oracle(criterion):
    with criterion(2, "100 random module sums (dim <= 40) decompose to their multiset, < 30 s"):
        rng = random.Random(2024)
        t = time.perf_counter()
        for _ in range(100):
            budget = rng.randint(1, 40)
            labels = []
            while True:
                n = rng.randint(0, 9)
                if sum(l + 1 for l in labels) + n + 1 > budget:
                    break
                labels.append(n)
            labels = labels or [0]
            blocks = [standard_module(n) for n in labels]
            ops = [_block_diag([b[i] for b in blocks]) for i in range(3)]
            P = _basis_change(rng, ops[0].nrows)
            Pi = P.inverse()
            dec = decompose_sl2_module(*[P @ E @ Pi for E in ops])
            assert dec.labels() == sorted(labels, reverse=True)
        assert time.perf_counter() - t < 30.0


def test_criterion_3_clebsch_gordan(criterion):
    with criterion(3, "Lambda^2 M2 = M2, Lambda^2 M4 = M6 + M2, no trivial summand"):
        assert lambda2_decomposition(2).multiset == {2: 1}
        assert lambda2_decomposition(4).multiset == {6: 1, 2: 1}
        assert not lambda2_decomposition(2).has_trivial_summand
        assert not lambda2_decomposition(4).has_trivial_summand


def test_criterion_4_structure(criterion):
    with criterion(4, "radical(sl2 + h3) = h3, dim center(h3) = 1, Killing values 8 and 4"):
        L = sl2_plus_h3()
        assert radical(L) == L.coordinate_span([3, 4, 5])
        assert center(heisenberg()).dim == 1
        K = killing_form(sl2())
        e = sl2().basis_vector
        assert K(e(0), e(0)) == 8 and K(e(1), e(2)) == 4


def test_criterion_5_realization_verifier(criterion):
    with criterion(5, f"flat control accepted, {len(REJECT)} single-entry mutations rejected at the named check"):
        assert len(REJECT) >= 20
        for name, kw in ACCEPT:
            assert validate_realization(flat(**kw)).passed, name
        for name, kw, check in REJECT:
            rep = validate_realization(flat(**kw))
            assert not rep.passed, name
            assert rep.first_failure.name == check, name


def test_criterion_6_reduction(criterion):
    with criterion(6, "sl2 pair reduces to sl2 with grading (-1, 0, 1) and all claim checks, < 1 s"):
        t = time.perf_counter()
        S = sl2_pair()
        L = S.pair.algebra
        res = reduce(ReductionInput(S.pair, L.whole(), L.coordinate_span([0]), S))
        assert res.subalgebra.dim == 3
        assert sorted(res.grading.degree_map) == [-1, 0, 1]
        assert [res.grading.degree_of(x) for x in (res.triple.e0, res.triple.e_plus, res.triple.e_minus)] == [0, 1, -1]
        assert res.triple.is_standard()
        assert res.checks.passed and len(res.checks.checks) >= 10
        assert time.perf_counter() - t < 1.0


def test_criterion_7_obstruction(criterion, capsys, tmp_path):
    with criterion(7, "all six cases infeasible, replay r = 1/3, -1/3, product 1/9, sl2 pipeline exit 2, < 5 s"):
        t = time.perf_counter()
        for n in (1, 2):
            for S in ((1,), (2,), (1, 2)):
                assert solve_lemma_chain(expand_conditions(n, S))["verdict"] == "infeasible"
        rp = replay_paper_chain(2)
        rv = {s["values"]["k"]: s["values"] for c in rp["cases"] for s in c["steps"] if s["lemma"] == "r-values"}
        assert rv[1]["r_plus"] == rv[1]["r_minus"] == "1/3"
        assert rv[2]["r_plus"] == rv[2]["r_minus"] == "-1/3"
        assert rv[1]["product"] == "1/9" and Fraction(rv[1]["product"]) != 1
        for n in (1, 2):
            first = replay_paper_chain(n, oracle_certificate(n))["discrepancies"]
            assert first and first == replay_paper_chain(n)["discrepancies"]
        out = tmp_path / "sl2.cert.json"
        code = main(["obstruct", str(FIXTURES / "sl2_reduce.json"), "--out", str(out), "--format", "json"])
        capsys.readouterr()
        assert code == 2
        doc = json.loads(out.read_text())
        assert doc["verdict"] == NO_REALIZATION and doc["recheck"]
        assert verify_certificate(doc["oracle"]).passed
        assert time.perf_counter() - t < 5.0


def _random_sp(rng, Omega):
    n = Omega.dim
    S = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            S[i][j] = S[j][i] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return Omega.gram.inverse() @ Matrix(S)


def _random_omega(rng, n):
    while True:
        ent = [(i, j, Fraction(rng.randint(-3, 3), rng.randint(1, 2))) for i in range(n) for j in range(i + 1, n)]
        Om = omega_from_pairs(n, ent)
        if Om.is_nondegenerate():
            return Om


def test_criterion_8_circ_calculus(criterion):
    with criterion(8, "circ operator formula and [A, x o y] = (Ax) o y + x o (Ay), 100 random instances"):
        rng = random.Random(8)
        for _ in range(100):
            n = rng.choice([2, 4, 6, 8])
            Om = _random_omega(rng, n)
            vec = lambda: tuple(GaussianRational(Fraction(rng.randint(-3, 3), rng.randint(1, 3))) for _ in range(n))
            x, y, z = vec(), vec(), vec()
            C = circ_to_operator(CircElement.of(x, y), Om)
            want = tuple(Om.value(x, z) * b + Om.value(y, z) * a for a, b in zip(x, y))
            assert C.apply(z) == want
            A = _random_sp(rng, Om)
            assert in_sp(A, Om)
            rhs = circ_to_operator(CircElement.of(A.apply(x), y) + CircElement.of(x, A.apply(y)), Om)
            assert A.commutator(C) == rhs


def test_criterion_9_three_step_nilpotent(criterion):
    with criterion(9, "3-step nilpotent graded symplectic pair reported solvable with its series"):
        S, G = three_step_nilpotent_pair()
        out = prove_no_realization(RankOneInput(S, G))
        assert out.verdict == SOLVABLE
        series = out.document["series"]
        assert series["solvable"] and series["nilpotent"] and series["nilpotency_class"] == 3
        assert series["lower_central_dims"] == [5, 3, 2, 0]
