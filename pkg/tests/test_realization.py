import random
from math import comb

import pytest
from hypothesis import given, strategies as st

from liecert.catalog import oscillator_realization, sl2_pair, omega_from_pairs
from liecert.linalg import LinearAlgebraError, Matrix
from liecert.pairs import weight_decompose
from liecert.realization import (
    CircElement,
    ExtrinsicRealization,
    SplitSymplecticSpace,
    asp_bracket,
    check_rank_one_realization,
    circ_to_operator,
    in_sp,
    pullback_form,
    restrict_realization,
    validate_realization,
)
from liecert.pairs import validate_symplectic_pair
from liecert.scalars import GaussianRational
from liecert.sl2 import standard_module

from conftest import rationals
from realization_cases import ACCEPT, REJECT, flat


@pytest.mark.parametrize("name,kw", ACCEPT, ids=[a for a, _ in ACCEPT])
def test_valid_variants_accepted(name, kw):
    rep = validate_realization(flat(**kw))
    assert rep.passed, str(rep)
    assert validate_symplectic_pair(pullback_form(flat(**kw))).passed


@pytest.mark.parametrize("name,kw,check", REJECT, ids=[a for a, _, _ in REJECT])
def test_mutations_rejected_at_named_check(name, kw, check):
    rep = validate_realization(flat(**kw))
    assert not rep.passed
    assert rep.first_failure.name == check, str(rep)


def test_at_least_twenty_mutations():
    assert len(REJECT) >= 20


def test_oscillator_realization():
    R = oscillator_realization()
    assert validate_realization(R).passed
    # Λ(h) has odd eigenvalues
    assert check_rank_one_realization(R, R.pair.algebra.basis_vector(0)).failed_names() == ["even eigenvalues"]


def test_restriction_returns_the_known_block():
    R = oscillator_realization()
    L = R.pair.algebra
    W = weight_decompose(R.pair, L.coordinate_span([0]))
    lam0 = (GaussianRational(1),)
    rr = restrict_realization(R, W, lam0, e0=tuple(2 * x for x in L.basis_vector(0)))
    unit = lambda i: tuple(GaussianRational(int(j == i)) for j in range(6))
    assert set(rr.basis) == {unit(0), unit(1), unit(2), unit(3)}
    assert rr.V1_weights == {-1: 1, 1: 1} and rr.V2_weights == {-2: 1, 2: 1}
    assert validate_realization(rr.realization).passed
    assert check_rank_one_realization(rr.realization, rr.e0_operator).passed


def test_restriction_needs_nonzero_weight():
    R = flat()
    W = weight_decompose(R.pair, [])
    with pytest.raises(ValueError):
        restrict_realization(R, W, ())


def _diag_realization(diag, V1, V2):
    n = len(diag)
    Omega = omega_from_pairs(n, [(i, i + 1, 1) for i in range(0, n, 2)])
    space = SplitSymplecticSpace.from_indices(Omega, V1, V2)
    R = flat()
    return ExtrinsicRealization(R.pair, space, [Matrix.zeros(n)] * 2, Matrix.zeros(n, 2)), Matrix.diagonal(diag)


@pytest.mark.parametrize("diag,V1,V2,ok", [
    ((2, -2, 0, 4), (0, 1), (2, 3), True),
    ((1, -1, 0, 0), (0, 1), (2, 3), False),
    ((2, -2, 2, 0), (0, 1), (2, 3), False),
])
def test_rank_one_eigenvalue_sort(diag, V1, V2, ok):
    R, A = _diag_realization(diag, V1, V2)
    assert check_rank_one_realization(R, A).passed is ok


def test_sl2_block_attempt_is_rejected():
    """sl2 acting by two copies of the standard representation, v a coboundary."""
    S = sl2_pair()
    E0, Ep, Em = standard_module(1)
    blocks = []
    for M in (E0, Ep, Em):
        ent = {(i, j): c for i, j, c in M.entries()}
        ent.update({(i + 2, j + 2): c for i, j, c in M.entries()})
        blocks.append(Matrix.from_entries(4, 4, ent))
    Omega = omega_from_pairs(4, [(0, 1, 1), (2, 3, 1)])
    space = SplitSymplecticSpace.from_indices(Omega, [0, 1], [2, 3])
    c = (1, 0, 0, 1)
    v = Matrix.from_columns([B.apply(c) for B in blocks], 4)
    rep = validate_realization(ExtrinsicRealization(S.pair, space, blocks, v))
    assert not rep.passed
    assert rep.first_failure.name == "kernel-is-k"


def test_circ_examples():
    Omega = omega_from_pairs(2, [(0, 1, 1)])
    u, w = (1, 0), (0, 1)
    uu = circ_to_operator(CircElement.of(u, u), Omega)
    assert uu.apply(w) == tuple(GaussianRational(x) for x in (2, 0))
    uw = circ_to_operator(CircElement.of(u, w), Omega)
    assert uw.apply(u) == tuple(GaussianRational(x) for x in (-1, 0))


@pytest.mark.parametrize("n", [2, 4, 6])
def test_circ_is_an_isomorphism_onto_sp(n):
    Omega = omega_from_pairs(n, [(i, i + 1, 1) for i in range(0, n, 2)])
    e = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    ops = [circ_to_operator(CircElement.of(e[i], e[j]), Omega) for i in range(n) for j in range(i, n)]
    flat_rows = [[M[a, b] for a in range(n) for b in range(n)] for M in ops]
    assert Matrix(flat_rows).rank() == comb(n + 1, 2)


def test_asp_bracket_examples():
    A = Matrix([[1, 2], [3, 4]])
    Z = Matrix.zeros(2)
    assert asp_bracket((Z, (1, 0)), (Z, (0, 1))) == (Z, (0, 0))
    assert asp_bracket((A, (0, 0)), (Z, (0, 1)))[1] == A.apply((0, 1))
    with pytest.raises(LinearAlgebraError):
        asp_bracket((A, (0, 0)), (Z, (0, 0, 0)))


def _sp_element(rng, Omega):
    """``G^{-1} S`` with S symmetric lies in sp."""
    n = Omega.dim
    S = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            S[i][j] = S[j][i] = rng.randint(-3, 3)
    return Omega.gram.inverse() @ Matrix(S)


def test_asp_bracket_jacobi():
    rng = random.Random(3)
    Omega = omega_from_pairs(4, [(0, 1, 1), (2, 3, 1)])
    for _ in range(100):
        xs = [(_sp_element(rng, Omega), tuple(rng.randint(-3, 3) for _ in range(4))) for _ in range(3)]
        a, b, c = xs
        terms = [asp_bracket(x, asp_bracket(y, z)) for x, y, z in ((a, b, c), (b, c, a), (c, a, b))]
        M = terms[0][0] + terms[1][0] + terms[2][0]
        v = tuple(p + q + r for p, q, r in zip(terms[0][1], terms[1][1], terms[2][1]))
        assert M.is_zero() and not any(v)
        assert in_sp(a[0], Omega)
