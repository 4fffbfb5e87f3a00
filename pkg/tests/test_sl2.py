import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from liecert.linalg import Matrix
from liecert.scalars import GaussianRational
from liecert.sl2 import (
    Sl2DecompositionError,
    decompose_sl2_module,
    lambda2_decomposition,
    peel_weights,
    standard_module,
    verify_sl2_module,
)
from liecert.sl2 import _block_diag


def exterior_square(n):
    """Action of E0, E+, E- on Λ^2 M_n in the basis m_i ^ m_j, i < j."""
    ops = standard_module(n)
    d = n + 1
    pairs = [(i, j) for i in range(d) for j in range(i + 1, d)]
    idx = {p: t for t, p in enumerate(pairs)}
    out = []
    for E in ops:
        ent = {}
        for t, (i, j) in enumerate(pairs):
            for a, b, sign in ((i, j, 1), (j, i, -1)):
                # E(m_a) ^ m_b with the original order
                for r in range(d):
                    c = E[r, a]
                    if not c or r == b:
                        continue
                    lo, hi, s = (r, b, 1) if r < b else (b, r, -1)
                    s = s if sign == 1 else -s
                    key = (idx[(lo, hi)], t)
                    ent[key] = ent.get(key, 0) + s * c
        out.append(Matrix.from_entries(len(pairs), len(pairs), ent))
    return tuple(out)


@pytest.mark.parametrize("n", range(11))
def test_standard_module_identities(n):
    E0, Ep, Em = standard_module(n)
    assert E0.commutator(Ep) == Ep.scale(2)
    assert E0.commutator(Em) == Em.scale(-2)
    assert Ep.commutator(Em) == E0
    h = Fraction(n, 2)
    for j in range(n + 1):
        r = Fraction(2 * j - n, 2)
        e = tuple(GaussianRational(int(i == j)) for i in range(n + 1))
        assert E0.apply(e) == tuple(2 * r * x for x in e)
        assert (Ep @ Em).apply(e) == tuple((h * (h + 1) - r * (r - 1)) * x for x in e)
        assert (Em @ Ep).apply(e) == tuple((h * (h + 1) - r * (r + 1)) * x for x in e)
    assert verify_sl2_module(E0, Ep, Em).passed


def test_verify_rejects_bad_scaling():
    E0, Ep, Em = standard_module(2)
    assert not verify_sl2_module(E0, Ep.scale(2), Em).passed


@pytest.mark.parametrize("n,labels", [(2, [2]), (4, [6, 2]), (1, [0]), (3, [4, 0])])
def test_exterior_square_by_construction(n, labels):
    ops = exterior_square(n)
    assert verify_sl2_module(*ops).passed
    assert decompose_sl2_module(*ops).labels() == labels
    assert list(lambda2_decomposition(n).labels) == labels


@given(st.integers(0, 8))
def test_exterior_square_of_even_modules_has_no_trivial_summand(k):
    res = lambda2_decomposition(2 * k)
    assert not res.has_trivial_summand
    assert sum(l + 1 for l in res.labels) == (2 * k + 1) * (2 * k) // 2


def random_module(rng, max_dim=12):
    labels = []
    while True:
        n = rng.randint(0, 5)
        if sum(l + 1 for l in labels) + n + 1 > max_dim:
            break
        labels.append(n)
    if not labels:
        labels = [rng.randint(0, 5)]
    blocks = [standard_module(n) for n in labels]
    ops = [_block_diag([b[i] for b in blocks]) for i in range(3)]
    d = ops[0].nrows
    while True:
        P = Matrix([[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(d)] for _ in range(d)])
        if P.det():
            break
    Pi = P.inverse()
    return sorted(labels, reverse=True), [P @ E @ Pi for E in ops]


def test_decomposition_recovers_random_sums():
    rng = random.Random(7)
    for _ in range(15):
        labels, ops = random_module(rng)
        assert decompose_sl2_module(*ops).labels() == labels


def test_peel_weights_rejects_asymmetric():
    from collections import Counter

    with pytest.raises(Sl2DecompositionError):
        peel_weights(Counter({2: 1, 0: 1}))
