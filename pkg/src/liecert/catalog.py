"""Small named algebras, pairs and realizations used as fixtures and CLI examples."""
from __future__ import annotations

from fractions import Fraction

from .lie import LieAlgebra, direct_sum
from .linalg import BilinearForm, Matrix
from .pairs import Grading, SymmetricPair, SymplecticPairForm
from .scalars import as_scalar
from .sl2 import standard_module

__all__ = [
    "sl2",
    "heisenberg",
    "sl2_plus_h3",
    "upper_triangular_gl2",
    "abelian",
    "sl2_pair",
    "flat_pair",
    "sl2_sl2_pair",
    "sl2_plus_h3_pair",
    "semidirect_sl2_module",
    "rank_one_pair",
    "rank_one_pair_with_trivial_extension",
    "three_step_nilpotent_pair",
    "omega_from_pairs",
    "flat_realization",
    "oscillator_realization",
]


def sl2(scale_plus=1) -> LieAlgebra:
    """Basis ``(e0, ep, em)``; ``scale_plus`` replaces ``ep`` by ``scale_plus * ep``."""
    s = as_scalar(scale_plus)
    return LieAlgebra.from_brackets(3, [(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, s)], ["e0", "ep", "em"])


def heisenberg(labels=("x", "y", "z")) -> LieAlgebra:
    return LieAlgebra.from_brackets(3, [(0, 1, 2, 1)], list(labels))


def sl2_plus_h3() -> LieAlgebra:
    return direct_sum(sl2(), heisenberg())


def upper_triangular_gl2() -> LieAlgebra:
    # E11, E12, E22
    return LieAlgebra.from_brackets(3, [(0, 1, 1, 1), (1, 2, 1, 1)], ["E11", "E12", "E22"])


def abelian(dim: int) -> LieAlgebra:
    return LieAlgebra.abelian(dim, [f"x{i}" for i in range(dim)])


def omega_from_pairs(dim: int, entries) -> BilinearForm:
    """Antisymmetric form from ``(i, j, value)`` entries with ``i < j``."""
    ent = {}
    for i, j, s in entries:
        s = as_scalar(s)
        ent[(i, j)] = s
        ent[(j, i)] = -s
    return BilinearForm(Matrix.from_entries(dim, dim, ent), "antisymmetric")


def sl2_pair(omega_value=1, scale_plus=1) -> SymplecticPairForm:
    L = sl2(scale_plus)
    P = SymmetricPair.from_indices(L, [0], [1, 2])
    return SymplecticPairForm(P, omega_from_pairs(2, [(0, 1, omega_value)]))


def flat_pair(dim: int = 2) -> SymplecticPairForm:
    L = abelian(dim)
    P = SymmetricPair.from_indices(L, [], range(dim))
    return SymplecticPairForm(P, omega_from_pairs(dim, [(2 * i, 2 * i + 1, 1) for i in range(dim // 2)]))


def sl2_sl2_pair() -> SymplecticPairForm:
    L = direct_sum(sl2(), LieAlgebra.from_brackets(3, [(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)], ["f0", "fp", "fm"]))
    P = SymmetricPair.from_indices(L, [0, 3], [1, 2, 4, 5])
    return SymplecticPairForm(P, omega_from_pairs(4, [(0, 1, 1), (2, 3, 1)]))


def sl2_plus_h3_pair() -> SymplecticPairForm:
    """sl2 + h3 with ``k = span(e0, z)`` and ``p = span(ep, em, x, y)``."""
    L = sl2_plus_h3()
    P = SymmetricPair.from_indices(L, [0, 5], [1, 2, 3, 4])
    return SymplecticPairForm(P, omega_from_pairs(4, [(0, 1, 1), (2, 3, 1)]))


def semidirect_sl2_module(m: int) -> LieAlgebra:
    """sl2 acting on an abelian ideal ``M_m``; module basis labels ``a0 .. a{m}`` from lowest weight up."""
    E0, Ep, Em = standard_module(m)
    d = m + 1
    labels = ["e0", "ep", "em"] + [f"a{j}" for j in range(d)]
    br = [(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)]
    for s, E in enumerate((E0, Ep, Em)):
        for j in range(d):
            for i in range(d):
                c = E[i, j]
                if c:
                    br.append((s, 3 + j, 3 + i, c))
    return LieAlgebra.from_brackets(3 + d, br, labels)


def rank_one_pair(n: int, omega_ee=0) -> tuple[SymplecticPairForm, Grading, tuple]:
    """Graded symplectic pair ``sl2 x M_{2n}`` of rank-one type, with its standard triple.

    Degrees are the weight indices; ``a_{+1}`` and ``a_{-1}`` pair with
    ``e-`` and ``e+`` under ω with value ``n``, as in the normalized form.
    """
    L = semidirect_sl2_module(2 * n)
    deg = [0, 1, -1] + list(range(-n, n + 1))
    G = Grading(L, tuple(deg))
    P = SymmetricPair(L, G.even(), G.odd())
    # canonical p basis is in index order: ep, em, then the odd-degree module vectors
    p_idx = [i for i in range(L.dim) if deg[i] % 2]
    pos = {i: t for t, i in enumerate(p_idx)}
    a_plus, a_minus = 3 + n + 1, 3 + n - 1
    ent = [(pos[1], pos[a_minus], n), (pos[2], pos[a_plus], n)]
    if omega_ee:
        ent.append((pos[1], pos[2], omega_ee))
    omega = omega_from_pairs(len(p_idx), ent)
    e = L.basis_vector
    return SymplecticPairForm(P, omega), G, (e(0), e(1), e(2))


def rank_one_pair_with_trivial_extension() -> tuple[SymplecticPairForm, Grading, tuple]:
    """``sl2 x M2`` plus a trivial-module Heisenberg algebra ``span(t, s, z)`` with ``[t, s] = z``."""
    base = semidirect_sl2_module(2)
    L = direct_sum(base, heisenberg(("t", "s", "z")))
    deg = [0, 1, -1, -1, 0, 1, 0, 0, 0]
    G = Grading(L, tuple(deg))
    P = SymmetricPair(L, G.even(), G.odd())
    p_idx = [i for i in range(L.dim) if deg[i] % 2]
    pos = {i: t for t, i in enumerate(p_idx)}
    omega = omega_from_pairs(len(p_idx), [(pos[1], pos[3], 1), (pos[2], pos[5], 1)])
    e = L.basis_vector
    return SymplecticPairForm(P, omega), G, (e(0), e(1), e(2))


def three_step_nilpotent_pair() -> tuple[SymplecticPairForm, Grading]:
    """Degrees 1: p1, p2; 2: c; 3: q1, q2 with ``[p1,p2] = c``, ``[c,p_i] = q_i``."""
    L = LieAlgebra.from_brackets(
        5, [(0, 1, 2, 1), (0, 2, 3, -1), (1, 2, 4, -1)], ["p1", "p2", "c", "q1", "q2"]
    )
    G = Grading(L, (1, 1, 2, 3, 3))
    P = SymmetricPair(L, G.even(), G.odd())
    # p basis order: p1, p2, q1, q2
    return SymplecticPairForm(P, omega_from_pairs(4, [(0, 2, 1), (1, 3, 1)])), G


def flat_realization():
    """g = C^2 abelian, k = 0, Λ = 0, V = C^4 with V1 = span(v0, v1), V2 = span(v2, v3)."""
    from .realization import ExtrinsicRealization, SplitSymplecticSpace

    S = flat_pair(2)
    L = S.pair.algebra
    Omega = omega_from_pairs(4, [(0, 1, 1), (2, 3, 1)])
    space = SplitSymplecticSpace.from_indices(Omega, [0, 1], [2, 3])
    v = Matrix.from_entries(4, 2, {(0, 0): 1, (1, 1): 1})
    return ExtrinsicRealization(S.pair, space, [Matrix.zeros(4) for _ in range(L.dim)], v)


def oscillator_realization():
    """Solvable pair ``k = span(h, c)``, ``p = span(x, y)`` with ``[h,x] = x``, ``[h,y] = -y``, ``[x,y] = c``.

    Λ(h) = diag(1, -1, 2, -2, 3, -3) on ``(u1, u2, w1, w2, w3, w4)``; V1 = span(u1, u2).
    """
    from .realization import ExtrinsicRealization, SplitSymplecticSpace

    L = LieAlgebra.from_brackets(4, [(0, 2, 2, 1), (0, 3, 3, -1), (2, 3, 1, 1)], ["h", "c", "x", "y"])
    P = SymmetricPair.from_indices(L, [0, 1], [2, 3])
    Omega = omega_from_pairs(6, [(0, 1, 1), (2, 3, 1), (4, 5, 1)])
    space = SplitSymplecticSpace.from_indices(Omega, [0, 1], [2, 3, 4, 5])
    Lam = [Matrix.diagonal([1, -1, 2, -2, 3, -3])] + [Matrix.zeros(6) for _ in range(3)]
    v = Matrix.from_entries(6, 4, {(0, 2): 1, (1, 3): 1})
    return ExtrinsicRealization(P, space, Lam, v)
