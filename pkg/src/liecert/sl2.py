"""Finite-dimensional sl(2) modules.

Basis conventions: ``M_n`` has basis ``m_r`` for ``r = -n/2, ..., n/2``,
stored at index ``j = r + n/2``. With ``E0 m_r = 2r m_r`` the raising and
lowering operators are ``E+ m_r = (n/2 - r) m_{r+1}`` and
``E- m_r = (n/2 + r) m_{r-1}``, so every entry is an integer.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .linalg import (
    LinearAlgebraError,
    Matrix,
    Subspace,
    lin_comb,
    restrict_operator,
    simultaneous_eigendecomposition,
)
from .reports import Report
from .scalars import ZERO, GaussianRational, as_scalar

__all__ = [
    "Sl2Triple",
    "Sl2Summand",
    "Sl2ModuleDecomposition",
    "Sl2DecompositionError",
    "standard_module",
    "verify_sl2_module",
    "decompose_sl2_module",
    "lambda2_decomposition",
    "Lambda2Result",
    "peel_weights",
    "restricted_action",
]


class Sl2DecompositionError(ValueError):
    pass


@dataclass(frozen=True)
class Sl2Triple:
    """``(e0, e+, e-)`` either as elements of ``parent`` (a LieAlgebra) or as matrices when parent is None."""

    e0: object
    e_plus: object
    e_minus: object
    parent: object = None

    def _br(self, x, y):
        if self.parent is None:
            return x.commutator(y)
        return self.parent.bracket(x, y)

    def _scale(self, c, x):
        if self.parent is None:
            return x.scale(c)
        return tuple(as_scalar(c) * a for a in x)

    def relations(self) -> Report:
        rep = Report("sl2 triple")
        pairs = (
            ("[e0, e+] = 2 e+", self._br(self.e0, self.e_plus), self._scale(2, self.e_plus)),
            ("[e0, e-] = -2 e-", self._br(self.e0, self.e_minus), self._scale(-2, self.e_minus)),
            ("[e+, e-] = e0", self._br(self.e_plus, self.e_minus), self.e0),
        )
        for name, lhs, rhs in pairs:
            if not rep.add(name, lhs == rhs, "" if lhs == rhs else "relation fails"):
                break
        return rep

    def is_standard(self) -> bool:
        return self.relations().passed

    def operators(self) -> tuple[Matrix, Matrix, Matrix]:
        if self.parent is None:
            return self.e0, self.e_plus, self.e_minus
        return self.parent.ad(self.e0), self.parent.ad(self.e_plus), self.parent.ad(self.e_minus)


def standard_module(n: int) -> tuple[Matrix, Matrix, Matrix]:
    if n < 0:
        raise ValueError("highest weight must be non-negative")
    d = n + 1
    E0 = Matrix.diagonal([2 * j - n for j in range(d)])
    Ep = Matrix.from_entries(d, d, {(j + 1, j): n - j for j in range(n)})
    Em = Matrix.from_entries(d, d, {(j - 1, j): j for j in range(1, d)})
    return E0, Ep, Em


def _block_diag(mats: Sequence[Matrix]) -> Matrix:
    n = sum(m.nrows for m in mats)
    ent = {}
    off = 0
    for m in mats:
        for i, j, x in m.entries():
            ent[(off + i, off + j)] = x
        off += m.nrows
    return Matrix.from_entries(n, n, ent)


def _integer_eigenspaces(E0: Matrix):
    pieces = simultaneous_eigendecomposition([E0])
    for (lam,), _ in pieces:
        if not lam.is_integer():
            raise Sl2DecompositionError(f"E0 has non-integer eigenvalue {lam}")
    return {int(lam): basis for (lam,), basis in pieces}


def verify_sl2_module(E0: Matrix, Ep: Matrix, Em: Matrix) -> Report:
    rep = Report("sl2 module")
    ok = E0.is_square() and E0.shape == Ep.shape == Em.shape
    if not rep.add("shapes", ok, "" if ok else f"shapes {E0.shape}, {Ep.shape}, {Em.shape}"):
        return rep
    triple = Sl2Triple(E0, Ep, Em)
    rel = triple.relations()
    for c in rel.checks:
        rep.checks.append(c)
    if not rel.passed:
        return rep
    try:
        spaces = _integer_eigenspaces(E0)
    except (LinearAlgebraError, Sl2DecompositionError) as exc:
        rep.add("E0 integer-diagonalizable", False, str(exc))
        return rep
    rep.add("E0 integer-diagonalizable", True)
    # Casimir C = E+E- + (E0/2)(E0/2 - 1) commutes with E0; test the E+E-/E-E+ identities on joint eigenvectors
    n = E0.nrows
    half = E0.scale(Fraction(1, 2))
    C = Ep @ Em + half @ (half - Matrix.identity(n))
    try:
        joint = simultaneous_eigendecomposition([E0, C]) if n else []
    except LinearAlgebraError as exc:
        rep.add("E+E- eigenvalue identities", False, str(exc))
        return rep
    PM, MP = Ep @ Em, Em @ Ep
    for (lam, cas), basis in joint:
        two_r = int(lam)
        # cas = a(a+1) with a = n/2; solve 4a^2 + 4a - 4cas = 0 -> 2a = -1 + sqrt(1 + 4cas)
        disc = 1 + 4 * cas
        two_a = _isqrt_exact(disc)
        if two_a is None or (two_a - 1) < abs(two_r) or (two_a - 1 - two_r) % 2:
            rep.add("E+E- eigenvalue identities", False,
                    f"Casimir value {cas} on the {two_r}-eigenspace is not a(a+1) for an admissible a",
                    witness={"eigenvalue": two_r, "casimir": str(cas)})
            return rep
        aa = Fraction(two_a - 1, 2)
        r = Fraction(two_r, 2)
        pm = aa * (aa + 1) - r * (r - 1)
        mp = aa * (aa + 1) - r * (r + 1)
        for v in basis:
            if PM.apply(v) != tuple(as_scalar(pm) * x for x in v) or MP.apply(v) != tuple(as_scalar(mp) * x for x in v):
                rep.add("E+E- eigenvalue identities", False, f"fails on an eigenvector of weight {two_r}",
                        witness={"eigenvalue": two_r, "vector": v})
                return rep
    rep.add("E+E- eigenvalue identities", True)
    return rep


def _isqrt_exact(q: GaussianRational) -> int | None:
    from math import isqrt

    if not q.is_integer() or int(q) < 0:
        return None
    v = int(q)
    s = isqrt(v)
    return s if s * s == v else None


@dataclass(frozen=True)
class Sl2Summand:
    n: int
    multiplicity: int
    standard_bases: tuple[tuple[tuple, ...], ...]


@dataclass(frozen=True)
class Sl2ModuleDecomposition:
    summands: tuple[Sl2Summand, ...]
    dim: int

    @property
    def multiset(self) -> dict[int, int]:
        return {s.n: s.multiplicity for s in self.summands}

    def labels(self) -> list[int]:
        return sorted((s.n for s in self.summands for _ in range(s.multiplicity)), reverse=True)

    def chains(self) -> list[tuple[int, tuple]]:
        return [(s.n, ch) for s in self.summands for ch in s.standard_bases]

    def change_of_basis(self) -> Matrix:
        cols = [v for _, ch in self.chains() for v in ch]
        return Matrix.from_columns(cols, self.dim)


def decompose_sl2_module(E0: Matrix, Ep: Matrix, Em: Matrix) -> Sl2ModuleDecomposition:
    dim = E0.nrows
    if dim == 0:
        return Sl2ModuleDecomposition((), 0)
    spaces = _integer_eigenspaces(E0)
    chains: dict[int, list[tuple]] = {}
    for lam in sorted(spaces, reverse=True):
        basis = spaces[lam]
        K = Matrix.from_columns([Ep.apply(b) for b in basis], dim).kernel()
        if not K:
            continue
        if lam < 0:
            raise Sl2DecompositionError(f"highest-weight vector with negative weight {lam}")
        for coeffs in K:
            top = lin_comb(coeffs, basis, dim)
            chain = [top]
            r = Fraction(lam, 2)
            half = Fraction(lam, 2)
            for _ in range(lam):
                nxt = Em.apply(chain[-1])
                c = as_scalar(half + r)
                chain.append(tuple(x / c for x in nxt))
                r -= 1
            if any(Em.apply(chain[-1])):
                raise Sl2DecompositionError(f"chain from weight {lam} does not terminate after {lam + 1} steps")
            chains.setdefault(lam, []).append(tuple(reversed(chain)))
    summands = tuple(Sl2Summand(n, len(chs), tuple(chs)) for n, chs in sorted(chains.items(), reverse=True))
    dec = Sl2ModuleDecomposition(summands, dim)
    total = sum(s.multiplicity * (s.n + 1) for s in summands)
    if total != dim:
        raise Sl2DecompositionError(f"summand dimensions add up to {total}, not {dim}")
    P = dec.change_of_basis()
    if P.rank() != dim:
        raise Sl2DecompositionError("chains are linearly dependent")
    blocks = [standard_module(n) for n, _ in dec.chains()]
    for k, E in enumerate((E0, Ep, Em)):
        if E @ P != P @ _block_diag([b[k] for b in blocks]):
            raise Sl2DecompositionError("reconstruction does not reproduce the module action")
    return dec


def restricted_action(L, triple: Sl2Triple, S: Subspace) -> tuple[Matrix, Matrix, Matrix]:
    """Matrices of ad(e0), ad(e+), ad(e-) on an invariant subspace ``S``, in its canonical basis."""
    basis = list(S.basis)
    return tuple(restrict_operator(L.ad(x), basis) for x in (triple.e0, triple.e_plus, triple.e_minus))


def peel_weights(weights: Counter) -> list[int]:
    """Split a weight multiset (E0 eigenvalues) into highest weights of irreducible summands."""
    w = Counter({k: v for k, v in weights.items() if v})
    out = []
    while w:
        top = max(w)
        if top < 0:
            raise Sl2DecompositionError("weight multiset is not symmetric")
        for m in range(-top, top + 1, 2):
            if w[m] <= 0:
                raise Sl2DecompositionError(f"weight {m} missing below highest weight {top}")
            w[m] -= 1
            if not w[m]:
                del w[m]
        out.append(top)
    return out


@dataclass(frozen=True)
class Lambda2Result:
    n: int
    labels: tuple[int, ...]

    @property
    def has_trivial_summand(self) -> bool:
        return 0 in self.labels

    @property
    def multiset(self) -> dict[int, int]:
        return dict(Counter(self.labels))


def lambda2_decomposition(n: int) -> Lambda2Result:
    if n < 0:
        raise ValueError("highest weight must be non-negative")
    ws = list(range(-n, n + 1, 2))
    counts = Counter(ws[i] + ws[j] for i in range(len(ws)) for j in range(i + 1, len(ws)))
    return Lambda2Result(n, tuple(peel_weights(counts)))
