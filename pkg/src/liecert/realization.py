"""Split symplectic spaces, the affine symplectic algebra, the circ map and realization checks."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .linalg import (
    BilinearForm,
    LinearAlgebraError,
    Matrix,
    Subspace,
    form_radical,
    lin_comb,
    simultaneous_eigendecomposition,
)
from .pairs import SymmetricPair, SymplecticPairForm, WeightDecomposition, validate_symplectic_pair, weight_scale
from .reports import Report, VerificationError
from .scalars import GaussianRational, as_scalar

__all__ = [
    "SplitSymplecticSpace",
    "ExtrinsicRealization",
    "CircElement",
    "RestrictedRealization",
    "asp_bracket",
    "circ_to_operator",
    "in_sp",
    "validate_space",
    "validate_realization",
    "pullback_form",
    "check_rank_one_realization",
    "restrict_realization",
    "weight_multiple",
]


@dataclass(frozen=True)
class SplitSymplecticSpace:
    Omega: BilinearForm
    V1: Subspace
    V2: Subspace

    @classmethod
    def from_indices(cls, Omega: BilinearForm, V1: Sequence[int], V2: Sequence[int]) -> "SplitSymplecticSpace":
        n = Omega.dim
        return cls(Omega, Subspace.coordinate(n, V1), Subspace.coordinate(n, V2))

    @property
    def dim(self) -> int:
        return self.Omega.dim

    def part(self, i: int) -> Subspace:
        return self.V1 if i % 2 else self.V2


def validate_space(X: SplitSymplecticSpace) -> Report:
    rep = Report("split symplectic space")
    n = X.dim
    ok = X.Omega.symmetry_kind == "antisymmetric" and n % 2 == 0
    if not rep.add("Omega antisymmetric, even dimension", ok, "" if ok else f"dimension {n}"):
        return rep
    rad = form_radical(X.Omega)
    if not rep.add("Omega non-degenerate", not rad, "" if not rad else f"radical of dimension {len(rad)}", rad or None):
        return rep
    ok = X.V1.ambient == X.V2.ambient == n and X.V1.is_complement(X.V2)
    if not rep.add("V = V1 + V2 direct", ok, "" if ok else f"dim V1 = {X.V1.dim}, dim V2 = {X.V2.dim}"):
        return rep
    for i, a in enumerate(X.V1.basis):
        for j, b in enumerate(X.V2.basis):
            val = X.Omega.value(a, b)
            if val:
                rep.add("Omega(V1, V2) = 0", False, f"Omega(V1[{i}], V2[{j}]) = {val}", (i, j))
                return rep
    rep.add("Omega(V1, V2) = 0", True)
    return rep


def in_sp(A: Matrix, Omega: BilinearForm) -> bool:
    # Omega(Au, w) + Omega(u, Aw) = 0 for all u, w
    G = Omega.gram
    return (A.T @ G + G @ A).is_zero()


def asp_bracket(a: tuple[Matrix, Sequence], b: tuple[Matrix, Sequence]) -> tuple[Matrix, tuple]:
    """``[A + u, B + w] = [A, B] + Aw - Bu``."""
    A, u = a
    B, w = b
    n = A.nrows
    if A.shape != (n, n) or B.shape != (n, n) or len(u) != n or len(w) != n:
        raise LinearAlgebraError("dimension mismatch in affine bracket")
    Aw, Bu = A.apply(w), B.apply(u)
    return A.commutator(B), tuple(x - y for x, y in zip(Aw, Bu))


@dataclass(frozen=True)
class CircElement:
    """``sum c (x o y)`` in S^2(V)."""

    terms: tuple[tuple[tuple, tuple, GaussianRational], ...]

    @classmethod
    def of(cls, x: Sequence, y: Sequence, c=1) -> "CircElement":
        return cls(((tuple(as_scalar(t) for t in x), tuple(as_scalar(t) for t in y), as_scalar(c)),))

    def __add__(self, other: "CircElement") -> "CircElement":
        return CircElement(self.terms + other.terms)

    def scale(self, c) -> "CircElement":
        c = as_scalar(c)
        return CircElement(tuple((x, y, c * k) for x, y, k in self.terms))


def circ_to_operator(c: CircElement, Omega: BilinearForm) -> Matrix:
    """``(x o y) z = Omega(x, z) y + Omega(y, z) x``, summed over the terms."""
    n = Omega.dim
    G = Omega.gram
    M = Matrix.zeros(n)
    for x, y, k in c.terms:
        xG = G.T.apply(x)  # row vector z -> Omega(x, z)
        yG = G.T.apply(y)
        ent = {}
        for i in range(n):
            for j in range(n):
                v = y[i] * xG[j] + x[i] * yG[j]
                if v:
                    ent[(i, j)] = v
        M = M + Matrix.from_entries(n, n, ent).scale(k)
    if not in_sp(M, Omega):
        raise VerificationError("circ image in sp", "the circ operator does not preserve Omega")
    return M


@dataclass(frozen=True)
class ExtrinsicRealization:
    """Λ is indexed by the algebra basis; ``v`` is a ``dim V x dim g`` matrix."""

    pair: SymmetricPair
    space: SplitSymplecticSpace
    Lambda: tuple
    v: Matrix

    def __post_init__(self):
        object.__setattr__(self, "Lambda", tuple(self.Lambda))

    def Lam(self, x: Sequence) -> Matrix:
        """Λ extended linearly to an element."""
        n = self.space.dim
        M = Matrix.zeros(n)
        for c, L in zip(x, self.Lambda):
            if c:
                M = M + L.scale(c)
        return M

    def vec(self, x: Sequence) -> tuple:
        return self.v.apply(x)


def _shape_report(R: ExtrinsicRealization, rep: Report) -> bool:
    g = R.pair.algebra.dim
    n = R.space.dim
    ok = len(R.Lambda) == g and all(L.shape == (n, n) for L in R.Lambda) and R.v.shape == (n, g)
    return rep.add("shapes", ok, "" if ok else "Lambda or v has the wrong size")


def validate_realization(R: ExtrinsicRealization) -> Report:
    """Checks in order: space, lambda-in-sp, homomorphism, kernel-is-k, v-iso-onto-V1, block-structure."""
    rep = Report("extrinsic realization")
    if not _shape_report(R, rep):
        return rep
    sp = validate_space(R.space)
    ok = sp.passed
    if not rep.add("space", ok, "" if ok else f"{sp.first_failure.name}: {sp.first_failure.message}"):
        return rep
    L = R.pair.algebra
    Om = R.space.Omega
    for i, A in enumerate(R.Lambda):
        if not in_sp(A, Om):
            rep.add("lambda-in-sp", False, f"Lambda({L.labels[i]}) does not preserve Omega", {"basis": i})
            return rep
    rep.add("lambda-in-sp", True)
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            xy = L.bracket(L.basis_vector(i), L.basis_vector(j))
            lhs = (R.Lam(xy), R.vec(xy))
            rhs = asp_bracket((R.Lambda[i], R.v.column(i)), (R.Lambda[j], R.v.column(j)))
            if lhs[0] != rhs[0] or lhs[1] != rhs[1]:
                part = "Lambda" if lhs[0] != rhs[0] else "v"
                rep.add("homomorphism", False, f"{part} fails on [{L.labels[i]}, {L.labels[j]}]",
                        {"pair": (i, j), "part": part})
                return rep
    rep.add("homomorphism", True)
    ker = Subspace(L.dim, R.v.kernel())
    ok = ker == R.pair.k
    if not rep.add("kernel-is-k", ok, "" if ok else f"ker v has dimension {ker.dim}, k has {R.pair.k.dim}"):
        return rep
    img = Subspace(R.space.dim, [R.vec(p) for p in R.pair.p.basis])
    ok = img.dim == R.pair.p.dim and img == R.space.V1
    if not rep.add("v-iso-onto-V1", ok, "" if ok else "v(p) is not V1 or v is not injective on p"):
        return rep
    for name, S, shift in (("k", R.pair.k, 0), ("p", R.pair.p, 1)):
        for a, x in enumerate(S.basis):
            A = R.Lam(x)
            for i in (1, 2):
                src, dst = R.space.part(i), R.space.part(i + shift)
                for b in src.basis:
                    if not dst.contains(A.apply(b)):
                        tgt = 1 if (i + shift) % 2 else 2
                        rep.add("block-structure", False,
                                f"Lambda of {name}-basis vector {a} maps V{i} outside V{tgt}",
                                {"space": name, "basis": a, "from": i})
                        return rep
    rep.add("block-structure", True)
    pb = pullback_form(R)
    pr = validate_symplectic_pair(pb)
    rep.add("pullback-form", pr.passed, "" if pr.passed else pr.first_failure.name)
    return rep


def pullback_form(R: ExtrinsicRealization) -> SymplecticPairForm:
    """``omega(x, y) = Omega(v x, v y)`` on ``p``, in the canonical p basis."""
    vs = [R.vec(p) for p in R.pair.p.basis]
    return SymplecticPairForm(R.pair, BilinearForm(R.space.Omega.restricted_gram(vs), "antisymmetric"))


def _operator_on(R: ExtrinsicRealization, e0) -> Matrix:
    return e0 if isinstance(e0, Matrix) else R.Lam(tuple(as_scalar(x) for x in e0))


def check_rank_one_realization(R: ExtrinsicRealization, e0) -> Report:
    """``e0`` is an element of the algebra or directly the operator Λ(e0)."""
    rep = Report("rank-one realization")
    A = _operator_on(R, e0)
    pieces = simultaneous_eigendecomposition([A])
    n = R.space.dim
    by_class: dict[int, list] = {0: [], 2: []}
    for (lam,), basis in pieces:
        if not lam.is_integer() or int(lam) % 2:
            rep.add("even eigenvalues", False, f"eigenvalue {lam} is not an even integer", {"eigenvalue": str(lam)})
            return rep
        by_class[int(lam) % 4].extend(basis)
    rep.add("even eigenvalues", True)
    for cls, Vi, name in ((2, R.space.V1, "V1"), (0, R.space.V2, "V2")):
        S = Subspace(n, by_class[cls])
        ok = S == Vi
        rep.add(f"{name} = eigenvalues {cls} mod 4", ok, "" if ok else f"{name} differs from the sum of those eigenspaces")
        if not ok:
            return rep
    return rep


def weight_multiple(w: tuple, lam0: tuple) -> int | None:
    """The integer ``l`` with ``w = l * lam0``, or None."""
    idx = next(i for i, x in enumerate(lam0) if x)
    q = w[idx] / lam0[idx]
    if not q.is_integer():
        return None
    l = int(q)
    return l if weight_scale(l, lam0) == tuple(w) else None


def _space_weights(R: ExtrinsicRealization, torus, Vi: Subspace):
    from .linalg import restrict_operator

    basis = list(Vi.basis)
    if not basis:
        return []
    ops = [restrict_operator(R.Lam(t), basis) for t in torus]
    return [(w, [lin_comb(c, basis, R.space.dim) for c in cs]) for w, cs in simultaneous_eigendecomposition(ops)]


@dataclass(frozen=True)
class RestrictedRealization:
    realization: ExtrinsicRealization
    basis: tuple  # V' basis in ambient coordinates, V1' first
    V1_weights: dict
    V2_weights: dict
    e0_operator: Matrix | None = None


def restrict_realization(R: ExtrinsicRealization, W: WeightDecomposition, lambda0: tuple,
                         sub=None, e0=None) -> RestrictedRealization:
    """Restrict to ``V' = sum V1^{odd l0} + sum V2^{even l0}``.

    ``sub`` is the graded subalgebra (from the reduction); without it the
    graded subalgebra is rebuilt from ``W`` and ``lambda0``. An ambient
    element ``e0`` (which need not lie in the subalgebra) is carried over
    as the operator Λ(e0) on V'.
    """
    lambda0 = tuple(as_scalar(x) for x in lambda0)
    if not any(lambda0):
        raise ValueError("lambda0 must be a nonzero weight")
    if sub is None:
        from .reduction import graded_subalgebra

        sub = graded_subalgebra(W, lambda0)
    torus = W.torus
    w1 = _space_weights(R, torus, R.space.V1)
    w2 = _space_weights(R, torus, R.space.V2)
    v1, v2 = {}, {}
    for parity, ws, out in ((1, w1, v1), (0, w2, v2)):
        for w, vecs in ws:
            l = weight_multiple(w, lambda0)
            if l is not None and l % 2 == parity:
                out[l] = vecs
    basis1 = [b for l in sorted(v1) for b in v1[l]]
    basis2 = [b for l in sorted(v2) for b in v2[l]]
    basis = basis1 + basis2
    n = R.space.dim
    Vp = Subspace(n, basis)
    G = R.space.Omega.restricted_gram(basis)
    if G.rank() != len(basis):
        raise VerificationError("Omega restricted to V' non-degenerate", "Omega is degenerate on V'")
    # Λ(g'_k) V_i^{l λ0} ⊆ V_{i+k}^{(k+l) λ0}
    spaces = {l: Subspace(n, vs) for l, vs in list(v1.items()) + list(v2.items())}
    for d, part in sub.parts.items():
        for x in part.basis:
            A = R.Lam(x)
            if not Vp.contains_space(Subspace(n, [A.apply(b) for b in basis])):
                raise VerificationError("V' is Lambda(g')-invariant", f"a degree-{d} element leaves V'")
            for l, S in spaces.items():
                tgt = spaces.get(l + d, Subspace(n))
                for b in S.basis:
                    if not tgt.contains(A.apply(b)):
                        raise VerificationError("weight multiples", f"degree {d} maps V^({l} l0) outside V^({l + d} l0)")
    coords = Matrix.from_columns(basis, n)
    Binv_rows = _left_inverse(coords)
    emb = sub.embedding
    Lam = []
    for j in range(emb.ncols):
        A = R.Lam(emb.column(j))
        Lam.append(Binv_rows @ A @ coords)
    vcols = [Binv_rows.apply(R.vec(emb.column(j))) for j in range(emb.ncols)]
    vmat = Matrix.from_columns(vcols, len(basis)) if vcols else Matrix.zeros(len(basis), 0)
    m = len(basis)
    space = SplitSymplecticSpace(BilinearForm(G, "antisymmetric"), Subspace.coordinate(m, range(len(basis1))),
                                 Subspace.coordinate(m, range(len(basis1), m)))
    Rp = ExtrinsicRealization(sub.pair, space, Lam, vmat)
    e0_op = None
    if e0 is not None:
        A = R.Lam(tuple(as_scalar(x) for x in e0))
        if not Vp.contains_space(Subspace(n, [A.apply(b) for b in basis])):
            raise VerificationError("V' is Lambda(e0)-invariant", "Lambda(e0) leaves V'")
        e0_op = Binv_rows @ A @ coords
    return RestrictedRealization(Rp, tuple(basis), {l: len(v) for l, v in v1.items()},
                                 {l: len(v) for l, v in v2.items()}, e0_op)


def _left_inverse(B: Matrix) -> Matrix:
    """A matrix ``P`` with ``P B = I`` used on vectors already inside the column span."""
    n, m = B.shape
    # m independent rows of B give an invertible square block
    _, rpiv = B.T.rref()
    sq = B.submatrix(list(rpiv), list(range(m)))
    inv = sq.inverse()
    ent = {}
    for i in range(m):
        for t, r in enumerate(rpiv):
            x = inv[i, t]
            if x:
                ent[(i, r)] = x
    return Matrix.from_entries(m, n, ent)
