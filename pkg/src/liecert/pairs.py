"""Symmetric pairs, invariant 2-forms, gradings and torus weight decompositions."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .lie import LieAlgebra, bracket_space, verify_levi
from .linalg import (
    BilinearForm,
    LinearAlgebraError,
    Matrix,
    Subspace,
    form_radical,
    lin_comb,
    restrict_operator,
    simultaneous_eigendecomposition,
)
from .reports import Report, VerificationError
from .scalars import ZERO, GaussianRational, as_scalar
from .sl2 import Sl2Triple

__all__ = [
    "SymmetricPair",
    "SymplecticPairForm",
    "Grading",
    "WeightDecomposition",
    "validate_pair",
    "validate_symplectic_pair",
    "validate_grading",
    "weight_decompose",
    "check_rank_one_type",
    "pair_from_grading",
    "weight_add",
    "weight_scale",
    "weight_is_zero",
    "canonical_sign",
]

Weight = tuple


def weight_add(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def weight_scale(k, a: Weight) -> Weight:
    k = as_scalar(k)
    return tuple(k * x for x in a)


def weight_is_zero(a: Weight) -> bool:
    return not any(a)


def canonical_sign(a: Weight) -> Weight:
    """The representative of ``{a, -a}`` whose first nonzero entry has positive real part (then imaginary)."""
    for x in a:
        if x:
            if x.re > 0 or (not x.re and x.im > 0):
                return a
            return weight_scale(-1, a)
    return a


def format_weight(a: Weight) -> str:
    return "(" + ", ".join(str(x) for x in a) + ")"


@dataclass(frozen=True)
class SymmetricPair:
    algebra: LieAlgebra
    k: Subspace
    p: Subspace

    @classmethod
    def from_indices(cls, L: LieAlgebra, k: Sequence[int], p: Sequence[int]) -> "SymmetricPair":
        return cls(L, L.coordinate_span(k), L.coordinate_span(p))

    def p_coordinates(self, x: Sequence) -> tuple:
        return self.p.coordinates(x)


def validate_pair(P: SymmetricPair) -> Report:
    L = P.algebra
    rep = Report("symmetric pair")
    ok = P.k.is_complement(P.p)
    if not rep.add("k + p = g direct", ok, "" if ok else f"dim k = {P.k.dim}, dim p = {P.p.dim}, dim g = {L.dim}"):
        rep.details.update(valid=False, transvective=False)
        return rep
    for name, A, B, target in (("[k,k] in k", P.k, P.k, P.k), ("[k,p] in p", P.k, P.p, P.p), ("[p,p] in k", P.p, P.p, P.k)):
        bad = None
        for i, a in enumerate(A.basis):
            for j, b in enumerate(B.basis):
                if not target.contains(L.bracket(a, b)):
                    bad = (i, j)
                    break
            if bad:
                break
        if not rep.add(name, bad is None, "" if bad is None else f"basis pair {bad} violates it", bad):
            rep.details.update(valid=False, transvective=False)
            return rep
    pp = bracket_space(L, P.p, P.p)
    rep.details.update(valid=True, transvective=pp == P.k)
    return rep


@dataclass(frozen=True)
class SymplecticPairForm:
    """ω on ``p``; the gram matrix is taken in the canonical basis ``pair.p.basis``."""

    pair: SymmetricPair
    omega: BilinearForm

    def value(self, u: Sequence, w: Sequence) -> GaussianRational:
        return self.omega.value(self.pair.p.coordinates(u), self.pair.p.coordinates(w))


def validate_symplectic_pair(S: SymplecticPairForm) -> Report:
    P, L = S.pair, S.pair.algebra
    rep = Report("symplectic pair")
    ok = S.omega.dim == P.p.dim and S.omega.symmetry_kind == "antisymmetric"
    if not rep.add("omega is a 2-form on p", ok, "" if ok else "gram size or symmetry kind does not match p"):
        return rep
    rad = form_radical(S.omega)
    if not rep.add("non-degenerate", not rad, "" if not rad else f"radical has dimension {len(rad)}", rad or None):
        return rep
    for a, x in enumerate(P.k.basis):
        for i, u in enumerate(P.p.basis):
            xu = L.bracket(x, u)
            for j, w in enumerate(P.p.basis):
                val = S.value(xu, w) + S.value(u, L.bracket(x, w))
                if val:
                    rep.add("ad_k-invariant", False, f"defect {val} on k-basis {a}, p-basis ({i}, {j})", (a, i, j))
                    return rep
    rep.add("ad_k-invariant", True)
    return rep


@dataclass(frozen=True)
class Grading:
    """A coordinate grading: basis vector ``i`` has degree ``degree_map[i]``."""

    algebra: LieAlgebra
    degree_map: tuple[int, ...]

    def __post_init__(self):
        if len(self.degree_map) != self.algebra.dim:
            raise ValueError("one degree per basis vector is required")

    @property
    def degrees(self) -> list[int]:
        return sorted(set(self.degree_map))

    def part(self, d: int) -> Subspace:
        return self.algebra.coordinate_span(i for i, e in enumerate(self.degree_map) if e == d)

    def even(self) -> Subspace:
        return self.algebra.coordinate_span(i for i, e in enumerate(self.degree_map) if e % 2 == 0)

    def odd(self) -> Subspace:
        return self.algebra.coordinate_span(i for i, e in enumerate(self.degree_map) if e % 2)

    def degree_of(self, x: Sequence) -> int | None:
        ds = {self.degree_map[i] for i, c in enumerate(x) if c}
        return ds.pop() if len(ds) == 1 else None


def validate_grading(G: Grading) -> Report:
    L = G.algebra
    rep = Report("grading")
    for (i, j), row in sorted(L.structure.items()):
        d = G.degree_map[i] + G.degree_map[j]
        for k in row:
            if G.degree_map[k] != d:
                rep.add("[g_a, g_b] in g_(a+b)", False,
                        f"[{L.labels[i]}, {L.labels[j]}] has a component along {L.labels[k]} of degree "
                        f"{G.degree_map[k]} instead of {d}", (i, j, k))
                return rep
    rep.add("[g_a, g_b] in g_(a+b)", True)
    return rep


def pair_from_grading(G: Grading) -> SymmetricPair:
    return SymmetricPair(G.algebra, G.even(), G.odd())


@dataclass(frozen=True)
class WeightDecomposition:
    """Torus weights on ``p`` and ``k`` (weights are value tuples on the ordered torus basis)."""

    pair: SymmetricPair
    torus: tuple[tuple, ...]
    p_weights: tuple[tuple[Weight, Subspace], ...]
    k_weights: tuple[tuple[Weight, Subspace], ...]
    levi: Subspace | None = None
    radical: Subspace | None = None
    p_split: dict = field(default_factory=dict)

    def p_space(self, w: Weight) -> Subspace:
        for lam, S in self.p_weights:
            if lam == w:
                return S
        return self.pair.algebra.zero()

    def k_space(self, w: Weight) -> Subspace:
        for mu, S in self.k_weights:
            if mu == w:
                return S
        return self.pair.algebra.zero()

    def p_levi(self, w: Weight) -> Subspace:
        if self.levi is None:
            raise ValueError("no Levi subalgebra was supplied")
        return self.p_split.get(w, (self.pair.algebra.zero(), None))[0]

    def p_rad(self, w: Weight) -> Subspace:
        if self.levi is None:
            raise ValueError("no Levi subalgebra was supplied")
        return self.p_split.get(w, (None, self.pair.algebra.zero()))[1]

    @property
    def rank(self) -> int:
        return len(self.torus)

    def zero_weight(self) -> Weight:
        return tuple(ZERO for _ in self.torus)

    def table(self) -> list[dict]:
        rows = []
        for lam, S in self.p_weights:
            row = {"weight": format_weight(lam), "dim_p": S.dim}
            if self.levi is not None:
                row["dim_p_levi"] = self.p_levi(lam).dim
                row["dim_p_rad"] = self.p_rad(lam).dim
            rows.append(row)
        return rows


def _weights_on(L: LieAlgebra, torus: list[tuple], S: Subspace) -> list[tuple[Weight, Subspace]]:
    if S.dim == 0:
        return []
    if not torus:
        return [((), S)]
    basis = list(S.basis)
    ops = [restrict_operator(L.ad(t), basis) for t in torus]
    out = []
    for w, coords in simultaneous_eigendecomposition(ops):
        out.append((w, L.span(lin_comb(c, basis, L.dim) for c in coords)))
    return out


def weight_decompose(P: SymmetricPair, torus: Subspace | Sequence[Sequence], levi: Subspace | None = None,
                     radical: Subspace | None = None) -> WeightDecomposition:
    L = P.algebra
    tb = list(torus.basis) if isinstance(torus, Subspace) else [tuple(as_scalar(x) for x in t) for t in torus]
    for i, t in enumerate(tb):
        if not P.k.contains(t):
            raise ValueError(f"torus basis vector {i} is not in k")
    pw = _weights_on(L, tb, P.p)
    kw = _weights_on(L, tb, P.k)
    split = {}
    rad = None
    if levi is not None:
        if radical is None:
            from .lie import radical as _radical

            radical = _radical(L)
        rad = radical
        for lam, S in pw:
            a, b = S.intersection(levi), S.intersection(rad)
            if a.dim + b.dim != S.dim:
                raise VerificationError("weight space split", f"p^{format_weight(lam)} is not (levi part) + (radical part)")
            split[lam] = (a, b)
    W = WeightDecomposition(P, tuple(tb), tuple(pw), tuple(kw), levi, rad, split)
    _check_weight_brackets(W)
    return W


def _check_weight_brackets(W: WeightDecomposition) -> None:
    L = W.pair.algebra
    for (mu, K), (lam, S), target in (
        *(((m, K), (l, S), "p") for m, K in W.k_weights for l, S in W.p_weights),
        *(((m, K), (l, S), "k") for m, K in W.k_weights for l, S in W.k_weights),
        *(((m, K), (l, S), "k") for m, K in W.p_weights for l, S in W.p_weights),
    ):
        tw = weight_add(mu, lam)
        T = W.p_space(tw) if target == "p" else W.k_space(tw)
        for a in K.basis:
            for b in S.basis:
                if not T.contains(L.bracket(a, b)):
                    raise VerificationError("weight bracket compatibility",
                                            f"bracket of weights {format_weight(mu)} and {format_weight(lam)} "
                                            f"leaves the {target}-weight space {format_weight(tw)}")


def check_rank_one_type(G: Grading, e0: Sequence, e_plus: Sequence, e_minus: Sequence) -> Report:
    L = G.algebra
    rep = Report("rank-one type")
    ad0 = L.ad(e0)
    for i, d in enumerate(G.degree_map):
        img = ad0.apply(L.basis_vector(i))
        want = tuple(as_scalar(2 * d) if j == i else ZERO for j in range(L.dim))
        if img != want:
            rep.add("grading element", False, f"ad(e0) {L.labels[i]} is not {2 * d} {L.labels[i]}",
                    {"basis": i, "degree": d})
            return rep
    rep.add("grading element", True)
    dp, dm = G.degree_of(e_plus), G.degree_of(e_minus)
    ok = dp == 1 and dm == -1
    if not rep.add("e+ and e- in degrees +1 and -1", ok, "" if ok else f"degrees {dp}, {dm}"):
        return rep
    rel = Sl2Triple(tuple(e0), tuple(e_plus), tuple(e_minus), L).relations()
    if not rep.add("standard triple", rel.passed, "" if rel.passed else rel.first_failure.name):
        return rep
    lv = verify_levi(L, L.span([e0, e_plus, e_minus]))
    rep.add("triple spans a Levi subalgebra", lv.passed, "" if lv.passed else lv.first_failure.message)
    return rep
