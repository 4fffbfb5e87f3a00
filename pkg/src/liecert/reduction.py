"""Reduction of a non-solvable transvective pair to a graded subalgebra of rank-one type."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .lie import (
    LieAlgebra,
    bracket_space,
    induced_algebra,
    killing_form,
    radical,
    solvability_report,
    verify_levi,
)
from .linalg import Matrix, Subspace, coordinates_in, lin_comb, restrict_operator, solve_linear
from .pairs import (
    Grading,
    SymmetricPair,
    SymplecticPairForm,
    WeightDecomposition,
    canonical_sign,
    check_rank_one_type,
    format_weight,
    validate_grading,
    validate_pair,
    weight_decompose,
    weight_is_zero,
    weight_scale,
)
from .reports import Report, VerificationError
from .scalars import ZERO, as_scalar
from .sl2 import Sl2Triple, decompose_sl2_module

__all__ = [
    "ReductionError",
    "ReductionInput",
    "ReductionResult",
    "GradedSubalgebra",
    "choose_lambda0",
    "build_sl2_triple",
    "graded_subalgebra",
    "levi_form",
    "reduce",
]


class ReductionError(VerificationError):
    """A reduction step failed; ``claim`` names the property that does not hold for the input."""


@dataclass(frozen=True)
class ReductionInput:
    pair: SymmetricPair
    levi: Subspace
    torus: Subspace
    omega: SymplecticPairForm | None = None
    realization: object = None


@dataclass(frozen=True)
class GradedSubalgebra:
    algebra: LieAlgebra
    grading: Grading
    parts: dict  # degree -> Subspace of the ambient algebra
    embedding: Matrix  # columns: adapted basis in ambient coordinates
    pair: SymmetricPair

    def to_local(self, x: Sequence) -> tuple:
        return coordinates_in(self.embedding.columns(), x)

    @property
    def odd_basis(self) -> list[tuple]:
        return [b for d, S in sorted(self.parts.items()) if d % 2 for b in S.basis]


@dataclass(frozen=True)
class ReductionResult:
    subalgebra: LieAlgebra
    grading: Grading
    triple: Sl2Triple  # in subalgebra coordinates
    lambda0: tuple
    embedding: Matrix
    ambient_triple: tuple
    weights: WeightDecomposition
    checks: Report
    restricted_realization: object = None
    graded: GradedSubalgebra | None = field(default=None, repr=False)


def _multiple(w, lam) -> int | None:
    from .realization import weight_multiple

    return weight_multiple(w, lam)


def choose_lambda0(W: WeightDecomposition) -> tuple:
    """First canonical weight ``λ`` (lexicographic) with ``p_l^λ != 0`` and ``p_l^{kλ} = 0`` for ``|k| > 1``."""
    if W.levi is None:
        raise ValueError("the weight decomposition carries no Levi split")
    present = [lam for lam, _ in W.p_weights if not weight_is_zero(lam) and W.p_levi(lam).dim]
    cands = sorted({canonical_sign(lam) for lam in present}, key=lambda w: tuple(x.sort_key() for x in w))
    for lam in cands:
        if all(_multiple(mu, lam) in (None, 1, -1) for mu in present):
            return lam
    if not cands:
        raise ReductionError("nonzero Levi weight", "no nonzero Levi weight in p", W.table())
    raise ReductionError("multiple-free weight", "every Levi weight has a nonzero multiple |k| > 1 in p", W.table())


def levi_form(L: LieAlgebra, levi: Subspace):
    """The Killing form of the Levi subalgebra as a function on ambient vectors."""
    K = killing_form(induced_algebra(L, levi.basis)).gram

    def B(x, y):
        cx, cy = levi.coordinates(x), levi.coordinates(y)
        return sum((a * b for a, b in zip(cx, K.apply(cy)) if a and b), ZERO)

    return B


def build_sl2_triple(inp: ReductionInput, lambda0: tuple, W: WeightDecomposition | None = None) -> Sl2Triple:
    L = inp.pair.algebra
    if W is None:
        W = weight_decompose(inp.pair, inp.torus, inp.levi)
    B = levi_form(L, inp.levi)
    t = list(W.torus)
    M = Matrix([[B(a, b) for b in t] for a in t], len(t))
    sol = solve_linear(M, lambda0)
    if not sol.consistent:
        raise ReductionError("grading element exists", "B_l restricted to the torus cannot represent lambda0")
    h = lin_comb(sol.solution, t, L.dim)
    bhh = B(h, h)
    if not bhh:
        raise ReductionError("B_l non-degenerate", "B_l(h, h) = 0 for the dual of lambda0")
    e0 = tuple(x * as_scalar(2) / bhh for x in h)
    b00 = B(e0, e0)
    Pp, Pm = W.p_levi(lambda0), W.p_levi(weight_scale(-1, lambda0))
    if Pp.dim == 0 or Pp.dim != Pm.dim:
        raise ReductionError("B_l non-degenerate", f"dim p_l^(+l0) = {Pp.dim}, dim p_l^(-l0) = {Pm.dim}")
    ep = Pp.basis[0]
    G = Matrix([[B(a, b) for b in Pm.basis] for a in Pp.basis], Pm.dim)
    rhs = [b00 / 2] + [ZERO] * (Pp.dim - 1)
    sol = solve_linear(G, rhs)
    if not sol.consistent:
        raise ReductionError("B_l non-degenerate", "B_l pairs p_l^(+l0) and p_l^(-l0) degenerately")
    em = lin_comb(sol.solution, Pm.basis, L.dim)
    T = Sl2Triple(e0, ep, em, L)
    rel = T.relations()
    if not rel.passed:
        raise ReductionError("standard triple", rel.first_failure.name)
    for a in Pp.basis:
        for b in Pm.basis:
            want = tuple(x * (2 * B(a, b) / b00) for x in e0)
            if L.bracket(a, b) != want:
                raise ReductionError("bracket formula on p_l^(+-l0)", "[p+, p-] is not 2 B_l(p+, p-)/B_l(e0, e0) e0")
    return T


def graded_subalgebra(W: WeightDecomposition, lambda0: tuple) -> GradedSubalgebra:
    """Odd degrees are the p-weight spaces at odd multiples of ``lambda0``; even degrees are their brackets."""
    P = W.pair
    L = P.algebra
    parts: dict[int, Subspace] = {}
    for w, S in W.p_weights:
        if weight_is_zero(w):
            continue
        d = _multiple(w, lambda0)
        if d is not None and d % 2:
            parts[d] = S
    odd = dict(parts)
    for a, A in odd.items():
        for b, Bs in odd.items():
            if a <= b:
                br = bracket_space(L, A, Bs)
                if br.dim:
                    parts[a + b] = parts.get(a + b, L.zero()) + br
    parts = {d: S for d, S in sorted(parts.items()) if S.dim}
    basis, degs, labels = [], [], []
    for d, S in parts.items():
        for i, b in enumerate(S.basis):
            basis.append(b)
            degs.append(d)
            nz = [j for j, x in enumerate(b) if x]
            labels.append(L.labels[nz[0]] if len(nz) == 1 and b[nz[0]] == 1 else f"g{d}_{i}")
    try:
        alg = induced_algebra(L, basis, labels)
    except ValueError as exc:
        raise ReductionError("g' is a subalgebra", str(exc)) from None
    G = Grading(alg, tuple(degs))
    emb = Matrix.from_columns(basis, L.dim) if basis else Matrix.zeros(L.dim, 0)
    return GradedSubalgebra(alg, G, parts, emb, SymmetricPair(alg, G.even(), G.odd()))


def _require(rep: Report, name: str, ok: bool, message: str = "", witness=None):
    rep.add(name, ok, "" if ok else message, None if ok else witness)
    if not ok:
        raise ReductionError(name, message or "check failed", witness)


def reduce(inp: ReductionInput) -> ReductionResult:
    P = inp.pair
    L = P.algebra
    checks = Report("reduction")
    pv = validate_pair(P)
    _require(checks, "symmetric pair", pv.passed, "" if pv.passed else pv.first_failure.message)
    _require(checks, "transvective", pv.details["transvective"], "[p, p] != k")
    if solvability_report(L).is_solvable:
        raise ReductionError("not solvable", "nothing to reduce: the algebra is solvable")
    lv = verify_levi(L, inp.levi)
    _require(checks, "levi subalgebra", lv.passed,
             "" if lv.passed else f"verify_levi: {lv.first_failure.name}: {lv.first_failure.message}")
    lk, lp = inp.levi.intersection(P.k), inp.levi.intersection(P.p)
    _require(checks, "levi is sigma-invariant", lk.dim + lp.dim == inp.levi.dim)
    _require(checks, "torus in levi and k", lk.contains_space(inp.torus))
    rad = radical(L)
    W = weight_decompose(P, inp.torus, inp.levi, rad)
    lam0 = choose_lambda0(W)
    T = build_sl2_triple(inp, lam0, W)
    checks.add("standard triple", True)
    sub = graded_subalgebra(W, lam0)
    g = sub.algebra
    gr = validate_grading(sub.grading)
    _require(checks, "grading bracket law", gr.passed, "" if gr.passed else gr.first_failure.message)
    ev, od = sub.grading.even(), sub.grading.odd()
    _require(checks, "g' transvective", bracket_space(g, od, od) == ev, "[g'odd, g'odd] != g'even")
    ambient_sub = L.span(sub.embedding.columns())
    _require(checks, "g' meets levi in the triple", ambient_sub.intersection(inp.levi) == L.span([T.e0, T.e_plus, T.e_minus]))
    loc = tuple(sub.to_local(x) for x in (T.e0, T.e_plus, T.e_minus))
    r1 = check_rank_one_type(sub.grading, *loc)
    _require(checks, "rank-one type", r1.passed, "" if r1.passed else r1.first_failure.name)
    g0 = sub.parts.get(0, L.zero())
    _require(checks, "dim g'_0 meets levi in a line", g0.intersection(inp.levi).dim == 1)
    lt = Sl2Triple(*loc, g)
    dec = decompose_sl2_module(*lt.operators())
    odd_hw = [n for n in dec.multiset if n % 2]
    _require(checks, "even highest weights", not odd_hw, f"odd highest weights {odd_hw}")
    if inp.omega is not None:
        ob = sub.odd_basis
        gram = Matrix([[inp.omega.value(a, b) for b in ob] for a in ob], len(ob))
        _require(checks, "omega non-degenerate on g'odd", gram.rank() == len(ob))
    rr = None
    if inp.realization is not None:
        from .realization import check_rank_one_realization, restrict_realization, validate_realization

        rr = restrict_realization(inp.realization, W, lam0, sub)
        vr = validate_realization(rr.realization)
        _require(checks, "restricted realization valid", vr.passed,
                 "" if vr.passed else vr.first_failure.name)
        cr = check_rank_one_realization(rr.realization, loc[0])
        _require(checks, "restricted realization of rank-one type", cr.passed,
                 "" if cr.passed else cr.first_failure.name)
    return ReductionResult(g, sub.grading, lt, lam0, sub.embedding, (T.e0, T.e_plus, T.e_minus), W, checks, rr, sub)
