"""Locating the invariant abelian piece ``a ~ M_{2n}`` inside a rank-one graded pair."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..lie import bracket_space, center, centralizer, quotient, radical
from ..linalg import Matrix, Subspace, lin_comb
from ..pairs import Grading, SymplecticPairForm, check_rank_one_type, validate_symplectic_pair
from ..reports import Report, VerificationError
from ..scalars import ZERO, as_scalar
from ..sl2 import Sl2Triple, decompose_sl2_module, lambda2_decomposition, restricted_action

__all__ = ["ObstructionError", "InvariantAbelianResult", "find_invariant_abelian", "odd_weight_count"]


class ObstructionError(VerificationError):
    pass


@dataclass(frozen=True)
class InvariantAbelianResult:
    n: int
    a: Subspace
    chain: tuple  # m_{-n} .. m_n in ambient coordinates, normalized
    a_plus: tuple
    a_minus: tuple
    center: Subspace
    z_hat: Subspace
    omega_pm: object  # omega(e+, e-)
    scale: object
    checks: Report

    def summary(self) -> dict:
        return {
            "n": self.n,
            "dim a": self.a.dim,
            "dim z(g)": self.center.dim,
            "dim z_hat": self.z_hat.dim,
            "omega(e+, e-)": str(self.omega_pm),
            "chain rescaled by": str(self.scale),
            "checks": [c.name for c in self.checks.checks],
        }


def odd_weight_count(n_i: int) -> int:
    """Number of odd degrees in ``M_{2 n_i}`` (degrees ``-n_i .. n_i``)."""
    return 2 * ((n_i + 1) // 2)


def _req(rep: Report, name: str, ok: bool, message: str = "", witness=None) -> None:
    rep.add(name, ok, "" if ok else message, None if ok else witness)
    if not ok:
        raise ObstructionError(name, message or "check failed", witness)


def find_invariant_abelian(S: SymplecticPairForm, G: Grading, triple: Sequence) -> InvariantAbelianResult:
    L = S.pair.algebra
    e0, ep, em = (tuple(x) for x in triple)
    rep = Report("invariant abelian subalgebra")
    r1 = check_rank_one_type(G, e0, ep, em)
    _req(rep, "rank-one type", r1.passed, "" if r1.passed else r1.first_failure.name)
    sp = validate_symplectic_pair(S)
    _req(rep, "symplectic pair", sp.passed, "" if sp.passed else sp.first_failure.message)
    rad = radical(L)
    _req(rep, "non-zero radical", rad.dim > 0, "the algebra is semisimple")

    z = center(L)
    Q = quotient(L, z)
    qrad = radical(Q.algebra)
    zq = centralizer(Q.algebra, qrad, qrad)
    z_hat = Q.preimage(zq)
    levi = L.span([e0, ep, em])
    T = Sl2Triple(e0, ep, em, L)
    # the trivial isotypic part of z_hat is its ad_l-kernel
    trivial = centralizer(L, levi, z_hat)
    _req(rep, "trivial part of z_hat is z(g)", trivial == z,
         "a contains no non-zero ad_l-invariant element" if trivial != z else "",
         {"dim trivial": trivial.dim, "dim z(g)": z.dim})
    a = bracket_space(L, levi, z_hat)
    dec = decompose_sl2_module(*restricted_action(L, T, a))
    labels = dec.labels()
    _req(rep, "a is irreducible M_2n with n in {1, 2}", labels in ([2], [4]), f"highest weights {labels}")
    n = labels[0] // 2

    _req(rep, "a is abelian", bracket_space(L, a, a).dim == 0)
    _req(rep, "[a, rad] in z(g)", z.contains_space(bracket_space(L, a, rad)))
    p = S.pair.p
    ap, radp = a.intersection(p), rad.intersection(p)
    perp = _omega_perp(S, radp)
    _req(rep, "a meet p is the omega-orthogonal of rad meet p", ap == perp, f"dims {ap.dim} vs {perp.dim}")
    _req(rep, "rad meet p is coisotropic", radp.contains_space(perp))
    _req(rep, "dim(a meet p) is the odd-weight count", ap.dim == odd_weight_count(n), f"{ap.dim} vs {odd_weight_count(n)}")
    _req(rep, "Lambda^2 M_2n has no trivial summand", not lambda2_decomposition(2 * n).has_trivial_summand)

    _, local = dec.chains()[0]
    chain = [lin_comb(v, a.basis, L.dim) for v in local]
    am, apl = chain[n - 1], chain[n + 1]
    w_ma, w_pa = S.value(em, apl), S.value(ep, am)
    _req(rep, "omega(e-, a+) = omega(e+, a-)", w_ma == w_pa, f"{w_ma} vs {w_pa}")
    _req(rep, "omega(e+, a-) != 0", bool(w_pa))
    c = as_scalar(n) / w_pa
    chain = [tuple(x * c for x in v) for v in chain]
    am, apl = chain[n - 1], chain[n + 1]
    zeros = {"omega(e+, a+)": S.value(ep, apl), "omega(e-, a-)": S.value(em, am), "omega(a+, a-)": S.value(apl, am)}
    bad = {k: str(v) for k, v in zeros.items() if v}
    _req(rep, "normalized values", not bad and S.value(ep, am) == n, str(bad))
    return InvariantAbelianResult(n, a, tuple(chain), apl, am, z, z_hat, S.value(ep, em), c, rep)


def _omega_perp(S: SymplecticPairForm, W: Subspace) -> Subspace:
    """ω-orthogonal of ``W`` inside ``p``."""

    pb = S.pair.p.basis
    L = S.pair.algebra
    if not W.dim:
        return S.pair.p
    M = Matrix([[S.value(w, b) for b in pb] for w in W.basis], len(pb))
    return L.span(lin_comb(k, pb, L.dim) for k in M.kernel()) if M.kernel() else L.zero()
