"""Constraint expansion and the step-by-step infeasibility argument for rank-one realizations.

Setup: the sl2 triple acts on V through E0, E+, E- and V splits into
isotypic components ``W_k = M_{2k} (x) U_k``. The images ``a_+ = v(a_{+1})``
and ``a_- = v(a_{-1})`` are written as ``a_+ = sum_k m_1 (x) u_k`` and
``a_- = sum_k m_{-1} (x) w_k`` with unknown ``u_k, w_k``. The operator
``A_0 = Λ(a_0)`` is ``a_+ o a_- + Ã_0`` with ``Ã_0`` in ``S^2(V_2)``; it
must satisfy

    [E+, [E-, A_0]] = (n^2 + n) A_0,     [E±, [E±, A_0]] = (n^2 - n) A_{±2},

where ``A_{±2} = a_± o a_± + (terms in S^2(V_2))``. Everything below is
computed in the formal calculus of ``formal.py``; nothing is taken from
reference intermediate values, except in ``replay_paper_chain``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..linalg import Matrix
from ..reports import VerificationError
from ..sl2 import standard_module
from . import formal as F

__all__ = [
    "TRUNCATION",
    "SUBSETS",
    "ConstraintSystem",
    "expand_conditions",
    "common_steps",
    "solve_lemma_chain",
    "oracle_certificate",
    "replay_paper_chain",
    "semisimple_certificate",
    "fmt",
]

TRUNCATION = 4
SUBSETS = ((1,), (2,), (1, 2))


def fmt(x) -> str:
    return str(Fraction(x))


def _key(k, kp) -> str:
    return f"{k},{kp}"


@dataclass
class ConstraintSystem:
    n: int
    S: tuple
    K: int
    a_plus: dict
    a_minus: dict
    a0_base: dict
    a0_blocks: dict  # component -> Circ (the solved part of Ã_0)
    eigenvalues: dict  # component -> (eigenvalue, 1 / (n^2 + n - eigenvalue))
    uniqueness: list
    free_block: tuple
    a0: dict
    lhs18: dict
    residual18: dict
    residual19: dict  # sign -> S^2(V_1) part of the residual
    zero: frozenset
    equations: list = field(default_factory=list)  # (tag, component, Circ) after the vanishing pattern

    def component(self, tag: str, comp) -> dict:
        want = tuple(sorted(tuple(c) for c in comp))
        for t, c, C in self.equations:
            if t == tag and c == want:
                return C
        return {}


def _T(C: dict) -> dict:
    """``pr_{S^2(V_2)} ad(E+) ad(E-)``."""
    return F.project(F.circ_E("+", F.circ_E("-", C)), F.is_s2v2)


def _eig_formula(comp) -> int:
    (k1, r1), (k2, r2) = comp
    return k1 * k1 + k1 + k2 * k2 + k2 - 2 * r1 * r1


def _group(C: dict) -> dict:
    out: dict = {}
    for m, c in C.items():
        out.setdefault(F.component(m), {})[m] = c
    return dict(sorted(out.items()))


def _eigen_uniqueness(n: int, K: int) -> list:
    rows = []
    target = n * n + n
    for k in range(K + 1):
        for kp in range(k, K + 1):
            for l in range(0, min(k, kp) + 1, 2):
                comp = tuple(sorted(((k, l), (kp, -l))))
                mono = {((k, l, "x"), (kp, -l, "y")) if (k, l) <= (kp, -l) else ((kp, -l, "y"), (k, l, "x")): Fraction(1)}
                img = _T(mono)
                eig = _eig_formula(comp)
                if img != F.circ_scale(eig, mono):
                    raise VerificationError("eigenvalue table", f"{F.component_label(comp)} is not an eigenvector")
                hit = eig == target
                expected = l == 0 and {k, kp} == {0, n}
                if hit != expected:
                    raise VerificationError("eigenvalue uniqueness", f"unexpected eigenvalue match at {F.component_label(comp)}")
                rows.append((comp, eig, hit))
    return rows


def expand_conditions(n: int, S=(1,), K: int = TRUNCATION) -> ConstraintSystem:
    if n not in (1, 2):
        raise ValueError("n must be 1 or 2")
    S = tuple(sorted(set(S)))
    if not S or any(k < 1 or k > K for k in S):
        raise ValueError("S must be a nonempty subset of 1..K")
    ap = {(k, 1, "u"): Fraction(1) for k in range(1, K + 1)}
    am = {(k, -1, "w"): Fraction(1) for k in range(1, K + 1)}
    base = F.circ(ap, am)
    target = n * n + n
    source = _group(F.project(F.circ_E("+", F.circ_E("-", base)), F.is_s2v2))
    blocks, eigs = {}, {}
    for comp, src in source.items():
        img = _T(src)
        eig = _eig_formula(comp)
        if img != F.circ_scale(eig, src):
            raise VerificationError("eigenvalue table", f"source in {F.component_label(comp)} is not an eigenvector")
        if eig == target:
            raise VerificationError("Ã_0 solvable", f"nonzero source on the free block {F.component_label(comp)}")
        inv = Fraction(1, target - eig)
        blocks[comp] = F.circ_scale(inv, src)
        eigs[comp] = (eig, inv)
    uniq = _eigen_uniqueness(n, K)
    free = ((0, 0), (n, 0))
    tau = F.circ({(0, 0, "t"): Fraction(1)}, {(n, 0, "t"): Fraction(1)})
    A0 = F.circ_add(base, *blocks.values(), tau)
    lhs18 = F.circ_E("+", F.circ_E("-", A0))
    res18 = F.circ_add(lhs18, F.circ_scale(-target, A0))
    if F.project(res18, F.is_s2v2):
        raise VerificationError("S^2(V_2) part solved", "the S^2(V_2) component of the first condition does not vanish")
    res19 = {}
    for sign, a in (("+", ap), ("-", am)):
        lhs = F.circ_E(sign, F.circ_E(sign, A0))
        res19[sign] = F.project(F.circ_add(lhs, F.circ_scale(-(n * n - n), F.circ(a, a))), F.is_s2v1)
    zero = frozenset((k, s) for k in range(1, K + 1) if k not in S for s in ("u", "w"))
    C = ConstraintSystem(n, S, K, ap, am, base, blocks, eigs, uniq, free, A0, lhs18, res18, res19, zero)
    for tag, R in (("first", res18), ("second+", res19["+"]), ("second-", res19["-"])):
        for comp, part in _group(F.drop_symbols(R, zero)).items():
            C.equations.append((tag, comp, part))
    return C


# ---------------------------------------------------------------------------
# common steps (independent of the vanishing pattern)
# ---------------------------------------------------------------------------

def _single(C: dict):
    if len(C) != 1:
        return None
    (m, c), = C.items()
    return m, c


def _normalization_step(n: int) -> dict:
    from ..catalog import omega_from_pairs
    from ..realization import CircElement, circ_to_operator

    # basis e+, e-, a+, a- of V_1 with the normalized values and omega(e+, e-) = 1
    Om = omega_from_pairs(4, [(0, 1, 1), (0, 3, n), (1, 2, n)])
    e = [tuple(1 if i == j else 0 for i in range(4)) for j in range(4)]
    ep, em, ap, am = e
    A0 = circ_to_operator(CircElement.of(ap, am), Om)
    vals = {"A0 e+": A0.apply(ep), "A0 e-": A0.apply(em)}
    want = {"A0 e+": tuple(-n * x for x in ap), "A0 e-": tuple(-n * x for x in am)}
    if n == 2:
        Ap, Am = circ_to_operator(CircElement.of(ap, ap), Om), circ_to_operator(CircElement.of(am, am), Om)
        vals.update({"A+2 e-": Ap.apply(em), "A+2 e+": Ap.apply(ep), "A-2 e+": Am.apply(ep), "A-2 e-": Am.apply(em)})
        want.update({"A+2 e-": tuple(-4 * x for x in ap), "A+2 e+": (0,) * 4,
                     "A-2 e+": tuple(-4 * x for x in am), "A-2 e-": (0,) * 4})
    for k, v in vals.items():
        if tuple(v) != tuple(want[k]):
            raise VerificationError("normalized actions", f"{k} = {v}")
    names = ("e+", "e-", "a+", "a-")

    def show(v):
        terms = [f"{fmt(c.to_fraction())} {names[i]}" for i, c in enumerate(v) if c]
        return " + ".join(terms) if terms else "0"

    return {"lemma": "normalization", "values": {k: show(v) for k, v in vals.items()}}


def common_steps(C: ConstraintSystem) -> list[dict]:
    n, K = C.n, C.K
    steps = []
    alpha, beta, table = {}, {}, []
    for comp, (eig, inv) in C.eigenvalues.items():
        (k1, r1), (k2, r2) = comp
        table.append({"component": F.component_label(comp), "eigenvalue": eig})
        if r1 == 0:
            beta[_key(k1, k2)] = fmt(inv)
        else:
            # comp is ((k, -2), (k', 2)): the block of (E+ a+^k') o (E- a-^k)
            alpha[_key(k2, k1)] = fmt(inv)
    steps.append({"lemma": "a0-shape", "values": {
        "n2+n": n * n + n,
        "eigenvalues": table,
        "alpha": alpha,
        "beta": beta,
        "eigenvalue_entries_checked": len(C.uniqueness),
        "free_blocks": [F.component_label(c) for c, _, hit in C.uniqueness if hit],
    }})
    used = F.circ_add(C.residual18, C.residual19["+"], C.residual19["-"])
    free_absent = not any(key[2] == "t" for m in F.project(used, F.is_s2v1) for key in m)
    if not free_absent:
        raise VerificationError("free block unused", "the free block reaches an S^2(V_1) component")
    steps.append({"lemma": "free-block", "values": {
        "component": F.component_label(C.free_block),
        "appears_in_used_components": False,
    }})
    steps.append(_normalization_step(n))
    coeffs, mirror = {}, {}
    for k in range(1, K + 1):
        for kp in range(1, K + 1):
            if k == kp:
                continue
            part = F.restrict_to(F.drop_symbols(C.residual18, {(k, "u")}), ((k, 1), (kp, -1)))
            one = _single(part)
            if one is None or set(one[0]) != {(k, 1, "w"), (kp, -1, "u")} or not one[1]:
                raise VerificationError("vanishing biconditional", f"component W_{k}^1 o W_{kp}^-1 is not a single term")
            coeffs[_key(k, kp)] = fmt(one[1])
            part = F.restrict_to(F.drop_symbols(C.residual18, {(k, "w")}), ((k, -1), (kp, 1)))
            one = _single(part)
            if one is None or set(one[0]) != {(k, -1, "u"), (kp, 1, "w")} or not one[1]:
                raise VerificationError("vanishing biconditional", f"component W_{k}^-1 o W_{kp}^1 is not a single term")
            mirror[_key(k, kp)] = fmt(one[1])
    steps.append({"lemma": "biconditional", "values": {
        "u_k = 0 term in W_k^1 o W_k'^-1": coeffs,
        "w_k = 0 term in W_k^-1 o W_k'^1": mirror,
        "conclusion": "a_+^k = 0 iff a_-^k = 0",
    }})
    high = {}
    for k in range(3, K + 1):
        part = F.restrict_to(C.residual18, ((k, 3), (k, -3)))
        one = _single(part)
        if one is None or set(one[0]) != {(k, 3, "u"), (k, -3, "w")} or not one[1]:
            raise VerificationError("high-k vanishing", f"component W_{k}^3 o W_{k}^-3 is not a single term")
        high[str(k)] = fmt(one[1])
    steps.append({"lemma": "high-k-vanishing", "values": {
        "W_k^3 o W_k^-3 coefficient": high,
        "bound": f"for k >= 3: n^2 + n + 8 - 2k^2 - 2k <= {n * n + n + 8 - 24} < 0 and (k-1)(k-2) != 0",
        "conclusion": "a_+^k = a_-^k = 0 for k >= 3",
    }})
    return steps


# ---------------------------------------------------------------------------
# per-pattern steps
# ---------------------------------------------------------------------------

def _strip_rho(poly: dict) -> dict:
    """Divide by the largest power of rho (rho != 0)."""
    if not poly:
        return {}
    m = min(poly)
    return {e - m: c for e, c in poly.items()}


def _rho_root(poly: dict):
    """``('none' | 'contradiction' | 'root', value)`` for ``poly(rho) = 0`` with ``rho != 0``."""
    p = _strip_rho({e: c for e, c in poly.items() if c})
    if not p:
        return "none", None
    if max(p) == 0:
        return "contradiction", None
    if max(p) == 1:
        return "root", -p.get(0, Fraction(0)) / p[1]
    raise VerificationError("r-values", "unexpected polynomial degree in rho")


def _diag_poly(C: dict, k: int) -> dict:
    sub = F.substitute_proportional(C, k)
    out: dict = {}
    for m, poly in sub.items():
        for e, c in poly.items():
            out[e] = out.get(e, 0) + c
    if len(sub) > 1:
        raise VerificationError("proportional substitution", f"more than one monomial survives in W_{k}")
    return {e: c for e, c in out.items() if c}


def _casimir_parts(C: ConstraintSystem, k: int) -> dict:
    comp = ((k, -1), (k, 1))

    def coef(piece):
        part = F.restrict_to(F.circ_E("+", F.circ_E("-", F.drop_symbols(piece, C.zero))), comp)
        return _diag_poly(part, k).get(1, Fraction(0))

    base = coef(C.a0_base)
    ablock = ((k, -2), (k, 2))
    bblock = ((k, 0), (k, 0))
    alpha = C.eigenvalues.get(ablock, (None, None))[1]
    beta = C.eigenvalues.get(bblock, (None, None))[1]
    apart = coef(C.a0_blocks[ablock]) if ablock in C.a0_blocks else Fraction(0)
    bpart = coef(C.a0_blocks[bblock]) if bblock in C.a0_blocks else Fraction(0)
    return {
        "base": base,
        "alpha": alpha,
        "alpha_coefficient": apart / alpha if alpha else Fraction(0),
        "beta": beta,
        "beta_coefficient": bpart / beta if beta else Fraction(0),
    }


def solve_lemma_chain(C: ConstraintSystem) -> dict:
    """One vanishing pattern: returns ``{"S", "steps", "verdict", "witness"}``."""
    n = C.n
    target = n * n + n
    steps = [{"lemma": "support", "values": {
        "S": list(C.S),
        "nonzero": [f"a_+^{k}, a_-^{k}" for k in C.S],
        "zero": [f"a_+^{k}, a_-^{k}" for k in range(1, C.K + 1) if k not in C.S],
    }}]
    witness = None
    for k in C.S:
        diag = dict(C.component("first", ((k, -1), (k, 1))))
        P = diag.pop(((k, -1, "w"), (k, 1, "u")), Fraction(0))
        Q = diag.pop(((k, -1, "u"), (k, 1, "w")), Fraction(0))
        if diag or not Q:
            raise VerificationError("proportionality", f"unexpected shape of W_{k}^1 o W_{k}^-1")
        # E+ a_-^k and E- a_+^k both land on m_0 with coefficient k + 1
        ratio = Fraction(F.raise_key((k, -1, "w"))[1], F.lower_key((k, 1, "u"))[1])
        steps.append({"lemma": "proportionality", "values": {
            "k": k, "P": fmt(P), "Q": fmt(Q),
            "conclusion": f"w_{k} = rho_{k} u_{k} with rho_{k} != 0",
            "r_plus": f"{fmt(ratio)} rho_{k}", "r_minus": f"1/({fmt(ratio)} rho_{k})",
        }})
        lhs = F.restrict_to(F.drop_symbols(C.lhs18, C.zero), ((k, -1), (k, 1)))
        ck = _diag_poly(lhs, k).get(1, Fraction(0))
        parts = _casimir_parts(C, k)
        if parts["base"] + parts["alpha_coefficient"] * (parts["alpha"] or 0) + \
                parts["beta_coefficient"] * (parts["beta"] or 0) != ck:
            raise VerificationError("casimir diagonal", "coefficient breakdown does not add up")
        if ck - target != P + Q:
            raise VerificationError("casimir diagonal", "P + Q disagrees with c_k - (n^2 + n)")
        steps.append({"lemma": "casimir-diagonal", "values": {
            "k": k, "c_k": fmt(ck), "n2+n": target,
            "base": fmt(parts["base"]),
            "alpha_coefficient": fmt(parts["alpha_coefficient"]),
            "beta_coefficient": fmt(parts["beta_coefficient"]),
            "holds": ck == target,
        }})
        if ck != target and witness is None:
            witness = {"reason": "diagonal coefficient", "k": k, "c_k": fmt(ck), "n2+n": target,
                       "conclusion": f"a_+^{k} o a_-^{k} = 0 against a_+^{k} != 0"}
        if n * n - n or ck == target:
            rp = _rho_root(_diag_poly(C.component("second+", ((k, 1), (k, 1))), k))
            rm = _rho_root(_diag_poly(C.component("second-", ((k, -1), (k, -1))), k))
            vals = {"k": k}
            if rp[0] == "contradiction" or rm[0] == "contradiction":
                vals["conclusion"] = "second condition forces rho = 0"
                if witness is None:
                    witness = {"reason": "second condition", "k": k, "conclusion": "rho_k = 0 against w_k != 0"}
            elif rp[0] == "root" and rm[0] == "root":
                r_plus = rp[1] * ratio
                r_minus = 1 / (rm[1] * ratio)
                prod = r_plus * r_minus
                vals.update({"r_plus": fmt(r_plus), "r_minus": fmt(r_minus), "product": fmt(prod)})
                if prod != 1 and witness is None:
                    witness = {"reason": "r-product", "k": k, "r_plus": fmt(r_plus), "r_minus": fmt(r_minus),
                               "product": fmt(prod), "required": "1"}
            steps.append({"lemma": "r-values", "values": vals})
    verdict = "infeasible" if witness is not None else "feasible"
    return {"S": list(C.S), "steps": steps, "verdict": verdict, "witness": witness or {}}


def oracle_certificate(n: int, K: int = TRUNCATION) -> dict:
    cases, common = [], None
    for S in SUBSETS:
        C = expand_conditions(n, S, K)
        if common is None:
            common = common_steps(C)
        cases.append(solve_lemma_chain(C))
    return {"version": 1, "mode": "oracle", "n": n, "truncation": K, "common_steps": common,
            "cases": cases, "discrepancies": []}


# ---------------------------------------------------------------------------
# replay of the reference closed forms
# ---------------------------------------------------------------------------

def _ref_alpha(n, k, kp):
    return Fraction(1, n * n + n - k * k - k - kp * kp - kp + 8)


def _ref_beta(n, k, kp):
    return Fraction(1, n * n + n - k * k - k - kp * kp - kp)


def _ref_casimir(n, k):
    if k == 1:
        return {"base": Fraction(2), "alpha_coefficient": Fraction(0), "beta_coefficient": Fraction(8),
                "c_k": 2 + 8 * _ref_beta(n, 1, 1)}
    return {"base": Fraction(10), "alpha_coefficient": Fraction(24), "beta_coefficient": Fraction(72),
            "c_k": 10 + 24 * _ref_alpha(n, 2, 2) + 72 * _ref_beta(n, 2, 2)}


def _ref_r(n, k):
    kk = k * k + k
    return Fraction(2) / (kk + 2 * _ref_beta(n, k, k) * kk * kk)


def replay_paper_chain(n: int, oracle: dict | None = None) -> dict:
    if n not in (1, 2):
        raise ValueError("n must be 1 or 2")
    target = n * n + n
    common = [{"lemma": "a0-shape", "values": {
        "alpha": {_key(k, kp): fmt(_ref_alpha(n, k, kp)) for k in (1, 2) for kp in (1, 2)},
        "beta": {_key(k, kp): fmt(_ref_beta(n, k, kp)) for k in (1, 2) for kp in (1, 2)},
    }}]
    cases = []
    for S in SUBSETS:
        steps, witness = [], None
        for k in S:
            cp = _ref_casimir(n, k)
            steps.append({"lemma": "casimir-diagonal", "values": {
                "k": k, "c_k": fmt(cp["c_k"]), "n2+n": target, "base": fmt(cp["base"]),
                "alpha_coefficient": fmt(cp["alpha_coefficient"]), "beta_coefficient": fmt(cp["beta_coefficient"]),
                "holds": cp["c_k"] == target,
            }})
            if cp["c_k"] != target and witness is None:
                witness = {"reason": "diagonal coefficient", "k": k, "c_k": fmt(cp["c_k"]), "n2+n": target}
            if n == 2:
                r = _ref_r(n, k)
                steps.append({"lemma": "r-values", "values": {
                    "k": k, "r_plus": fmt(r), "r_minus": fmt(r), "product": fmt(r * r)}})
                if r * r != 1 and witness is None:
                    witness = {"reason": "r-product", "k": k, "r_plus": fmt(r), "r_minus": fmt(r),
                               "product": fmt(r * r), "required": "1"}
        cases.append({"S": list(S), "steps": steps, "verdict": "infeasible" if witness else "feasible",
                      "witness": witness or {}})
    cert = {"version": 1, "mode": "replay", "n": n, "common_steps": common, "cases": cases, "discrepancies": []}
    if oracle is None:
        oracle = oracle_certificate(n)
    cert["discrepancies"] = compare_certificates(oracle, cert)
    return cert


def _step_values(cert: dict) -> dict:
    """Flatten comparable values: ``(lemma, k, field) -> value``."""
    out = {}
    for st in cert.get("common_steps", []):
        if st["lemma"] == "a0-shape":
            for name in ("alpha", "beta"):
                for kk, v in st["values"].get(name, {}).items():
                    out[(name, kk, "")] = v
    for case in cert["cases"]:
        for st in case["steps"]:
            v = st["values"]
            if st["lemma"] in ("casimir-diagonal", "r-values"):
                for f, x in v.items():
                    if f not in ("k", "n2+n", "conclusion"):
                        out[(st["lemma"], str(v["k"]), f)] = x
    return out


def compare_certificates(oracle: dict, replay: dict) -> list[dict]:
    a, b = _step_values(oracle), _step_values(replay)
    out = []
    for key in sorted(set(a) & set(b)):
        if a[key] != b[key]:
            lemma, k, f = key
            out.append({"n": oracle["n"], "step": lemma, "k": k, "quantity": f or lemma,
                        "oracle": a[key], "replay": b[key]})
    return out


# ---------------------------------------------------------------------------
# semisimple reduced algebra
# ---------------------------------------------------------------------------

def _invariant_forms(m: int) -> list:
    """Bilinear forms ``B`` on ``M_m`` with ``B(Ex, y) + B(x, Ey) = 0`` for the standard triple."""
    d = m + 1
    rows = []
    for E in standard_module(m):
        # (E^T B + B E)_{ij} = sum_a E_{ai} B_{aj} + sum_b B_{ib} E_{bj}
        for i in range(d):
            for j in range(d):
                row = [0] * (d * d)
                for a in range(d):
                    if E[a, i]:
                        row[a * d + j] += E[a, i]
                for b in range(d):
                    if E[b, j]:
                        row[i * d + b] += E[b, j]
                rows.append(row)
    return [Matrix([v[i * d:(i + 1) * d] for i in range(d)], d) for v in Matrix(rows, d * d).kernel()]


def semisimple_certificate(omega_pm, K: int = TRUNCATION) -> dict:
    """The reduced algebra is sl2 itself; ``omega_pm`` is ``omega(e+, e-)``."""
    table = {}
    for k in range(1, K + 1):
        forms = _invariant_forms(2 * k)
        if len(forms) != 1:
            raise VerificationError("invariant form", f"M_{2 * k} has {len(forms)} invariant forms")
        B = forms[0]
        if B != B.T:
            raise VerificationError("invariant form", f"the invariant form on M_{2 * k} is not symmetric")
        # m_1 and m_-1 sit at indices k + 1 and k - 1
        table[str(k)] = {
            "invariant_forms": 1,
            "symmetric": True,
            "B(m_1, m_-1)": fmt(B[k + 1, k - 1].to_fraction()),
            "E+ m_-1 / E- m_1": fmt(Fraction(F.raise_key((k, -1, "w"))[1], F.lower_key((k, 1, "u"))[1])),
        }
    w = Fraction(omega_pm.to_fraction() if hasattr(omega_pm, "to_fraction") else omega_pm)
    steps = [{"lemma": "semisimple-case", "values": {
        "identity": "E+ v(e-) = E- v(e+) forces w_k = u_k",
        "modules": table,
        "Omega(v e+, v e-)": "sum_k B_k(m_1, m_-1) beta_k(u_k, u_k) = 0 with beta_k antisymmetric",
        "omega(e+, e-)": fmt(w),
    }}]
    verdict = "infeasible" if w != 0 else "feasible"
    witness = {"reason": "pairing", "Omega(v e+, v e-)": "0", "omega(e+, e-)": fmt(w)} if w != 0 else {}
    return {"version": 1, "mode": "oracle", "n": None, "truncation": K, "common_steps": [],
            "cases": [{"S": None, "steps": steps, "verdict": verdict, "witness": witness}], "discrepancies": []}
