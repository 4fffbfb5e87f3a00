"""End-to-end non-existence pipeline: solvability, reduction, invariant abelian piece, lemma chain."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..lie import radical, solvability_report
from ..linalg import BilinearForm, Matrix
from ..pairs import Grading, SymplecticPairForm, validate_pair, validate_symplectic_pair
from ..reduction import ReductionInput, reduce
from .abelian import ObstructionError, find_invariant_abelian
from .certificate import verify_certificate
from .chain import oracle_certificate, replay_paper_chain, semisimple_certificate

__all__ = [
    "SOLVABLE",
    "NO_REALIZATION",
    "FEASIBLE",
    "RankOneInput",
    "ObstructionOutcome",
    "prove_no_realization",
    "series_certificate",
]

SOLVABLE = "solvable — theorem silent"
NO_REALIZATION = "no extrinsic symplectic realization exists"
FEASIBLE = "RED ALERT: a feasible case survived the obstruction chain"


@dataclass(frozen=True)
class RankOneInput:
    form: SymplecticPairForm
    grading: Grading | None = None
    triple: tuple | None = None  # (e0, e+, e-) in algebra coordinates; not needed for solvable input


@dataclass
class ObstructionOutcome:
    verdict: str
    document: dict = field(default_factory=dict)

    @property
    def established(self) -> bool:
        return self.verdict == NO_REALIZATION


def _vec(v: Sequence) -> list[str]:
    return [str(x) for x in v]


def series_certificate(L, sub=None) -> dict:
    sr = solvability_report(L, sub)
    return {
        "derived_dims": sr.derived_dims,
        "derived_length": sr.derived_length,
        "lower_central_dims": sr.lower_central_dims,
        "nilpotency_class": sr.nilpotency_class,
        "derived_series": [[_vec(b) for b in S.basis] for S in sr.derived_series],
        "solvable": sr.is_solvable,
        "nilpotent": sr.is_nilpotent,
    }


def _restricted_form(S: SymplecticPairForm, sub) -> SymplecticPairForm:
    """ω pulled back to the odd part of the graded subalgebra."""
    amb = [sub.embedding.apply(b) for b in sub.pair.p.basis]
    gram = Matrix([[S.value(a, b) for b in amb] for a in amb], len(amb))
    return SymplecticPairForm(sub.pair, BilinearForm(gram, "antisymmetric"))


def _chain_section(n: int) -> dict:
    oracle = oracle_certificate(n)
    replay = replay_paper_chain(n, oracle)
    return {"oracle": oracle, "replay": replay}


def _verdict_from(sections: dict) -> str:
    cases = [c for s in ("oracle",) for c in sections[s]["cases"]]
    return NO_REALIZATION if all(c["verdict"] == "infeasible" for c in cases) else FEASIBLE


def prove_no_realization(inp: ReductionInput | RankOneInput) -> ObstructionOutcome:
    if isinstance(inp, RankOneInput):
        S, G, triple = inp.form, inp.grading, inp.triple
        doc: dict = {"stage": "rank-one"}
    else:
        S = inp.omega
        if S is None:
            raise ObstructionError("symplectic", "the input pair carries no 2-form omega")
        doc = {"stage": "reduction"}
    P = S.pair
    L = P.algebra
    pv = validate_pair(P)
    if not pv.passed:
        raise ObstructionError("symmetric pair", pv.first_failure.message)
    if not pv.details["transvective"]:
        raise ObstructionError("transvective", "[p, p] != k")
    sv = validate_symplectic_pair(S)
    if not sv.passed:
        raise ObstructionError("symplectic", f"{sv.first_failure.name}: {sv.first_failure.message}")

    series = series_certificate(L)
    if series["solvable"]:
        return ObstructionOutcome(SOLVABLE, {"verdict": SOLVABLE, "series": series})

    if isinstance(inp, RankOneInput):
        if G is None or triple is None:
            raise ObstructionError("rank-one type", "a non-solvable rank-one input needs a grading and a triple")
        triple = tuple(tuple(x) for x in triple)
    else:
        res = reduce(inp)
        sub = res.graded
        S = _restricted_form(S, sub)
        G = res.grading
        triple = tuple(tuple(x) for x in (res.triple.e0, res.triple.e_plus, res.triple.e_minus))
        doc["reduction"] = {
            "lambda0": _vec(res.lambda0),
            "grading": list(G.degree_map),
            "labels": list(sub.algebra.labels),
            "triple": [_vec(x) for x in res.ambient_triple],
            "checks": [c.name for c in res.checks.checks],
        }
    g = S.pair.algebra
    if radical(g).dim == 0:
        w = S.value(triple[1], triple[2])
        cert = semisimple_certificate(w)
        ok = verify_certificate(cert)
        doc.update(case="semisimple", oracle=cert, replay=None, recheck=ok.passed)
        verdict = NO_REALIZATION if all(c["verdict"] == "infeasible" for c in cert["cases"]) and ok.passed else FEASIBLE
    else:
        ab = find_invariant_abelian(S, G, triple)
        sections = _chain_section(ab.n)
        checks = [verify_certificate(sections[m]) for m in ("oracle", "replay")]
        doc.update(case="rank-one", abelian=ab.summary(), **sections, recheck=all(c.passed for c in checks))
        verdict = _verdict_from(sections) if doc["recheck"] else FEASIBLE
    doc["verdict"] = verdict
    return ObstructionOutcome(verdict, doc)
