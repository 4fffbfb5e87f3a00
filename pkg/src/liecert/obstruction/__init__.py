from .abelian import InvariantAbelianResult, ObstructionError, find_invariant_abelian
from .certificate import canonical_json, digest, verify_certificate
from .chain import (
    ConstraintSystem,
    compare_certificates,
    expand_conditions,
    oracle_certificate,
    replay_paper_chain,
    semisimple_certificate,
    solve_lemma_chain,
)
from .pipeline import NO_REALIZATION, SOLVABLE, RankOneInput, prove_no_realization

__all__ = [
    "InvariantAbelianResult",
    "ObstructionError",
    "find_invariant_abelian",
    "canonical_json",
    "digest",
    "verify_certificate",
    "ConstraintSystem",
    "compare_certificates",
    "expand_conditions",
    "oracle_certificate",
    "replay_paper_chain",
    "semisimple_certificate",
    "solve_lemma_chain",
    "NO_REALIZATION",
    "SOLVABLE",
    "RankOneInput",
    "prove_no_realization",
]
