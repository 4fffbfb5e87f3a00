"""Command-line entry point: ``liecert check | reduce | obstruct``.

Exit codes: 0 checks passed, 1 validation failure, 2 non-existence established, 3 input error.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .io import InputError, Source, load, pair_to_doc, parse_lie, parse_obstruct, parse_pair, parse_realization, parse_reduction
from .lie import solvability_report, validate_lie
from .linalg import LinearAlgebraError
from .obstruction.certificate import canonical_json, digest, verify_certificate
from .obstruction.chain import oracle_certificate, replay_paper_chain
from .obstruction.pipeline import FEASIBLE, NO_REALIZATION, SOLVABLE, prove_no_realization
from .pairs import validate_grading, validate_pair, validate_symplectic_pair
from .reports import Report, VerificationError

__all__ = ["CommandResult", "cmd_check", "cmd_reduce", "cmd_obstruct", "main"]

OK, INVALID, OBSTRUCTED, INPUT_ERROR = 0, 1, 2, 3


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    machine: dict

    @property
    def human(self) -> str:
        return render_text(self.machine)

    @property
    def json(self) -> str:
        return canonical_json(self.machine)


def _envelope(command: str, src: Source | None, extra_input: dict | None = None) -> dict:
    inp = dict(extra_input or {})
    if src is not None:
        inp.update(path=src.path, sha256=digest(src.text))
    else:
        inp["sha256"] = digest(canonical_json(inp))
    return {"tool": "liecert", "version": __version__, "command": command, "input": inp}


def _report_doc(rep: Report) -> dict:
    return {
        "subject": rep.subject,
        "passed": rep.passed,
        "checks": [{"name": c.name, "passed": c.passed, **({"message": c.message} if c.message else {})}
                   for c in rep.checks],
    }


def _series_doc(L) -> dict:
    sr = solvability_report(L)
    return {"derived_dims": sr.derived_dims, "lower_central_dims": sr.lower_central_dims,
            "solvable": sr.is_solvable, "nilpotent": sr.is_nilpotent}


def _input_error(command: str, exc: InputError, src: Source | None = None) -> CommandResult:
    doc = _envelope(command, src, {"path": exc.path} if src is None else None)
    doc.update(status="input error", error={"message": str(exc), "line": exc.line, "column": exc.column,
                                            "where": exc.where})
    return CommandResult(INPUT_ERROR, doc)


def _failure(doc: dict, claim: str, message: str) -> CommandResult:
    doc.update(status="validation failure", error={"claim": claim, "message": message})
    return CommandResult(INVALID, doc)


def cmd_check(path: str, kind: str) -> CommandResult:
    command = f"check {kind}"
    try:
        src = load(path)
        if kind == "lie":
            obj = parse_lie(src)
        elif kind == "pair":
            obj = parse_pair(src)
        elif kind == "realization":
            obj = parse_realization(src)
        else:
            raise InputError(f"unknown kind {kind!r}")
    except InputError as exc:
        return _input_error(command, exc)
    except (ValueError, IndexError) as exc:
        return _input_error(command, InputError(str(exc), path=path))
    doc = _envelope(command, src)
    reports = []
    if kind == "lie":
        reports.append(validate_lie(obj))
        L = obj
    elif kind == "pair":
        P, form, grading = obj
        L = P.algebra
        reports.append(validate_lie(L))
        if reports[-1].passed:
            pv = validate_pair(P)
            reports.append(pv)
            if pv.passed:
                doc["transvective"] = bool(pv.details.get("transvective"))
            if pv.passed and form is not None:
                reports.append(validate_symplectic_pair(form))
            if grading is not None:
                reports.append(validate_grading(grading))
    else:
        from .realization import validate_realization

        L = obj.pair.algebra
        reports.append(validate_realization(obj))
    doc["reports"] = [_report_doc(r) for r in reports]
    valid = all(r.passed for r in reports)
    if valid:
        s = _series_doc(L)
        doc["series"] = s
        doc["status"] = "valid, " + ("solvable" if s["solvable"] else "not solvable")
        return CommandResult(OK, doc)
    first = next(r for r in reports if not r.passed).first_failure
    return _failure(doc, first.name, first.message)


def cmd_reduce(path: str) -> tuple[CommandResult, dict | None]:
    """Returns the report and, on success, the reduced pair document."""
    from .reduction import ReductionError, reduce

    try:
        src = load(path)
        inp = parse_reduction(src)
    except InputError as exc:
        return _input_error("reduce", exc), None
    except (ValueError, IndexError) as exc:
        return _input_error("reduce", InputError(str(exc), path=path)), None
    doc = _envelope("reduce", src)
    try:
        res = reduce(inp)
    except VerificationError as exc:
        msg = str(exc).split(": ", 1)[-1]
        return _failure(doc, exc.claim, msg), None
    except LinearAlgebraError as exc:
        return _failure(doc, "weight decomposition", str(exc)), None
    sub = res.graded
    from .obstruction.pipeline import _restricted_form

    form = _restricted_form(inp.omega, sub) if inp.omega is not None else None
    gdoc = pair_to_doc(sub.pair, form, res.grading)
    gdoc["triple"] = [[str(x) for x in v] for v in (res.triple.e0, res.triple.e_plus, res.triple.e_minus)]
    gdoc["embedding"] = [[str(x) for x in col] for col in sub.embedding.columns()]
    doc.update(status="reduced", lambda0=[str(x) for x in res.lambda0], grading=list(res.grading.degree_map),
               reduced=gdoc, checks=_report_doc(res.checks))
    return CommandResult(OK, doc), gdoc


def cmd_obstruct(path: str | None = None, n: int | None = None) -> CommandResult:
    if (path is None) == (n is None):
        return _input_error("obstruct", InputError("give either an input file or --n"))
    if n is not None:
        doc = _envelope("obstruct", None, {"n": n})
        oracle = oracle_certificate(n)
        replay = replay_paper_chain(n, oracle)
        recheck = verify_certificate(oracle).passed and verify_certificate(replay).passed
        infeasible = all(c["verdict"] == "infeasible" for c in oracle["cases"])
        verdict = NO_REALIZATION if infeasible and recheck else FEASIBLE
        doc.update(case="rank-one", oracle=oracle, replay=replay, recheck=recheck)
    else:
        try:
            src = load(path)
            inp = parse_obstruct(src)
        except InputError as exc:
            return _input_error("obstruct", exc)
        except (ValueError, IndexError) as exc:
            return _input_error("obstruct", InputError(str(exc), path=path))
        doc = _envelope("obstruct", src)
        try:
            out = prove_no_realization(inp)
        except VerificationError as exc:
            return _failure(doc, exc.claim, str(exc).split(": ", 1)[-1])
        verdict = out.verdict
        doc.update({k: v for k, v in out.document.items() if k != "verdict"})
    doc["verdict"] = verdict
    if verdict == NO_REALIZATION:
        doc["status"] = "obstruction established"
        return CommandResult(OBSTRUCTED, doc)
    if verdict == SOLVABLE:
        doc["status"] = "solvable"
        return CommandResult(OK, doc)
    doc["status"] = "RED ALERT: feasible case"
    return CommandResult(INVALID, doc)


def _flat(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) or _flat(x) for x in v)


def render_text(doc, indent: int = 0) -> str:
    """Plain-text rendering of a machine report; it carries exactly the same values."""
    pad = "  " * indent
    lines = []
    if isinstance(doc, dict):
        for k, v in doc.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_atom(v)}")
    elif isinstance(doc, list):
        for v in doc:
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}-")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_atom(v)}")
    else:
        lines.append(f"{pad}{_atom(doc)}")
    return "\n".join(lines)


def _atom(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, dict):
        return "{}"
    if isinstance(v, list):
        return "[" + ", ".join(_atom(x) for x in v) + "]"
    return str(v)


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="liecert", description="Exact checks for symplectic symmetric pairs.")
    ap.add_argument("--version", action="version", version=f"liecert {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    c = sub.add_parser("check", help="validate an algebra, pair or realization file")
    c.add_argument("kind", choices=("lie", "pair", "realization"))
    c.add_argument("path")
    common(c)
    r = sub.add_parser("reduce", help="reduce a non-solvable pair to rank-one type")
    r.add_argument("path")
    r.add_argument("--out", help="write the reduced pair here")
    common(r)
    o = sub.add_parser("obstruct", help="run the non-existence pipeline and emit a certificate")
    o.add_argument("path", nargs="?")
    o.add_argument("--n", type=int, choices=(1, 2))
    o.add_argument("--out", help="write the certificate here")
    common(o)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = _parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    payload = None
    if args.command == "check":
        res = cmd_check(args.path, args.kind)
    elif args.command == "reduce":
        res, payload = cmd_reduce(args.path)
    else:
        res = cmd_obstruct(args.path, args.n)
        if res.exit_code in (OK, OBSTRUCTED):
            payload = res.machine
    out = getattr(args, "out", None)
    if out and payload is not None:
        Path(out).write_text(canonical_json(payload), encoding="utf-8")
    sys.stdout.write(res.json if args.format == "json" else res.human + "\n")
    return res.exit_code


if __name__ == "__main__":
    sys.exit(main())
