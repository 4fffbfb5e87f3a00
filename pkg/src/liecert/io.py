"""JSON file formats for algebras, pairs, realizations, reduction inputs and certificates."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .catalog import omega_from_pairs
from .lie import LieAlgebra
from .linalg import Matrix
from .pairs import Grading, SymmetricPair, SymplecticPairForm
from .scalars import ScalarParseError, parse_scalar

__all__ = [
    "InputError",
    "Source",
    "load",
    "loads",
    "parse_lie",
    "parse_pair",
    "parse_realization",
    "parse_reduction",
    "parse_obstruct",
    "lie_to_doc",
    "pair_to_doc",
]


class InputError(ValueError):
    """Malformed input; ``line``/``column`` are 1-based when known."""

    def __init__(self, message: str, where: str = "", line: int | None = None, column: int | None = None,
                 path: str | None = None):
        self.where, self.line, self.column, self.path = where, line, column, path
        loc = f"{path or '<input>'}"
        if line is not None:
            loc += f":{line}:{column}"
        if where:
            loc += f" at {where}"
        super().__init__(f"{loc}: {message}")


class Source:
    """Raw text kept next to the decoded document so that errors can point into the file."""

    def __init__(self, text: str, path: str | None = None):
        self.text, self.path = text, path
        try:
            self.doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(exc.msg, "", exc.lineno, exc.colno, path) from None

    def locate(self, needle: str) -> tuple[int | None, int | None]:
        pos = self.text.find(json.dumps(needle))
        if pos < 0:
            return None, None
        line = self.text.count("\n", 0, pos) + 1
        return line, pos - (self.text.rfind("\n", 0, pos) + 1) + 1

    def error(self, message: str, where: str, token: str | None = None, offset: int = 0) -> InputError:
        line, col = self.locate(token) if token is not None else (None, None)
        if col is not None:
            col += 1 + offset  # skip the opening quote
        return InputError(message, where, line, col, self.path)


def load(path: str | Path) -> Source:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read file: {exc.strerror}", path=str(p)) from None
    return Source(text, str(p))


def loads(text: str) -> Source:
    return Source(text)


def _get(src: Source, doc: dict, key: str, where: str, kind=None, default: Any = ...):
    if not isinstance(doc, dict):
        raise src.error("expected a JSON object", where)
    if key not in doc:
        if default is not ...:
            return default
        raise src.error(f"missing key {key!r}", where)
    val = doc[key]
    if kind is not None and not isinstance(val, kind):
        raise src.error(f"{key!r} has the wrong type", f"{where}.{key}" if where else key)
    return val


def _scalar(src: Source, tok, where: str):
    try:
        return parse_scalar(tok)
    except ScalarParseError as exc:
        raise src.error(f"bad scalar {tok!r}: {exc.reason}", where, tok if isinstance(tok, str) else None,
                        exc.position) from None


def _index(src: Source, x, bound: int, where: str) -> int:
    if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < bound:
        raise src.error(f"index {x!r} outside 0..{bound - 1}", where)
    return x


def _indices(src: Source, xs, bound: int, where: str) -> list[int]:
    if not isinstance(xs, list):
        raise src.error("expected a list of indices", where)
    out = [_index(src, x, bound, f"{where}[{t}]") for t, x in enumerate(xs)]
    if len(set(out)) != len(out):
        raise src.error("repeated index", where)
    return out


def _pair_entries(src: Source, rows, bound: int, where: str) -> list[tuple[int, int, Any]]:
    """``[[i, j, "scalar"], ...]`` with ``i < j``."""
    if not isinstance(rows, list):
        raise src.error("expected a list of [i, j, scalar] entries", where)
    out = []
    for t, row in enumerate(rows):
        w = f"{where}[{t}]"
        if not isinstance(row, list) or len(row) != 3:
            raise src.error("expected [i, j, scalar]", w)
        i, j = _index(src, row[0], bound, w), _index(src, row[1], bound, w)
        if not i < j:
            raise src.error("entries must have i < j", w)
        out.append((i, j, _scalar(src, row[2], f"{w}[2]")))
    return out


def _matrix_entries(src: Source, rows, nr: int, nc: int, where: str) -> Matrix:
    if not isinstance(rows, list):
        raise src.error("expected a list of [i, j, scalar] entries", where)
    ent = {}
    for t, row in enumerate(rows):
        w = f"{where}[{t}]"
        if not isinstance(row, list) or len(row) != 3:
            raise src.error("expected [i, j, scalar]", w)
        i, j = _index(src, row[0], nr, w), _index(src, row[1], nc, w)
        ent[(i, j)] = _scalar(src, row[2], f"{w}[2]")
    return Matrix.from_entries(nr, nc, ent)


def parse_lie(src: Source, doc: dict | None = None, where: str = "") -> LieAlgebra:
    doc = src.doc if doc is None else doc
    dim = _get(src, doc, "dim", where, int)
    if dim < 0:
        raise src.error("negative dimension", f"{where}.dim")
    labels = _get(src, doc, "labels", where, list, None)
    if labels is not None and (len(labels) != dim or len(set(labels)) != dim
                               or not all(isinstance(x, str) for x in labels)):
        raise src.error("labels must be dim distinct strings", f"{where}.labels")
    entries = []
    for t, row in enumerate(_get(src, doc, "brackets", where, list, [])):
        w = f"{where}.brackets[{t}]"
        if not isinstance(row, list) or len(row) != 4:
            raise src.error("expected [i, j, k, scalar]", w)
        i, j, k = (_index(src, x, dim, w) for x in row[:3])
        if not i < j:
            raise src.error("bracket entries must have i < j", w)
        entries.append((i, j, k, _scalar(src, row[3], f"{w}[3]")))
    return LieAlgebra.from_brackets(dim, entries, labels)


def parse_pair(src: Source, doc: dict | None = None, where: str = "") -> tuple[SymmetricPair, SymplecticPairForm | None, Grading | None]:
    """Pair file; ``omega`` entries use algebra indices of p-basis vectors."""
    doc = src.doc if doc is None else doc
    L = parse_lie(src, doc, where)
    k = _indices(src, _get(src, doc, "k", where, list), L.dim, f"{where}.k")
    p = _indices(src, _get(src, doc, "p", where, list), L.dim, f"{where}.p")
    if sorted(k + p) != list(range(L.dim)):
        raise src.error("k and p indices must partition the basis", where)
    P = SymmetricPair.from_indices(L, sorted(k), sorted(p))
    form = None
    if "omega" in doc:
        pos = {i: t for t, i in enumerate(sorted(p))}
        ent = []
        for i, j, s in _pair_entries(src, doc["omega"], L.dim, f"{where}.omega"):
            if i not in pos or j not in pos:
                raise src.error(f"omega entry ({i}, {j}) is not on p", f"{where}.omega")
            a, b = pos[i], pos[j]
            ent.append((a, b, s) if a < b else (b, a, -s))
        form = SymplecticPairForm(P, omega_from_pairs(len(p), ent))
    grading = None
    if "grading" in doc:
        g = _get(src, doc, "grading", where, list)
        if len(g) != L.dim or not all(isinstance(x, int) and not isinstance(x, bool) for x in g):
            raise src.error("grading needs one integer degree per basis vector", f"{where}.grading")
        grading = Grading(L, tuple(g))
    return P, form, grading


def parse_realization(src: Source, doc: dict | None = None, where: str = ""):
    from .realization import ExtrinsicRealization, SplitSymplecticSpace

    doc = src.doc if doc is None else doc
    P, _, _ = parse_pair(src, _get(src, doc, "pair", where, dict), f"{where}.pair")
    L = P.algebra
    sp = _get(src, doc, "space", where, dict)
    w = f"{where}.space"
    m = _get(src, sp, "dim", w, int)
    if m < 0:
        raise src.error("negative dimension", f"{w}.dim")
    Omega = omega_from_pairs(m, _pair_entries(src, _get(src, sp, "Omega", w, list), m, f"{w}.Omega"))
    V1 = _indices(src, _get(src, sp, "V1", w, list), m, f"{w}.V1")
    V2 = _indices(src, _get(src, sp, "V2", w, list), m, f"{w}.V2")
    space = SplitSymplecticSpace.from_indices(Omega, V1, V2)
    lam = _get(src, doc, "Lambda", where, dict)
    unknown = set(lam) - set(L.labels)
    if unknown:
        raise src.error(f"Lambda names unknown basis labels {sorted(unknown)}", f"{where}.Lambda")
    Lambda = [_matrix_entries(src, lam.get(lbl, []), m, m, f"{where}.Lambda.{lbl}") for lbl in L.labels]
    v = _matrix_entries(src, _get(src, doc, "v", where, list), m, L.dim, f"{where}.v")
    return ExtrinsicRealization(P, space, Lambda, v)


def _vector(src: Source, xs, dim: int, where: str) -> tuple:
    if not isinstance(xs, list) or len(xs) != dim:
        raise src.error(f"expected a vector of {dim} scalars", where)
    return tuple(_scalar(src, x, f"{where}[{t}]") for t, x in enumerate(xs))


def parse_reduction(src: Source, doc: dict | None = None):
    from .reduction import ReductionInput

    doc = src.doc if doc is None else doc
    P, form, _ = parse_pair(src, doc)
    L = P.algebra
    for key in ("levi", "torus"):
        if key not in doc:
            raise src.error(f"reduction input needs {key!r}", "")
    levi = L.coordinate_span(_indices(src, doc["levi"], L.dim, ".levi"))
    torus = L.coordinate_span(_indices(src, doc["torus"], L.dim, ".torus"))
    R = None
    if "realization" in doc:
        ref = doc["realization"]
        if isinstance(ref, str):
            base = Path(src.path).parent if src.path else Path(".")
            sub = load(base / ref)
            R = parse_realization(sub)
        else:
            R = parse_realization(src, ref, ".realization")
    return ReductionInput(P, levi, torus, form, R)


def parse_obstruct(src: Source):
    """Reduction input when ``levi``/``torus`` are present, else a rank-one pair with optional ``triple``."""
    from .obstruction.pipeline import RankOneInput

    doc = src.doc
    if "levi" in doc or "torus" in doc:
        return parse_reduction(src)
    P, form, grading = parse_pair(src)
    if form is None:
        raise src.error("obstruction input needs omega", "")
    triple = None
    if "triple" in doc:
        t = _get(src, doc, "triple", "", list)
        if len(t) != 3:
            raise src.error("triple is [e0, e+, e-]", ".triple")
        triple = tuple(_vector(src, x, P.algebra.dim, f".triple[{i}]") for i, x in enumerate(t))
    return RankOneInput(form, grading, triple)


def lie_to_doc(L: LieAlgebra) -> dict:
    br = []
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            for k, c in sorted(L.structure.get((i, j), {}).items()):
                if c:
                    br.append([i, j, k, str(c)])
    return {"dim": L.dim, "labels": list(L.labels), "brackets": br}


def pair_to_doc(P: SymmetricPair, form: SymplecticPairForm | None = None, grading: Grading | None = None) -> dict:
    L = P.algebra
    k = [i for i in range(L.dim) if P.k.contains(L.basis_vector(i))]
    p = [i for i in range(L.dim) if P.p.contains(L.basis_vector(i))]
    doc = lie_to_doc(L)
    doc.update(k=k, p=p)
    if form is not None and len(p) == P.p.dim:
        G = form.omega.gram
        doc["omega"] = [[p[a], p[b], str(G[a, b])] for a in range(len(p)) for b in range(a + 1, len(p)) if G[a, b]]
    if grading is not None:
        doc["grading"] = list(grading.degree_map)
    return doc
