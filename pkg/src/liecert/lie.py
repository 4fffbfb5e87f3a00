"""Lie algebras given by structure constants, and their structure theory."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .linalg import (
    BilinearForm,
    LinearAlgebraError,
    Matrix,
    Subspace,
    coordinates_in,
    lin_comb,
    unit_vector,
    zero_vector,
)
from .reports import Report, VerificationError
from .scalars import ZERO, GaussianRational, as_scalar

__all__ = [
    "LieAlgebra",
    "Subspace",
    "validate_lie",
    "solvability_report",
    "SolvabilityReport",
    "center",
    "centralizer",
    "killing_form",
    "radical",
    "quotient",
    "Quotient",
    "verify_levi",
    "bracket_space",
    "is_subalgebra",
    "is_ideal",
    "induced_algebra",
    "direct_sum",
]


class LieAlgebra:
    """Structure constants ``[b_i, b_j] = sum_k c[i][j][k] b_k``, stored sparsely.

    The constructor stores exactly what it is given so that malformed
    tensors can be validated; :meth:`from_brackets` fills in antisymmetry.
    """

    def __init__(self, dim: int, labels: Sequence[str] | None = None,
                 structure: dict[tuple[int, int], dict[int, object]] | None = None):
        if dim < 0:
            raise ValueError("dimension must be non-negative")
        self.dim = dim
        self.labels = list(labels) if labels is not None else [f"b{i}" for i in range(dim)]
        if len(self.labels) != dim:
            raise ValueError(f"{len(self.labels)} labels for a {dim}-dimensional algebra")
        if len(set(self.labels)) != dim:
            raise ValueError("basis labels must be distinct")
        st: dict[tuple[int, int], dict[int, GaussianRational]] = {}
        for (i, j), row in (structure or {}).items():
            for k, c in row.items():
                for idx in (i, j, k):
                    if not 0 <= idx < dim:
                        raise IndexError(f"structure index {idx} outside 0..{dim - 1}")
                c = as_scalar(c)
                if c:
                    st.setdefault((i, j), {})[k] = c
        self.structure = st
        self._ad: list[Matrix] | None = None

    @classmethod
    def from_brackets(cls, dim: int, brackets: Iterable[Sequence], labels: Sequence[str] | None = None) -> "LieAlgebra":
        """Build from ``(i, j, k, c)`` entries with ``i < j``; ``[b_j, b_i]`` is completed by antisymmetry."""
        st: dict[tuple[int, int], dict[int, GaussianRational]] = {}
        for i, j, k, c in brackets:
            if not i < j:
                raise ValueError(f"bracket entry ({i}, {j}) must have i < j")
            c = as_scalar(c)
            for key, val in (((i, j), c), ((j, i), -c)):
                row = st.setdefault(key, {})
                row[k] = row.get(k, ZERO) + val
        return cls(dim, labels, st)

    @classmethod
    def abelian(cls, dim: int, labels: Sequence[str] | None = None) -> "LieAlgebra":
        return cls(dim, labels, {})

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def c(self, i: int, j: int, k: int) -> GaussianRational:
        return self.structure.get((i, j), {}).get(k, ZERO)

    def basis_vector(self, i: int) -> tuple:
        return unit_vector(self.dim, i)

    def element(self, coeffs: dict[str, object] | Sequence) -> tuple:
        """A vector from ``{label: scalar}`` or a full coordinate list."""
        if isinstance(coeffs, dict):
            v = [ZERO] * self.dim
            for lab, s in coeffs.items():
                v[self.index(lab)] = as_scalar(s)
            return tuple(v)
        if len(coeffs) != self.dim:
            raise ValueError("coordinate vector has the wrong length")
        return tuple(as_scalar(s) for s in coeffs)

    def bracket(self, x: Sequence, y: Sequence) -> tuple:
        out = [ZERO] * self.dim
        xs = [(i, a) for i, a in enumerate(x) if a]
        ys = [(j, b) for j, b in enumerate(y) if b]
        for i, a in xs:
            for j, b in ys:
                row = self.structure.get((i, j))
                if row:
                    ab = a * b
                    for k, c in row.items():
                        out[k] = out[k] + ab * c
        return tuple(out)

    def ad_basis(self) -> list[Matrix]:
        if self._ad is None:
            mats = []
            for i in range(self.dim):
                ent = {}
                for j in range(self.dim):
                    for k, c in self.structure.get((i, j), {}).items():
                        ent[(k, j)] = c
                mats.append(Matrix.from_entries(self.dim, self.dim, ent))
            self._ad = mats
        return self._ad

    def ad(self, x: Sequence) -> Matrix:
        out = Matrix.zeros(self.dim)
        for a, A in zip(x, self.ad_basis()):
            if a:
                out = out + A.scale(a)
        return out

    def span(self, vectors: Iterable[Sequence]) -> Subspace:
        return Subspace(self.dim, vectors, self)

    def coordinate_span(self, indices: Iterable[int]) -> Subspace:
        return Subspace.coordinate(self.dim, indices, self)

    def whole(self) -> Subspace:
        return Subspace.full(self.dim, self)

    def zero(self) -> Subspace:
        return Subspace(self.dim, (), self)

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim})"


# ---------------------------------------------------------------------------
# validity
# ---------------------------------------------------------------------------

def validate_lie(L: LieAlgebra) -> Report:
    rep = Report("lie algebra")
    for (i, j), row in sorted(L.structure.items()):
        for k, c in sorted(row.items()):
            if L.c(j, i, k) != -c:
                rep.add("antisymmetry", False, f"c[{i}][{j}][{k}] = {c} but c[{j}][{i}][{k}] = {L.c(j, i, k)}",
                        witness=(i, j, k))
                return rep
    rep.add("antisymmetry", True)
    e = [L.basis_vector(i) for i in range(L.dim)]
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            for k in range(j + 1, L.dim):
                x, y, z = e[i], e[j], e[k]
                terms = (L.bracket(x, L.bracket(y, z)), L.bracket(y, L.bracket(z, x)), L.bracket(z, L.bracket(x, y)))
                defect = tuple(a + b + c for a, b, c in zip(*terms))
                if any(defect):
                    rep.add("jacobi", False, f"cyclic sum on ({L.labels[i]}, {L.labels[j]}, {L.labels[k]}) is "
                            + _fmt_vec(L, defect), witness={"triple": (i, j, k), "defect": defect})
                    return rep
    rep.add("jacobi", True)
    return rep


def _fmt_vec(L: LieAlgebra, v: Sequence) -> str:
    parts = [f"{c}*{L.labels[i]}" for i, c in enumerate(v) if c]
    return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# subspace operations
# ---------------------------------------------------------------------------

def bracket_space(L: LieAlgebra, A: Subspace, B: Subspace) -> Subspace:
    return L.span(L.bracket(a, b) for a in A.basis for b in B.basis)


def is_subalgebra(L: LieAlgebra, S: Subspace) -> tuple[bool, tuple | None]:
    for i, a in enumerate(S.basis):
        for j in range(i + 1, len(S.basis)):
            if not S.contains(L.bracket(a, S.basis[j])):
                return False, (i, j)
    return True, None


def is_ideal(L: LieAlgebra, I: Subspace) -> tuple[bool, tuple | None]:
    """Ideal test; the witness is ``(basis index of L, basis index of I)``."""
    for i in range(L.dim):
        e = L.basis_vector(i)
        for j, a in enumerate(I.basis):
            if not I.contains(L.bracket(e, a)):
                return False, (i, j)
    return True, None


def centralizer(L: LieAlgebra, S: Subspace, within: Subspace | None = None) -> Subspace:
    """``{x in within : [x, S] = 0}``."""
    base = list(within.basis) if within is not None else [L.basis_vector(i) for i in range(L.dim)]
    if not base:
        return L.zero()
    rows = []
    cols = []
    for b in base:
        col = []
        for s in S.basis:
            col.extend(L.bracket(b, s))
        cols.append(col)
    if not S.basis:
        return L.span(base)
    M = Matrix.from_columns(cols, len(cols[0]))
    return L.span(lin_comb(c, base, L.dim) for c in M.kernel())


def center(L: LieAlgebra) -> Subspace:
    return centralizer(L, L.whole())


# ---------------------------------------------------------------------------
# series
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SolvabilityReport:
    derived_series: tuple[Subspace, ...]
    lower_central_series: tuple[Subspace, ...]
    is_solvable: bool
    is_nilpotent: bool

    @property
    def derived_dims(self) -> list[int]:
        return [s.dim for s in self.derived_series]

    @property
    def lower_central_dims(self) -> list[int]:
        return [s.dim for s in self.lower_central_series]

    @property
    def derived_length(self) -> int:
        """Number of steps until the derived series reaches zero (0 for the zero algebra)."""
        return self.derived_dims.index(0) if self.is_solvable else -1

    @property
    def nilpotency_class(self) -> int:
        return self.lower_central_dims.index(0) if self.is_nilpotent else -1


def solvability_report(L: LieAlgebra, sub: Subspace | None = None) -> SolvabilityReport:
    """Derived and lower central series of ``L`` (or of a subalgebra ``sub``), capped at dim + 1 steps."""
    top = sub if sub is not None else L.whole()
    cap = top.dim + 1
    derived = [top]
    for _ in range(cap):
        nxt = bracket_space(L, derived[-1], derived[-1])
        if nxt == derived[-1]:
            break
        derived.append(nxt)
    lower = [top]
    for _ in range(cap):
        nxt = bracket_space(L, top, lower[-1])
        if nxt == lower[-1]:
            break
        lower.append(nxt)
    return SolvabilityReport(tuple(derived), tuple(lower), derived[-1].dim == 0, lower[-1].dim == 0)


# ---------------------------------------------------------------------------
# Killing form, radical, quotients
# ---------------------------------------------------------------------------

def killing_form(L: LieAlgebra) -> BilinearForm:
    ads = L.ad_basis()
    n = L.dim
    g = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            t = (ads[i] @ ads[j]).trace()
            g[i][j] = g[j][i] = t
    return BilinearForm(Matrix(g, n) if n else Matrix.zeros(0), "symmetric")


def induced_algebra(L: LieAlgebra, basis: Sequence[Sequence], labels: Sequence[str] | None = None) -> LieAlgebra:
    """Structure constants of the subalgebra spanned by ``basis``, in that basis."""
    basis = [tuple(b) for b in basis]
    m = len(basis)
    st = {}
    for i in range(m):
        for j in range(i + 1, m):
            br = L.bracket(basis[i], basis[j])
            if not any(br):
                continue
            try:
                co = coordinates_in(basis, br)
            except LinearAlgebraError:
                raise ValueError(f"span is not closed under the bracket: [{i}, {j}] leaves it") from None
            st[(i, j)] = {k: c for k, c in enumerate(co) if c}
            st[(j, i)] = {k: -c for k, c in enumerate(co) if c}
    return LieAlgebra(m, labels, st)


def radical(L: LieAlgebra) -> Subspace:
    """Cartan's criterion: the Killing-orthogonal of ``[L, L]``, verified to be a solvable ideal."""
    B = killing_form(L)
    D = bracket_space(L, L.whole(), L.whole())
    if D.dim == 0:
        rad = L.whole()
    else:
        rows = [B.gram.apply(d) for d in D.basis]
        rad = L.span(Matrix(rows, L.dim).kernel())
    ok, w = is_ideal(L, rad)
    if not ok:
        raise VerificationError("radical", "Killing-orthogonal of the derived algebra is not an ideal", w)
    if not solvability_report(L, rad).is_solvable:
        raise VerificationError("radical", "Killing-orthogonal of the derived algebra is not solvable")
    return rad


@dataclass(frozen=True)
class Quotient:
    """``L / ideal`` with basis the images of ``L``'s basis vectors at ``section``."""

    algebra: LieAlgebra
    projection: Matrix
    section: tuple[int, ...]
    ideal: Subspace
    parent: LieAlgebra

    def project(self, x: Sequence) -> tuple:
        r = self.ideal.reduce(x)
        return tuple(r[i] for i in self.section)

    def lift(self, y: Sequence) -> tuple:
        v = [ZERO] * self.parent.dim
        for c, i in zip(y, self.section):
            v[i] = c
        return tuple(v)

    def preimage(self, S: Subspace) -> Subspace:
        return self.parent.span([self.lift(b) for b in S.basis] + list(self.ideal.basis))


def quotient(L: LieAlgebra, I: Subspace) -> Quotient:
    ok, w = is_ideal(L, I)
    if not ok:
        i, j = w
        raise ValueError(f"not an ideal: [{L.labels[i]}, ideal basis vector {j}] leaves the subspace")
    section = tuple(I.complement_indices())
    Q = Quotient(LieAlgebra(0), Matrix.zeros(0, L.dim), section, I, L)
    m = len(section)
    st = {}
    for a in range(m):
        for b in range(a + 1, m):
            br = Q.project(L.bracket(L.basis_vector(section[a]), L.basis_vector(section[b])))
            if any(br):
                st[(a, b)] = {k: c for k, c in enumerate(br) if c}
                st[(b, a)] = {k: -c for k, c in enumerate(br) if c}
    alg = LieAlgebra(m, [L.labels[i] for i in section], st)
    proj = Matrix.from_columns([Q.project(L.basis_vector(i)) for i in range(L.dim)], m) if m else Matrix.zeros(0, L.dim)
    return Quotient(alg, proj, section, I, L)


def verify_levi(L: LieAlgebra, candidate: Subspace) -> Report:
    rep = Report("levi subalgebra")
    ok, w = is_subalgebra(L, candidate)
    if not rep.add("subalgebra", ok, "" if ok else f"bracket of candidate basis vectors {w} leaves the span", w):
        return rep
    sub = induced_algebra(L, candidate.basis)
    nondeg = killing_form(sub).is_nondegenerate()
    if not rep.add("semisimple", nondeg, "" if nondeg else "Killing form of the candidate is degenerate"):
        return rep
    rad = radical(L)
    comp = candidate.is_complement(rad)
    rep.add("complements radical", comp,
            "" if comp else f"dim candidate {candidate.dim} + dim radical {rad.dim} vs dim {L.dim}, "
                            f"sum has dim {(candidate + rad).dim}")
    return rep


def direct_sum(A: LieAlgebra, B: LieAlgebra) -> LieAlgebra:
    st = {}
    for (i, j), row in A.structure.items():
        st[(i, j)] = dict(row)
    n = A.dim
    for (i, j), row in B.structure.items():
        st[(i + n, j + n)] = {k + n: c for k, c in row.items()}
    return LieAlgebra(A.dim + B.dim, list(A.labels) + list(B.labels), st)
