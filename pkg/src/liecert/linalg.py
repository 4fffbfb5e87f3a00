"""Exact linear algebra over Q(i).

Matrices are dense and immutable. When every entry is real the entries are
kept as bare ``mpq`` values and all kernels run on those directly; a single
non-real entry upgrades the whole matrix to :class:`GaussianRational`
elements. Both element types share the generic row-reduction code below.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import flint
from gmpy2 import mpq

from .scalars import GaussianRational, ONE, ZERO, as_scalar

__all__ = [
    "Matrix",
    "BilinearForm",
    "Subspace",
    "LinearSolution",
    "LinearAlgebraError",
    "NonCommutingOperators",
    "EigenvalueOutsideField",
    "NotDiagonalizable",
    "vector",
    "zero_vector",
    "unit_vector",
    "solve_linear",
    "kernel",
    "rank",
    "charpoly",
    "eigenvalues",
    "simultaneous_eigendecomposition",
    "form_radical",
    "scalar_ops",
]

_MPQ = type(mpq(0))
Vector = tuple


class LinearAlgebraError(ValueError):
    pass


class NonCommutingOperators(LinearAlgebraError):
    def __init__(self, i: int, j: int):
        self.pair = (i, j)
        super().__init__(f"operators {i} and {j} do not commute")


class EigenvalueOutsideField(LinearAlgebraError):
    def __init__(self, operator_index: int, factor: str):
        self.operator_index = operator_index
        self.factor = factor
        super().__init__(
            f"operator {operator_index} has an eigenvalue outside Q(i) (irreducible factor {factor})"
        )


class NotDiagonalizable(LinearAlgebraError):
    def __init__(self, operator_index: int, eigenvalue, algebraic: int, geometric: int):
        self.operator_index = operator_index
        self.eigenvalue = eigenvalue
        super().__init__(
            f"operator {operator_index} is not diagonalizable: eigenvalue {eigenvalue} has "
            f"algebraic multiplicity {algebraic} but eigenspace dimension {geometric}"
        )


# ---------------------------------------------------------------------------
# element helpers
# ---------------------------------------------------------------------------

def _lift(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    return GaussianRational(x)


def _field_rows(rows):
    """Return rows in the cheapest element type able to hold them, plus a realness flag."""
    real = True
    for r in rows:
        for x in r:
            if isinstance(x, GaussianRational):
                if x.im:
                    real = False
                    break
            elif not isinstance(x, (_MPQ, int)):
                raise TypeError(f"unexpected matrix entry {x!r}")
        if not real:
            break
    if real:
        return [[x.re if isinstance(x, GaussianRational) else mpq(x) for x in r] for r in rows], True
    return [[_lift(x) for x in r] for r in rows], False


def vector(values: Iterable) -> Vector:
    return tuple(as_scalar(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if j == i else ZERO for j in range(n))


def vec_add(u: Vector, w: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, w))


def vec_sub(u: Vector, w: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, w))


def vec_scale(c, u: Vector) -> Vector:
    c = as_scalar(c)
    return tuple(c * a for a in u)


def vec_is_zero(u: Vector) -> bool:
    return not any(u)


def lin_comb(coeffs: Sequence, vectors: Sequence[Vector], n: int) -> Vector:
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for i, x in enumerate(v):
                if x:
                    out[i] = out[i] + c * x
    return tuple(out)


def scalar_ops(a, b) -> dict:
    """Field operations on a pair of scalars (inverse of ``b`` is ``None`` when b = 0)."""
    a, b = as_scalar(a), as_scalar(b)
    return {
        "add": a + b,
        "mul": a * b,
        "neg": -a,
        "inverse": None if b.is_zero() else b.inverse(),
    }


# ---------------------------------------------------------------------------
# row reduction kernel
# ---------------------------------------------------------------------------

def _fq(x):
    return flint.fmpq(int(x.numerator), int(x.denominator))


def _mq(e):
    return mpq(int(e.p), int(e.q))


def _all_mpq(rows) -> bool:
    return all(type(x) is _MPQ for r in rows for x in r)


def _to_flint(rows, ncols: int):
    return flint.fmpq_mat(len(rows), ncols, [_fq(x) for r in rows for x in r])


def _from_flint(M) -> list[list]:
    m = M.ncols()
    flat = [_mq(e) for e in M.entries()]
    return [flat[i * m:(i + 1) * m] for i in range(M.nrows())]


def _rref(rows: list[list], ncols: int) -> tuple[list[list], list[int]]:
    """Gauss-Jordan elimination; returns (rows, pivot columns) with pivots normalized to 1.

    Only the first ``ncols`` columns are searched for pivots; any further
    columns are carried along (augmented systems).
    """
    if rows and _all_mpq(rows):
        return _rref_flint(rows, ncols)
    return _rref_generic(rows, ncols)


def _rref_flint(rows, ncols):
    width = len(rows[0])
    R, _ = _to_flint(rows, width).rref()
    out = _from_flint(R)
    pivots: list[int] = []
    # rref is column-prefix consistent, so pivots past ncols only affect augmented tails
    for r in out:
        c = next((j for j, x in enumerate(r) if x), None)
        if c is None or c >= ncols:
            break
        pivots.append(c)
    return out, pivots


def _rref_generic(rows: list[list], ncols: int) -> tuple[list[list], list[int]]:
    nrows = len(rows)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        lead = prow[c]
        if lead != 1:
            inv = 1 / lead
            prow = [x * inv if x else x for x in prow]
            rows[r] = prow
        nz = [j for j in range(c, len(prow)) if prow[j]]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if f:
                for j in nz:
                    row[j] = row[j] - f * prow[j]
        pivots.append(c)
        r += 1
    return rows, pivots


def _kernel_from_rref(rows, pivots, ncols, zero, one) -> list[list]:
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [zero] * ncols
        v[f] = one
        for i, p in enumerate(pivots):
            x = rows[i][f]
            if x:
                v[p] = -x
        basis.append(v)
    return basis


def _out(x) -> GaussianRational:
    return x if isinstance(x, GaussianRational) else GaussianRational(x)


# ---------------------------------------------------------------------------
# Matrix
# ---------------------------------------------------------------------------

class Matrix:
    """Dense immutable matrix over Q(i). Out-of-range access raises ``IndexError``."""

    __slots__ = ("nrows", "ncols", "_d", "_real")

    def __init__(self, data: Sequence[Sequence], ncols: int | None = None):
        rows = [list(r) for r in data]
        nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise LinearAlgebraError("ragged matrix rows")
        conv = []
        for r in rows:
            conv.append([as_scalar(x) if not isinstance(x, (GaussianRational, _MPQ)) else x for x in r])
        d, real = _field_rows(conv)
        self._init(nrows, ncols, d, real)

    def _init(self, nrows, ncols, d, real):
        object.__setattr__(self, "nrows", nrows)
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "_d", tuple(tuple(r) for r in d))
        object.__setattr__(self, "_real", real)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def _raw(cls, nrows: int, ncols: int, d, real: bool | None = None) -> "Matrix":
        m = object.__new__(cls)
        if real is None:
            d, real = _field_rows(d)
        elif real:
            d = [[x.re if isinstance(x, GaussianRational) else x for x in r] for r in d]
        m._init(nrows, ncols, d, real)
        return m

    # -- constructors ----------------------------------------------------
    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> "Matrix":
        ncols = nrows if ncols is None else ncols
        z = mpq(0)
        return cls._raw(nrows, ncols, [[z] * ncols for _ in range(nrows)], True)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.diagonal([1] * n)

    @classmethod
    def diagonal(cls, values: Sequence) -> "Matrix":
        n = len(values)
        vals = [as_scalar(v) for v in values]
        d = [[vals[i] if i == j else ZERO for j in range(n)] for i in range(n)]
        return cls._raw(n, n, d)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int | None = None) -> "Matrix":
        columns = [list(c) for c in columns]
        if nrows is None:
            nrows = len(columns[0]) if columns else 0
        d = [[_lift(as_scalar(columns[j][i])) for j in range(len(columns))] for i in range(nrows)]
        return cls._raw(nrows, len(columns), d)

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, entries) -> "Matrix":
        """Build from ``{(i, j): scalar}`` or an iterable of ``(i, j, scalar)``."""
        d = [[ZERO] * ncols for _ in range(nrows)]
        if isinstance(entries, dict):
            items = ((k, v) for k, v in entries.items())
        else:
            items = (((e[0], e[1]), e[2]) for e in entries)
        for (i, j), s in items:
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise IndexError(f"entry ({i}, {j}) outside a {nrows}x{ncols} matrix")
            d[i][j] = d[i][j] + as_scalar(s)
        return cls._raw(nrows, ncols, d)

    # -- access ------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def is_real(self) -> bool:
        return self._real

    def __getitem__(self, idx) -> GaussianRational:
        i, j = idx
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(f"index ({i}, {j}) outside a {self.nrows}x{self.ncols} matrix")
        return _out(self._d[i][j])

    def row(self, i: int) -> Vector:
        if not 0 <= i < self.nrows:
            raise IndexError(i)
        return tuple(_out(x) for x in self._d[i])

    def column(self, j: int) -> Vector:
        if not 0 <= j < self.ncols:
            raise IndexError(j)
        return tuple(_out(r[j]) for r in self._d)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def rows_list(self) -> list[Vector]:
        return [self.row(i) for i in range(self.nrows)]

    def raw_rows(self) -> list[list]:
        return [list(r) for r in self._d]

    def entries(self) -> list[tuple[int, int, GaussianRational]]:
        """Nonzero entries as ``(i, j, value)`` in row-major order."""
        return [(i, j, _out(x)) for i, r in enumerate(self._d) for j, x in enumerate(r) if x]

    # -- structure ---------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        if self._real == other._real:
            return self._d == other._d
        return all(_out(a) == _out(b) for ra, rb in zip(self._d, other._d) for a, b in zip(ra, rb))

    def __hash__(self):
        return hash((self.shape, tuple(tuple(_out(x) for x in r) for r in self._d)))

    def is_zero(self) -> bool:
        return not any(x for r in self._d for x in r)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def transpose(self) -> "Matrix":
        return Matrix._raw(self.ncols, self.nrows, [list(c) for c in zip(*self._d)] if self.nrows else
                           [[] for _ in range(self.ncols)], self._real)

    T = property(transpose)

    def trace(self) -> GaussianRational:
        if not self.is_square():
            raise LinearAlgebraError("trace of a non-square matrix")
        s = mpq(0) if self._real else ZERO
        for i in range(self.nrows):
            s = s + self._d[i][i]
        return _out(s)

    # -- arithmetic --------------------------------------------------------
    def _pair(self, other: "Matrix"):
        if self._real and other._real:
            return self._d, other._d, True
        a = self._d if not self._real else [[_lift(x) for x in r] for r in self._d]
        b = other._d if not other._real else [[_lift(x) for x in r] for r in other._d]
        return a, b, False

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise LinearAlgebraError(f"shape mismatch {self.shape} + {other.shape}")
        a, b, real = self._pair(other)
        return Matrix._raw(self.nrows, self.ncols, [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)],
                           True if real else None)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise LinearAlgebraError(f"shape mismatch {self.shape} - {other.shape}")
        a, b, real = self._pair(other)
        return Matrix._raw(self.nrows, self.ncols, [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)],
                           True if real else None)

    def __neg__(self) -> "Matrix":
        return Matrix._raw(self.nrows, self.ncols, [[-x for x in r] for r in self._d], self._real)

    def scale(self, c) -> "Matrix":
        c = as_scalar(c)
        if self._real and c.is_real():
            q = c.re
            return Matrix._raw(self.nrows, self.ncols, [[q * x for x in r] for r in self._d], True)
        return Matrix._raw(self.nrows, self.ncols, [[c * _lift(x) for x in r] for r in self._d])

    def __mul__(self, c):
        if isinstance(c, Matrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise LinearAlgebraError(f"shape mismatch {self.shape} @ {other.shape}")
            a, b, real = self._pair(other)
            if real and self.nrows and other.ncols and self.ncols:
                prod = _to_flint(a, self.ncols) * _to_flint(b, other.ncols)
                return Matrix._raw(self.nrows, other.ncols, _from_flint(prod), True)
            bt = list(zip(*b)) if other.nrows else [() for _ in range(other.ncols)]
            zero = mpq(0) if real else ZERO
            out = []
            for ra in a:
                nz = [(k, x) for k, x in enumerate(ra) if x]
                row = []
                for col in bt:
                    s = zero
                    for k, x in nz:
                        y = col[k]
                        if y:
                            s = s + x * y
                    row.append(s)
                out.append(row)
            return Matrix._raw(self.nrows, other.ncols, out, True if real else None)
        return self.apply(other)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.ncols:
            raise LinearAlgebraError(f"cannot apply a {self.shape} matrix to a vector of length {len(v)}")
        v = [as_scalar(x) if not isinstance(x, GaussianRational) else x for x in v]
        if self._real and not any(x.im for x in v):
            vr = [x.re for x in v]
            outr = []
            zero = mpq(0)
            for r in self._d:
                s = zero
                for x, y in zip(r, vr):
                    if x and y:
                        s = s + x * y
                outr.append(GaussianRational(s))
            return tuple(outr)
        out = []
        for r in self._d:
            s = ZERO
            for x, y in zip(r, v):
                if x and y:
                    s = s + y * x
            out.append(s)
        return tuple(out)

    def commutator(self, other: "Matrix") -> "Matrix":
        return self @ other - other @ self

    def power(self, k: int) -> "Matrix":
        out = Matrix.identity(self.nrows)
        for _ in range(k):
            out = out @ self
        return out

    # -- reductions ----------------------------------------------------------
    def rref(self) -> tuple["Matrix", list[int]]:
        rows, piv = _rref([list(r) for r in self._d], self.ncols)
        return Matrix._raw(self.nrows, self.ncols, rows, self._real), piv

    def rank(self) -> int:
        return len(_rref([list(r) for r in self._d], self.ncols)[1])

    def kernel(self) -> list[Vector]:
        rows, piv = _rref([list(r) for r in self._d], self.ncols)
        zero, one = (mpq(0), mpq(1)) if self._real else (ZERO, ONE)
        return [tuple(_out(x) for x in v) for v in _kernel_from_rref(rows, piv, self.ncols, zero, one)]

    def det(self) -> GaussianRational:
        if not self.is_square():
            raise LinearAlgebraError("determinant of a non-square matrix")
        rows = [list(r) for r in self._d]
        n = self.nrows
        det = mpq(1) if self._real else ONE
        for c in range(n):
            piv = next((i for i in range(c, n) if rows[i][c]), None)
            if piv is None:
                return ZERO
            if piv != c:
                rows[c], rows[piv] = rows[piv], rows[c]
                det = -det
            p = rows[c][c]
            det = det * p
            inv = 1 / p
            for i in range(c + 1, n):
                f = rows[i][c]
                if f:
                    f = f * inv
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
        return _out(det)

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise LinearAlgebraError("inverse of a non-square matrix")
        n = self.nrows
        one, zero = (mpq(1), mpq(0)) if self._real else (ONE, ZERO)
        aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(self._d)]
        rows, piv = _rref(aug, n)
        if piv != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return Matrix._raw(n, n, [r[n:] for r in rows], self._real)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.nrows != other.nrows:
            raise LinearAlgebraError("row count mismatch in hstack")
        a, b, real = self._pair(other)
        return Matrix._raw(self.nrows, self.ncols + other.ncols, [list(x) + list(y) for x, y in zip(a, b)],
                           True if real else None)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix._raw(len(rows), len(cols), [[self._d[i][j] for j in cols] for i in rows], self._real)

    def __repr__(self):
        body = "; ".join(" ".join(str(_out(x)) for x in r) for r in self._d)
        return f"Matrix({self.nrows}x{self.ncols}: [{body}])"


# ---------------------------------------------------------------------------
# linear systems
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LinearSolution:
    """Result of :func:`solve_linear`.

    When the system is consistent, ``solution`` is one exact solution and
    ``kernel`` spans the homogeneous solutions. Otherwise ``witness`` is a row
    combination ``y`` with ``y A = 0`` and ``y b = 1``.
    """

    consistent: bool
    solution: Vector | None = None
    kernel: tuple[Vector, ...] = ()
    witness: Vector | None = None


def solve_linear(A: Matrix, b: Sequence) -> LinearSolution:
    if A.nrows != len(b):
        raise LinearAlgebraError(f"A has {A.nrows} rows but b has length {len(b)}")
    m, n = A.nrows, A.ncols
    bm = Matrix([[x] for x in b], 1) if m else Matrix.zeros(0, 1)
    aug = A.hstack(bm).hstack(Matrix.identity(m))
    rows, piv = _rref(aug.raw_rows(), n + 1)
    if n in piv:
        r = piv.index(n)
        y = tuple(_out(x) for x in rows[r][n + 1:])
        return LinearSolution(False, witness=y)
    zero = ZERO
    x = [zero] * n
    for i, p in enumerate(piv):
        x[p] = _out(rows[i][n])
    return LinearSolution(True, solution=tuple(x), kernel=tuple(A.kernel()))


def kernel(A: Matrix) -> list[Vector]:
    return A.kernel()


def rank(A: Matrix) -> int:
    return A.rank()


# ---------------------------------------------------------------------------
# subspaces
# ---------------------------------------------------------------------------

class Subspace:
    """A linear subspace of an ambient coordinate space, kept in reduced row echelon form.

    Two subspaces of the same ambient space are equal iff their canonical
    bases coincide. ``parent`` optionally points at the owning object
    (e.g. a Lie algebra) and is ignored by comparisons.
    """

    __slots__ = ("ambient", "basis", "pivots", "parent")

    def __init__(self, ambient: int, vectors: Iterable[Sequence] = (), parent=None):
        vecs = [list(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient:
                raise LinearAlgebraError(f"vector of length {len(v)} in a {ambient}-dimensional space")
        if vecs:
            rows, real = _field_rows(vecs)
            rows, piv = _rref(rows, ambient)
            basis = tuple(tuple(_out(x) for x in rows[i]) for i in range(len(piv)))
        else:
            basis, piv = (), []
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "pivots", tuple(piv))
        object.__setattr__(self, "parent", parent)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def full(cls, n: int, parent=None) -> "Subspace":
        return cls(n, [unit_vector(n, i) for i in range(n)], parent)

    @classmethod
    def coordinate(cls, n: int, indices: Iterable[int], parent=None) -> "Subspace":
        return cls(n, [unit_vector(n, i) for i in indices], parent)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.dim

    def with_parent(self, parent) -> "Subspace":
        return Subspace(self.ambient, self.basis, parent)

    def reduce(self, v: Sequence) -> Vector:
        """Residual of ``v`` after subtracting its component along the pivot columns."""
        v = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if c:
                for j, x in enumerate(row):
                    if x:
                        v[j] = v[j] - c * x
        return tuple(v)

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    __contains__ = contains

    def coordinates(self, v: Sequence) -> Vector:
        """Coordinates of ``v`` in the canonical basis; raises if ``v`` is not in the space."""
        if not self.contains(v):
            raise LinearAlgebraError("vector is not in the subspace")
        return tuple(as_scalar(v[p]) for p in self.pivots)

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(b) for b in other.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.ambient, self.basis + other.basis, self.parent)

    def intersection(self, other: "Subspace") -> "Subspace":
        if not self.basis or not other.basis:
            return Subspace(self.ambient, (), self.parent)
        # solve sum a_i s_i - sum b_j o_j = 0
        cols = list(self.basis) + [tuple(-x for x in o) for o in other.basis]
        M = Matrix.from_columns(cols, self.ambient)
        vecs = [lin_comb(k[: self.dim], self.basis, self.ambient) for k in M.kernel()]
        return Subspace(self.ambient, vecs, self.parent)

    def is_complement(self, other: "Subspace") -> bool:
        return self.dim + other.dim == self.ambient and (self + other).dim == self.ambient

    def complement_indices(self) -> list[int]:
        """Coordinate indices spanning a complement (the non-pivot columns)."""
        pv = set(self.pivots)
        return [i for i in range(self.ambient) if i not in pv]

    def __repr__(self):
        return f"Subspace(dim={self.dim} in {self.ambient})"


def independent(vectors: Sequence[Sequence], n: int) -> bool:
    return Subspace(n, vectors).dim == len(vectors)


def coordinates_in(basis: Sequence[Sequence], v: Sequence) -> Vector:
    """Coordinates of ``v`` in an arbitrary linearly independent ``basis``."""
    n = len(v)
    res = solve_linear(Matrix.from_columns(basis, n), v)
    if not res.consistent:
        raise LinearAlgebraError("vector is not in the span")
    return res.solution


# ---------------------------------------------------------------------------
# bilinear forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BilinearForm:
    gram: Matrix
    symmetry_kind: str = "antisymmetric"

    def __post_init__(self):
        if not self.gram.is_square():
            raise LinearAlgebraError("gram matrix must be square")
        if self.symmetry_kind not in ("symmetric", "antisymmetric"):
            raise LinearAlgebraError(f"unknown symmetry kind {self.symmetry_kind!r}")
        g, gt = self.gram, self.gram.T
        ok = g == gt if self.symmetry_kind == "symmetric" else g == -gt
        if not ok:
            raise LinearAlgebraError(f"gram matrix is not {self.symmetry_kind}")

    @property
    def dim(self) -> int:
        return self.gram.nrows

    def __call__(self, x: Sequence, y: Sequence) -> GaussianRational:
        return self.value(x, y)

    def value(self, x: Sequence, y: Sequence) -> GaussianRational:
        gy = self.gram.apply(y)
        s = ZERO
        for a, b in zip(x, gy):
            if a and b:
                s = s + a * b
        return s

    def restricted_gram(self, basis: Sequence[Sequence]) -> Matrix:
        return Matrix([[self.value(u, w) for w in basis] for u in basis], len(basis))

    def is_nondegenerate(self) -> bool:
        return self.gram.rank() == self.dim


def form_radical(B: BilinearForm, basis: Sequence[Sequence] | None = None) -> list[Vector]:
    """Basis of ``{x in span(basis) : B(x, span(basis)) = 0}`` (whole space if basis is None)."""
    n = B.dim
    if basis is None:
        basis = [unit_vector(n, i) for i in range(n)]
    basis = list(basis)
    if not basis:
        return []
    if not independent(basis, n):
        raise LinearAlgebraError("subspace basis is not linearly independent")
    G = B.restricted_gram(basis)
    # B(sum c_i s_i, s_j) = (G^T c)_j
    return [lin_comb(c, basis, n) for c in G.T.kernel()]


# ---------------------------------------------------------------------------
# characteristic polynomials and eigenvalues
# ---------------------------------------------------------------------------

def charpoly(A: Matrix) -> list[GaussianRational]:
    """Coefficients of ``det(x I - A)``, lowest degree first (Hessenberg reduction)."""
    if not A.is_square():
        raise LinearAlgebraError("characteristic polynomial of a non-square matrix")
    n = A.nrows
    if A.is_real and n:
        return [GaussianRational(_mq(c)) for c in _to_flint(A.raw_rows(), n).charpoly().coeffs()]
    H = A.raw_rows()
    zero = mpq(0) if A.is_real else ZERO
    one = mpq(1) if A.is_real else ONE
    for m in range(1, n - 1):
        i = next((r for r in range(m, n) if H[r][m - 1]), None)
        if i is None:
            continue
        if i != m:
            H[i], H[m] = H[m], H[i]
            for r in H:
                r[i], r[m] = r[m], r[i]
        piv = H[m][m - 1]
        for j in range(m + 1, n):
            u = H[j][m - 1]
            if u:
                u = u / piv
                H[j] = [a - u * b for a, b in zip(H[j], H[m])]
                for r in H:
                    r[m] = r[m] + u * r[j]
    polys = [[one]]
    for m in range(1, n + 1):
        prev = polys[m - 1]
        h = H[m - 1][m - 1]
        p = [zero] + list(prev)
        for k, c in enumerate(prev):
            p[k] = p[k] - h * c
        t = one
        for i in range(1, m):
            t = t * H[m - i][m - i - 1]
            if not t:
                break
            coef = t * H[m - i - 1][m - 1]
            if coef:
                for k, c in enumerate(polys[m - i - 1]):
                    p[k] = p[k] - coef * c
        polys.append(p)
    return [_out(c) for c in polys[n]]


def _to_sympy(c: GaussianRational):
    import sympy

    re = sympy.Rational(int(c.re.numerator), int(c.re.denominator))
    if not c.im:
        return re
    return re + sympy.I * sympy.Rational(int(c.im.numerator), int(c.im.denominator))


def _from_sympy(e) -> GaussianRational:
    import sympy

    re, im = sympy.re(e), sympy.im(e)
    return GaussianRational(mpq(int(re.p), int(re.q)), mpq(int(im.p), int(im.q)))


def _is_rational_square(q) -> tuple[bool, object]:
    from gmpy2 import is_square, isqrt

    if q < 0:
        return False, None
    num, den = q.numerator, q.denominator
    if is_square(num) and is_square(den):
        return True, mpq(isqrt(num), isqrt(den))
    return False, None


def poly_roots(coeffs: Sequence[GaussianRational], operator_index: int = 0) -> list[tuple[GaussianRational, int]]:
    """Roots in Q(i) with multiplicities; raises if the polynomial does not split over Q(i).

    Real polynomials are factored over Q; an irreducible quadratic factor
    splits over Q(i) exactly when minus its discriminant is a rational square,
    and higher-degree irreducible factors cannot have roots in a quadratic
    field. Polynomials with non-real coefficients are factored over Q(i).
    """
    coeffs = [as_scalar(c) for c in coeffs]
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    if len(coeffs) <= 1:
        return []
    roots: dict[GaussianRational, int] = {}

    def add(r, mult):
        roots[r] = roots.get(r, 0) + mult

    if all(c.is_real() for c in coeffs):
        _, factors = flint.fmpq_poly([_fq(c.re) for c in coeffs]).factor()
        for f, mult in factors:
            cs = [_mq(c) for c in f.coeffs()]
            if f.degree() == 1:
                add(GaussianRational(-cs[0] / cs[1]), mult)
                continue
            if f.degree() == 2:
                c, b, a = cs
                disc = b * b - 4 * a * c
                ok, s = _is_rational_square(-disc)
                if ok and disc < 0:
                    for sgn in (1, -1):
                        add(GaussianRational(-b / (2 * a), sgn * s / (2 * a)), mult)
                    continue
            raise EigenvalueOutsideField(operator_index, str(f))
        return sorted(roots.items(), key=lambda kv: kv[0].sort_key())

    import sympy

    x = sympy.Symbol("x")
    P = sympy.Poly([_to_sympy(c) for c in reversed(coeffs)], x, domain="QQ_I")
    _, factors = P.factor_list()
    for f, mult in factors:
        cs = f.all_coeffs()
        if f.degree() != 1:
            raise EigenvalueOutsideField(operator_index, str(f.as_expr()))
        add(_from_sympy(-cs[1] / cs[0]), mult)
    return sorted(roots.items(), key=lambda kv: kv[0].sort_key())


def eigenvalues(A: Matrix, operator_index: int = 0) -> list[tuple[GaussianRational, int]]:
    return poly_roots(charpoly(A), operator_index)


def _restrict(op: Matrix, basis: list[Vector]) -> Matrix:
    """Matrix of ``op`` on an invariant subspace, in the given basis."""
    n, k = op.nrows, len(basis)
    B = Matrix.from_columns(basis, n)
    images = op @ B
    rows, piv = _rref(B.hstack(images).raw_rows(), k)
    if piv != list(range(k)):
        raise LinearAlgebraError("restriction basis is not independent")
    for r in rows[k:]:
        if any(r[k:]):
            raise LinearAlgebraError("subspace is not invariant under the operator")
    return Matrix._raw(k, k, [r[k:] for r in rows[:k]])


def simultaneous_eigendecomposition(ops: Sequence[Matrix]) -> list[tuple[tuple[GaussianRational, ...], list[Vector]]]:
    """Joint eigenspaces of pairwise-commuting diagonalizable operators.

    Returns ``(weight, basis)`` pairs sorted by weight, where ``weight[i]`` is
    the eigenvalue of ``ops[i]`` on that subspace. With no operators the
    result is empty; the caller decides the ambient dimension.
    """
    ops = list(ops)
    if not ops:
        return []
    n = ops[0].nrows
    for i, A in enumerate(ops):
        if A.shape != (n, n):
            raise LinearAlgebraError(f"operator {i} has shape {A.shape}, expected {(n, n)}")
    for i in range(len(ops)):
        for j in range(i + 1, len(ops)):
            if ops[i] @ ops[j] != ops[j] @ ops[i]:
                raise NonCommutingOperators(i, j)
    pieces: list[tuple[tuple, list[Vector]]] = [((), [unit_vector(n, i) for i in range(n)])]
    for idx, op in enumerate(ops):
        new = []
        for weight, basis in pieces:
            M = op if len(basis) == n and idx == 0 else _restrict(op, basis)
            for lam, mult in eigenvalues(M, idx):
                ker = (M - Matrix.identity(M.nrows).scale(lam)).kernel()
                if len(ker) != mult:
                    raise NotDiagonalizable(idx, lam, mult, len(ker))
                vecs = [lin_comb(c, basis, n) for c in ker]
                new.append((weight + (lam,), vecs))
        pieces = new
    pieces.sort(key=lambda wb: tuple(x.sort_key() for x in wb[0]))
    return pieces


restrict_operator = _restrict
