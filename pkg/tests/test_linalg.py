import pytest
import sympy
from hypothesis import given, strategies as st

from liecert.linalg import (
    BilinearForm,
    EigenvalueOutsideField,
    LinearAlgebraError,
    Matrix,
    NonCommutingOperators,
    NotDiagonalizable,
    Subspace,
    charpoly,
    eigenvalues,
    form_radical,
    simultaneous_eigendecomposition,
    solve_linear,
)
from liecert.scalars import GaussianRational

from conftest import gaussians, rationals

I = GaussianRational(0, 1)


def matrices(n_max=4, entries=rationals(4)):
    return st.integers(1, n_max).flatmap(
        lambda n: st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n)
    ).map(Matrix)


def to_sympy(M: Matrix):
    def conv(c):
        return sympy.Rational(int(c.re.numerator), int(c.re.denominator)) + sympy.I * sympy.Rational(
            int(c.im.numerator), int(c.im.denominator))
    return sympy.Matrix(M.nrows, M.ncols, lambda i, j: conv(M[i, j]))


@given(matrices())
def test_rank_and_det_match_sympy(M):
    S = to_sympy(M)
    assert M.rank() == S.rank()
    assert sympy.simplify(to_sympy(Matrix([[M.det()]]))[0, 0] - S.det()) == 0


@given(matrices(entries=gaussians(3)))
def test_kernel_vectors_are_annihilated(M):
    K = M.kernel()
    assert len(K) + M.rank() == M.ncols
    for v in K:
        assert not any(M.apply(v))


@given(matrices(entries=gaussians(3)))
def test_charpoly_matches_sympy(M):
    x = sympy.Symbol("x")
    want = sympy.Poly(to_sympy(M).charpoly(x).as_expr(), x).all_coeffs()[::-1]
    got = [to_sympy(Matrix([[c]]))[0, 0] for c in charpoly(M)]
    assert [sympy.simplify(a - b) for a, b in zip(got, want)] == [0] * len(want)


@given(matrices())
def test_inverse(M):
    if M.det():
        assert M @ M.inverse() == Matrix.identity(M.nrows)
    else:
        with pytest.raises(ZeroDivisionError, match="singular"):
            M.inverse()


@given(matrices(), st.data())
def test_solve_linear_consistent_rhs(M, data):
    x = data.draw(st.lists(rationals(4), min_size=M.ncols, max_size=M.ncols))
    b = M.apply(x)
    sol = solve_linear(M, b)
    assert sol.consistent
    assert M.apply(sol.solution) == b


def test_solve_linear_inconsistent():
    sol = solve_linear(Matrix([[1, 0], [1, 0]]), [1, 2])
    assert not sol.consistent


def test_subspace_lattice_operations():
    A = Subspace(3, [(1, 0, 0), (0, 1, 0)])
    B = Subspace(3, [(0, 1, 0), (0, 0, 1)])
    assert (A + B).dim == 3
    assert A.intersection(B) == Subspace(3, [(0, 2, 0)])
    assert A.coordinates((3, 4, 0)) == tuple(GaussianRational(x) for x in (3, 4))
    assert not A.contains((0, 0, 1))


def test_eigenvalues_in_gaussian_field():
    rot = Matrix([[0, -1], [1, 0]])
    assert sorted(str(l) for l, _ in eigenvalues(rot)) == sorted([str(I), str(-I)])


def test_eigenvalue_outside_field():
    with pytest.raises(EigenvalueOutsideField):
        eigenvalues(Matrix([[0, 2], [1, 0]]))


def test_not_diagonalizable_and_noncommuting():
    with pytest.raises(NotDiagonalizable):
        simultaneous_eigendecomposition([Matrix([[1, 1], [0, 1]])])
    with pytest.raises(NonCommutingOperators):
        simultaneous_eigendecomposition([Matrix([[1, 0], [0, 2]]), Matrix([[0, 1], [0, 0]])])


def test_joint_eigenspaces():
    A = Matrix.diagonal([1, 1, 2])
    B = Matrix.diagonal([3, 4, 3])
    pieces = simultaneous_eigendecomposition([A, B])
    assert [tuple(int(x) for x in w) for w, _ in pieces] == [(1, 3), (1, 4), (2, 3)]
    assert all(len(b) == 1 for _, b in pieces)


def test_form_radical_and_symmetry_kind():
    B = BilinearForm(Matrix([[0, 1, 0], [-1, 0, 0], [0, 0, 0]]), "antisymmetric")
    assert form_radical(B) == [tuple(GaussianRational(x) for x in (0, 0, 1))]
    with pytest.raises(LinearAlgebraError):
        BilinearForm(Matrix([[0, 1], [1, 0]]), "antisymmetric")
