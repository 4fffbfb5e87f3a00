from hypothesis import given, strategies as st

from liecert.catalog import abelian, heisenberg, sl2, sl2_plus_h3, upper_triangular_gl2
from liecert.lie import (
    LieAlgebra,
    center,
    direct_sum,
    killing_form,
    quotient,
    radical,
    solvability_report,
    validate_lie,
    verify_levi,
)
from liecert.linalg import Matrix
from liecert.scalars import GaussianRational

from conftest import rationals


def transport(L: LieAlgebra, P: Matrix) -> LieAlgebra:
    """Same algebra in the basis given by the columns of ``P``."""
    cols = P.columns()
    Pinv = P.inverse()
    st_ = {}
    for i in range(L.dim):
        for j in range(L.dim):
            if i != j:
                br = Pinv.apply(L.bracket(cols[i], cols[j]))
                if any(br):
                    st_[(i, j)] = {k: c for k, c in enumerate(br) if c}
    return LieAlgebra(L.dim, None, st_)


def invertible(n):
    return st.lists(st.lists(rationals(3), min_size=n, max_size=n), min_size=n, max_size=n).map(Matrix).filter(
        lambda M: M.det() != 0)


def test_catalog_algebras_are_valid():
    for L in (sl2(), heisenberg(), sl2_plus_h3(), upper_triangular_gl2(), abelian(3)):
        assert validate_lie(L).passed


def test_jacobi_violation_is_located():
    L = LieAlgebra.from_brackets(3, [(0, 1, 1, 1), (0, 2, 2, 1), (1, 2, 0, 1)], ["x", "y", "z"])
    rep = validate_lie(L)
    assert rep.failed_names() == ["jacobi"]
    assert "(x, y, z)" in rep.first_failure.message


def test_antisymmetry_violation():
    L = LieAlgebra(2, None, {(0, 1): {1: 1}})
    assert validate_lie(L).failed_names() == ["antisymmetry"]


def test_solvability_series():
    h = solvability_report(heisenberg())
    assert h.is_nilpotent and h.nilpotency_class == 2 and h.derived_dims == [3, 1, 0]
    b = solvability_report(upper_triangular_gl2())
    assert b.is_solvable and not b.is_nilpotent
    assert not solvability_report(sl2()).is_solvable


def test_quotient_of_heisenberg_by_center_is_abelian():
    H = heisenberg()
    Q = quotient(H, center(H))
    assert Q.algebra.dim == 2 and not Q.algebra.structure


def test_levi_candidates():
    L = sl2_plus_h3()
    assert verify_levi(L, L.coordinate_span([0, 1, 2])).passed
    assert verify_levi(L, L.coordinate_span([1, 2, 3])).failed_names() == ["subalgebra"]
    assert verify_levi(L, L.coordinate_span([0, 1, 3])).failed_names() == ["semisimple"]
    assert verify_levi(L, L.coordinate_span([0])).failed_names() == ["semisimple"]


@given(invertible(3))
def test_sl2_invariants_under_basis_change(P):
    L = sl2()
    M = transport(L, P)
    assert validate_lie(M).passed
    assert radical(M).dim == 0
    K, K2 = killing_form(L).gram, killing_form(M).gram
    assert P.T @ K @ P == K2


@given(invertible(3))
def test_radical_dimension_of_sum(P):
    L = direct_sum(sl2(), transport(heisenberg(), P))
    assert radical(L) == L.coordinate_span([3, 4, 5])
    assert center(L).dim == 1
