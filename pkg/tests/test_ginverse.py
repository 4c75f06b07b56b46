"""Group and Drazin inverses over exact rings.

Expected inverses were computed independently (by hand or with an
external computer-algebra system) and frozen here; the suite then
re-checks the defining equations on every value the library returns.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bezmat.errors import (
    NotDrazinInvertible,
    NotGroupInvertible,
    NotIdempotent,
    NotSquare,
)
from bezmat.field_oracle import fraction_field_oracle
from bezmat.ginverse import (
    core_split,
    drazin,
    group_inverse,
    idempotent_split,
    is_group_invertible,
)
from bezmat.matrix import Mat, block_diag, inverse_over_ring
from bezmat.rings import QQ, QQX, ZZ, Poly


def mat(rows):
    return Mat.from_rows(ZZ, rows)


def qmat(rows):
    return Mat.from_rows(QQ, [[Fraction(e) for e in row] for row in rows])


def check_group_equations(x, g):
    assert x @ g == g @ x
    assert g @ x @ g == g
    assert x @ g @ x == x


def check_drazin_equations(x, res):
    d, k = res.dinv, res.index
    assert x @ d == d @ x
    assert d @ x @ d == d
    assert x ** (k + 1) @ d == x ** k
    if k > 0:
        # minimality: the index-(k-1) equation must fail
        assert x ** k @ d != x ** (k - 1)


# ---------------------------------------------------------------------------
# group inverse: frozen integer cases
# ---------------------------------------------------------------------------


def test_group_inverse_frozen_3x3():
    # computed independently with a computer-algebra system
    x = mat([[3, -1, 1], [1, 0, 0], [0, 0, 0]])
    expected = mat([[0, 1, -1], [-1, 3, -3], [0, 0, 0]])
    g = group_inverse(x).ginv
    assert g == expected
    check_group_equations(x, g)


def test_group_inverse_sign_case():
    # X @ X == -X, so X itself satisfies all three group equations
    x = mat([[0, 1], [0, -1]])
    g = group_inverse(x).ginv
    assert g == x
    check_group_equations(x, g)


def test_group_inverse_of_idempotent_is_itself():
    p = mat([[1, 1], [0, 0]])
    assert p @ p == p
    assert group_inverse(p).ginv == p


def test_group_inverse_zero_and_identity():
    z = Mat.zeros(ZZ, 3, 3)
    assert group_inverse(z).ginv == z
    i = Mat.identity(ZZ, 3)
    assert group_inverse(i).ginv == i
    e = Mat.zeros(ZZ, 0, 0)
    assert group_inverse(e).ginv == e


def test_group_inverse_ring_sensitivity():
    # X @ X == 4 X: the group inverse X / 16 exists over the rationals
    # but not over the integers.
    xz = mat([[2, 2], [2, 2]])
    with pytest.raises(NotGroupInvertible) as exc_info:
        group_inverse(xz)
    assert exc_info.value.module_ok is False
    assert exc_info.value.factor_ok is False
    assert not is_group_invertible(xz)

    xq = qmat([[2, 2], [2, 2]])
    g = group_inverse(xq).ginv
    eighth = Fraction(1, 8)
    assert g == qmat([[eighth, eighth], [eighth, eighth]])
    check_group_equations(xq, g)


def test_group_inverse_scaled_projector_rejected_over_int():
    x = mat([[2, 0], [0, 0]])
    assert not is_group_invertible(x)
    xq = qmat([[2, 0], [0, 0]])
    assert group_inverse(xq).ginv == qmat([[Fraction(1, 2), 0], [0, 0]])


def test_group_inverse_poly_cases():
    x = Poly.x()
    bad = Mat.from_rows(QQX, [[x, 0], [0, 0]])
    assert not is_group_invertible(bad)
    with pytest.raises(NotGroupInvertible):
        group_inverse(bad)
    proj = Mat.from_rows(QQX, [[1, 0], [0, 0]])
    assert group_inverse(proj).ginv == proj


def test_group_inverse_requires_square():
    with pytest.raises(NotSquare):
        group_inverse(Mat.zeros(ZZ, 2, 3))
    with pytest.raises(NotSquare):
        is_group_invertible(Mat.zeros(ZZ, 2, 3))


def test_nilpotent_is_not_group_invertible():
    assert not is_group_invertible(mat([[0, 1], [0, 0]]))


# ---------------------------------------------------------------------------
# Drazin inverse: frozen cases and branch coverage
# ---------------------------------------------------------------------------


def test_drazin_frozen_index_two():
    # computed independently with a computer-algebra system
    y = mat([[1, -1, 2], [0, 0, 1], [0, 0, 0]])
    res = drazin(y)
    assert res.index == 2
    assert res.dinv == mat([[1, -1, 1], [0, 0, 0], [0, 0, 0]])
    check_drazin_equations(y, res)


def test_drazin_unit_determinant_is_plain_inverse():
    x = mat([[1, 1], [0, 1]])
    res = drazin(x)
    assert res.index == 0
    assert res.dinv == mat([[1, -1], [0, 1]])
    assert res.dinv == inverse_over_ring(x)


def test_drazin_nonunit_determinant_rejected_over_int():
    x = mat([[2, 0], [0, 1]])
    with pytest.raises(NotDrazinInvertible):
        drazin(x)
    # the same matrix is invertible over the rationals
    res = drazin(qmat([[2, 0], [0, 1]]))
    assert res.index == 0
    assert res.dinv == qmat([[Fraction(1, 2), 0], [0, 1]])


def test_drazin_nilpotent_chains():
    x = mat([[0, 1], [0, 0]])
    res = drazin(x)
    assert res.index == 2
    assert res.dinv == Mat.zeros(ZZ, 2, 2)
    # maximal chain: the rank scan must run to n + 1 before stabilizing
    s = mat([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    res3 = drazin(s)
    assert res3.index == 3
    assert res3.dinv == Mat.zeros(ZZ, 3, 3)
    check_drazin_equations(s, res3)


def test_drazin_zero_and_empty():
    z = Mat.zeros(ZZ, 2, 2)
    res = drazin(z)
    assert res.index == 1
    assert res.dinv == z
    e = Mat.zeros(ZZ, 0, 0)
    res0 = drazin(e)
    assert res0.index == 0
    assert res0.dinv == e


def test_drazin_group_invertible_case_has_index_one():
    x = mat([[3, -1, 1], [1, 0, 0], [0, 0, 0]])
    res = drazin(x)
    assert res.index == 1
    assert res.dinv == group_inverse(x).ginv


def test_drazin_singular_but_not_drazin_invertible_over_int():
    # rank stabilizes immediately at k = 1, but X itself is not group
    # invertible over the integers
    x = mat([[2, 0], [0, 0]])
    with pytest.raises(NotDrazinInvertible):
        drazin(x)
    res = drazin(qmat([[2, 0], [0, 0]]))
    assert res.index == 1
    assert res.dinv == qmat([[Fraction(1, 2), 0], [0, 0]])


def test_drazin_poly_cases():
    x = Poly.x()
    nil = Mat.from_rows(QQX, [[0, x], [0, 0]])
    res = drazin(nil)
    assert res.index == 2
    assert res.dinv == Mat.zeros(QQX, 2, 2)
    # determinant x - (x - 1) == 1 is a unit
    u = Mat.from_rows(QQX, [[x, 1], [x - 1, 1]])
    resu = drazin(u)
    assert resu.index == 0
    assert resu.dinv == Mat.from_rows(QQX, [[1, -1], [1 - x, x]])
    # determinant x is neither zero nor a unit
    with pytest.raises(NotDrazinInvertible):
        drazin(Mat.from_rows(QQX, [[x, 0], [0, 1]]))


def test_drazin_requires_square():
    with pytest.raises(NotSquare):
        drazin(Mat.zeros(ZZ, 3, 2))


def test_drazin_mixed_block():
    # invertible block next to a nilpotent block: index comes from the
    # nilpotent part, the inverse from the invertible part
    x = block_diag(mat([[1]]), mat([[0, 1], [0, 0]]))
    res = drazin(x)
    assert res.index == 2
    assert res.dinv == block_diag(mat([[1]]), Mat.zeros(ZZ, 2, 2))
    check_drazin_equations(x, res)


# ---------------------------------------------------------------------------
# idempotent_split and core_split
# ---------------------------------------------------------------------------


def test_idempotent_split_diagonalizes():
    p = mat([[1, 1], [0, 0]])
    h = idempotent_split(p)
    hinv = inverse_over_ring(h)
    assert hinv @ p @ h == mat([[1, 0], [0, 0]])


def test_idempotent_split_extremes():
    n = 3
    z = Mat.zeros(ZZ, n, n)
    hz = idempotent_split(z)
    assert inverse_over_ring(hz) @ z @ hz == z
    i = Mat.identity(ZZ, n)
    hi = idempotent_split(i)
    assert inverse_over_ring(hi) @ i @ hi == i


def test_idempotent_split_rejects_non_idempotent():
    with pytest.raises(NotIdempotent):
        idempotent_split(mat([[1, 1], [0, 1]]))
    with pytest.raises(NotSquare):
        idempotent_split(Mat.zeros(ZZ, 1, 2))


def test_core_split_frozen():
    x = mat([[3, -1, 1], [1, 0, 0], [0, 0, 0]])
    cs = core_split(x)
    assert cs.r == 2
    assert cs.M.is_square() and cs.M.n == 2
    inverse_over_ring(cs.M)  # must not raise
    hinv = inverse_over_ring(cs.H)
    rebuilt = cs.H @ block_diag(cs.M, Mat.zeros(ZZ, 1, 1)) @ hinv
    assert rebuilt == x


def test_core_split_requires_group_invertibility():
    with pytest.raises(NotGroupInvertible):
        core_split(mat([[0, 1], [0, 0]]))


# ---------------------------------------------------------------------------
# agreement with the fraction-field oracle on random integer matrices
# ---------------------------------------------------------------------------

small_int_matrix = st.integers(min_value=2, max_value=3).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(min_value=-5, max_value=5), min_size=n, max_size=n),
        min_size=n,
        max_size=n,
    )
)


@settings(max_examples=60, deadline=None)
@given(rows=small_int_matrix)
def test_ring_results_agree_with_field_oracle(rows):
    x = mat(rows)
    report = fraction_field_oracle(x)
    ring_group = is_group_invertible(x)
    assert ring_group == (report.group_exists and bool(report.group_integral))
    if ring_group:
        assert group_inverse(x).ginv == report.group_ring
    try:
        res = drazin(x)
        ring_drazin = True
    except NotDrazinInvertible:
        ring_drazin = False
    assert ring_drazin == report.drazin_integral
    if ring_drazin:
        assert res.index == report.drazin_index
        assert res.dinv == report.drazin_ring
        check_drazin_equations(x, res)
