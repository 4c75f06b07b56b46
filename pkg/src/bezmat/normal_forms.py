"""Canonical column/row Hermite forms, Smith form, rank factorization.

Conventions for the column Hermite form H of A (with A @ T == H, T
unimodular):

  * nonzero columns precede zero columns;
  * pivot rows (topmost nonzero row of each nonzero column) strictly
    increase left to right;
  * each pivot is the canonical associate of its value (positive
    integer / monic polynomial / 1 over a field);
  * in a pivot's row, every entry to its left is reduced: in [0, pivot)
    over the integers, degree below the pivot's for polynomials, zero
    over a field.

With these constraints the form is unique, so two matrices span the
same column module exactly when their forms agree on nonzero columns.
The row form is the transpose story.  The Smith form is returned as
A == U @ S @ V with S diagonal, each diagonal entry canonical and
dividing the next.

All elimination uses the 2x2 unimodular block provided by the ring's
xgcd, so every accumulated transform has unit determinant by
construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalAssertion
from .matrix import Mat, inverse_over_ring


@dataclass(frozen=True)
class HermiteResult:
    H: Mat
    T: Mat
    pivot_rows: tuple


@dataclass(frozen=True)
class RowHermiteResult:
    H: Mat
    T: Mat
    pivot_cols: tuple


@dataclass(frozen=True)
class SmithResult:
    U: Mat
    S: Mat
    V: Mat

    def diagonal(self):
        k = min(self.S.m, self.S.n)
        z = self.S.ring.zero
        out = []
        for i in range(k):
            d = self.S[i, i]
            if d == z:
                break
            out.append(d)
        return tuple(out)

    @property
    def rank(self) -> int:
        return len(self.diagonal())


@dataclass(frozen=True)
class RankFactorization:
    L: Mat
    Rt: Mat
    r: int


def column_hermite(a: Mat) -> HermiteResult:
    ring = a.ring
    m, n = a.m, a.n
    z = ring.zero
    H = [list(row) for row in a.rows]
    T = [[ring.one if i == j else z for j in range(n)] for i in range(n)]

    def col_swap(j0, j1):
        for M in (H, T):
            for row in M:
                row[j0], row[j1] = row[j1], row[j0]

    def col_combine(jk, jj, s, t, u, v):
        # (col_k, col_j) <- (s*ck + t*cj, -v*ck + u*cj): determinant one.
        for M in (H, T):
            for row in M:
                ck, cj = row[jk], row[jj]
                row[jk] = s * ck + t * cj
                row[jj] = u * cj - v * ck

    def col_scale(j, c):
        for M in (H, T):
            for row in M:
                row[j] = c * row[j]

    def col_addmul(jdst, jsrc, c):
        for M in (H, T):
            for row in M:
                row[jdst] = row[jdst] + c * row[jsrc]

    pivot_rows = []
    k = 0
    for i in range(m):
        if k >= n:
            break
        best = None
        piv = None
        for j in range(k, n):
            x = H[i][j]
            if x != z:
                s = ring.size(x)
                if best is None or s < best:
                    best = s
                    piv = j
        if piv is None:
            continue
        if piv != k:
            col_swap(k, piv)
        for j in range(k + 1, n):
            if H[i][j] != z:
                g, s, t, u, v = ring.xgcd(H[i][k], H[i][j])
                col_combine(k, j, s, t, u, v)
        unit, assoc = ring.canonicalize(H[i][k])
        if unit != ring.one:
            col_scale(k, ring.unit_inverse(unit))
        piv_val = H[i][k]
        for j in range(k):
            if H[i][j] != z:
                q, _ = ring.pivot_reduce(H[i][j], piv_val)
                if q != z:
                    col_addmul(j, k, -q)
        pivot_rows.append(i)
        k += 1

    return HermiteResult(
        H=Mat._raw(ring, m, n, tuple(tuple(r) for r in H)),
        T=Mat._raw(ring, n, n, tuple(tuple(r) for r in T)),
        pivot_rows=tuple(pivot_rows),
    )


def row_hermite(a: Mat) -> RowHermiteResult:
    """Row canonical form: T @ A == H with T unimodular."""
    cr = column_hermite(a.transpose())
    return RowHermiteResult(
        H=cr.H.transpose(), T=cr.T.transpose(), pivot_cols=cr.pivot_rows
    )


def rank(a: Mat) -> int:
    return len(column_hermite(a).pivot_rows)


def smith(a: Mat) -> SmithResult:
    """Smith form A == U @ S @ V with the divisibility chain canonical.

    Internally accumulates forward transforms P, Q with S == P @ A @ Q,
    then inverts the (unimodular) transforms exactly.
    """
    ring = a.ring
    m, n = a.m, a.n
    z = ring.zero
    S = [list(row) for row in a.rows]
    P = [[ring.one if i == j else z for j in range(m)] for i in range(m)]
    Q = [[ring.one if i == j else z for j in range(n)] for i in range(n)]

    def row_swap(i0, i1):
        S[i0], S[i1] = S[i1], S[i0]
        P[i0], P[i1] = P[i1], P[i0]

    def col_swap(j0, j1):
        for row in S:
            row[j0], row[j1] = row[j1], row[j0]
        for row in Q:
            row[j0], row[j1] = row[j1], row[j0]

    def row_combine(ik, ii, s, t, u, v):
        # (row_k, row_i) <- (s*rk + t*ri, -v*rk + u*ri)
        for M in (S, P):
            rk, ri = M[ik], M[ii]
            for j in range(len(rk)):
                x, y = rk[j], ri[j]
                rk[j] = s * x + t * y
                ri[j] = u * y - v * x

    def col_combine(jk, jj, s, t, u, v):
        for M in (S, Q):
            for row in M:
                x, y = row[jk], row[jj]
                row[jk] = s * x + t * y
                row[jj] = u * y - v * x

    def row_addmul(idst, isrc, c):
        for M in (S, P):
            rd, rs = M[idst], M[isrc]
            for j in range(len(rd)):
                rd[j] = rd[j] + c * rs[j]

    def col_addmul(jdst, jsrc, c):
        for M in (S, Q):
            for row in M:
                row[jdst] = row[jdst] + c * row[jsrc]

    def row_scale(i, c):
        for M in (S, P):
            row = M[i]
            for j in range(len(row)):
                row[j] = c * row[j]

    def find_pivot(t):
        best = None
        where = None
        for i in range(t, m):
            for j in range(t, n):
                x = S[i][j]
                if x != z:
                    s = ring.size(x)
                    if best is None or s < best:
                        best = s
                        where = (i, j)
        return where

    t = 0
    limit = min(m, n)
    while t < limit:
        where = find_pivot(t)
        if where is None:
            break
        i0, j0 = where
        if i0 != t:
            row_swap(t, i0)
        if j0 != t:
            col_swap(t, j0)
        # Clearing policy: when the pivot divides the entry, a shear
        # (add a multiple of the pivot row/column) removes it without
        # touching the opposite line, so nothing refills.  Otherwise an
        # xgcd 2x2 transform is used, which replaces the pivot by the
        # gcd — a strictly smaller element — so only finitely many xgcd
        # steps can ever happen at one diagonal position.  Together the
        # two cases make this loop terminate.
        while True:
            for i in range(t + 1, m):
                x = S[i][t]
                if x != z:
                    piv = S[t][t]
                    if ring.divides(piv, x):
                        row_addmul(i, t, -ring.exact_div(x, piv))
                    else:
                        g, s, tt, u, v = ring.xgcd(piv, x)
                        row_combine(t, i, s, tt, u, v)
            col_dirty = False
            for j in range(t + 1, n):
                x = S[t][j]
                if x != z:
                    piv = S[t][t]
                    if ring.divides(piv, x):
                        col_addmul(j, t, -ring.exact_div(x, piv))
                    else:
                        g, s, tt, u, v = ring.xgcd(piv, x)
                        col_combine(t, j, s, tt, u, v)
                        col_dirty = True
            # xgcd column work may have refilled the pivot column
            if not col_dirty or all(S[i][t] == z for i in range(t + 1, m)):
                break
        # pull in any entry the pivot does not divide, then re-clear
        repaired = False
        piv = S[t][t]
        for i in range(t + 1, m):
            if repaired:
                break
            for j in range(t + 1, n):
                if S[i][j] != z and not ring.divides(piv, S[i][j]):
                    row_addmul(t, i, ring.one)
                    repaired = True
                    break
        if repaired:
            continue  # redo clearing at the same t
        unit, _ = ring.canonicalize(piv)
        if unit != ring.one:
            row_scale(t, ring.unit_inverse(unit))
        t += 1

    S_mat = Mat._raw(ring, m, n, tuple(tuple(r) for r in S))
    P_mat = Mat._raw(ring, m, m, tuple(tuple(r) for r in P))
    Q_mat = Mat._raw(ring, n, n, tuple(tuple(r) for r in Q))
    U = inverse_over_ring(P_mat)
    V = inverse_over_ring(Q_mat)
    result = SmithResult(U=U, S=S_mat, V=V)
    if U @ S_mat @ V != a:
        raise InternalAssertion("Smith transform reconstruction failed")
    d = result.diagonal()
    for i in range(len(d) - 1):
        if not ring.divides(d[i], d[i + 1]):
            raise InternalAssertion("Smith diagonal violates the divisibility chain")
    return result


def rank_factorization(a: Mat) -> RankFactorization:
    """A == L @ Rt with L of full column rank r and Rt of full row rank r."""
    sr = smith(a)
    d = sr.diagonal()
    r = len(d)
    L = sr.U.submatrix(0, a.m, 0, r) @ Mat.diagonal(a.ring, d)
    Rt = sr.V.submatrix(0, r, 0, a.n)
    if L @ Rt != a:
        raise InternalAssertion("rank factorization reconstruction failed")
    return RankFactorization(L=L, Rt=Rt, r=r)


def _nonzero_columns(a: Mat):
    z = a.ring.zero
    cols = []
    for j in range(a.n):
        c = a.col(j)
        if any(x != z for x in c):
            cols.append(c)
    return cols


def column_module_basis(a: Mat):
    """Nonzero columns of the column Hermite form: a canonical basis."""
    return _nonzero_columns(column_hermite(a).H)


def col_module_equal(a: Mat, b: Mat) -> bool:
    """Exact equality of column modules, via canonical forms."""
    a._same_ring(b)
    if a.m != b.m:
        return False
    return column_module_basis(a) == column_module_basis(b)


def col_module_contains(a: Mat, b: Mat) -> bool:
    """Does the column module of a contain every column of b?"""
    from .errors import NoSolution
    from .matrix import solve_in_column_module

    try:
        solve_in_column_module(a, b)
        return True
    except NoSolution:
        return False


def row_module_equal(a: Mat, b: Mat) -> bool:
    return col_module_equal(a.transpose(), b.transpose())


def right_kernel_basis(a: Mat) -> Mat:
    """Columns generate {x : a @ x == 0}; may have zero columns (n x d)."""
    hr = column_hermite(a)
    z = a.ring.zero
    kcols = []
    for j in range(a.n):
        if any(hr.H[i, j] != z for i in range(a.m)):
            continue
        kcols.append(hr.T.col(j))
    return Mat.from_columns(a.ring, kcols, nrows=a.n)


def left_kernel_basis(a: Mat) -> Mat:
    """Rows generate {y : y @ a == 0} (d x m)."""
    return right_kernel_basis(a.transpose()).transpose()
