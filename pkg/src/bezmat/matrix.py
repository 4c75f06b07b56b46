"""Dense exact matrices over a ring object.

``Mat`` is immutable: every operation returns a new matrix, so values can
be shared freely (the concurrency story is "pure functions on immutable
values").  Entries are ring payloads (int / Fraction / Poly) and all
arithmetic is exact; zero-sized matrices (0 x n, n x 0, 0 x 0) are first
class citizens because rank-0 factorizations produce them.

Determinants use the Bareiss fraction-free scheme (exact division only).
Ring inversion routes through the adjugate for small sizes and through
the column Hermite transform for larger ones; the two paths are
cross-checked in the test suite and the result is always re-verified by
multiplication before being returned.
"""

from __future__ import annotations

from .errors import (
    DimensionMismatch,
    InternalAssertion,
    NoSolution,
    NotInvertibleOverRing,
    NotSquare,
    RingMismatch,
)

_ADJUGATE_MAX = 3  # inversion strategy switch-over size


class Mat:
    __slots__ = ("ring", "m", "n", "rows")

    def __init__(self, ring, rows):
        coerced = []
        width = None
        for row in rows:
            r = tuple(ring.coerce(x) for x in row)
            if width is None:
                width = len(r)
            elif len(r) != width:
                raise DimensionMismatch("ragged rows in matrix constructor")
            coerced.append(r)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "m", len(coerced))
        object.__setattr__(self, "n", width if width is not None else 0)
        object.__setattr__(self, "rows", tuple(coerced))

    def __setattr__(self, name, value):
        raise AttributeError("Mat is immutable")

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def from_rows(ring, rows, ncols=None):
        """Build a matrix, forcing the column count for zero-row shapes."""
        m = Mat(ring, rows)
        if m.m == 0 and ncols is not None:
            return Mat._raw(ring, 0, ncols, ())
        return m

    @staticmethod
    def _raw(ring, m, n, rows):
        obj = object.__new__(Mat)
        object.__setattr__(obj, "ring", ring)
        object.__setattr__(obj, "m", m)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "rows", rows)
        return obj

    @staticmethod
    def zeros(ring, m, n):
        z = ring.zero
        return Mat._raw(ring, m, n, tuple((z,) * n for _ in range(m)))

    @staticmethod
    def identity(ring, n):
        z, o = ring.zero, ring.one
        return Mat._raw(
            ring, n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n))
        )

    @staticmethod
    def diagonal(ring, entries, m=None, n=None):
        entries = [ring.coerce(e) for e in entries]
        k = len(entries)
        m = k if m is None else m
        n = k if n is None else n
        z = ring.zero
        return Mat._raw(
            ring,
            m,
            n,
            tuple(
                tuple(entries[i] if (i == j and i < k) else z for j in range(n))
                for i in range(m)
            ),
        )

    @staticmethod
    def from_columns(ring, cols, nrows=None):
        if not cols:
            if nrows is None:
                raise DimensionMismatch("from_columns with no columns needs nrows")
            return Mat._raw(ring, nrows, 0, tuple(() for _ in range(nrows)))
        m = len(cols[0])
        if m == 0:
            return Mat._raw(ring, 0, len(cols), ())
        return Mat(ring, [[cols[j][i] for j in range(len(cols))] for i in range(m)])

    # -- shape / access -------------------------------------------------------

    @property
    def shape(self):
        return (self.m, self.n)

    def is_square(self) -> bool:
        return self.m == self.n

    def __getitem__(self, key):
        i, j = key
        return self.rows[i][j]

    def row(self, i):
        return self.rows[i]

    def col(self, j):
        return tuple(self.rows[i][j] for i in range(self.m))

    def tolist(self):
        return [list(r) for r in self.rows]

    def is_zero(self) -> bool:
        z = self.ring.zero
        return all(x == z for row in self.rows for x in row)

    def transpose(self) -> "Mat":
        return Mat._raw(
            self.ring,
            self.n,
            self.m,
            tuple(tuple(self.rows[i][j] for i in range(self.m)) for j in range(self.n)),
        )

    def submatrix(self, r0, r1, c0, c1) -> "Mat":
        return Mat._raw(
            self.ring,
            r1 - r0,
            c1 - c0,
            tuple(row[c0:c1] for row in self.rows[r0:r1]),
        )

    # -- ring plumbing --------------------------------------------------------

    def _same_ring(self, other):
        if self.ring.name != other.ring.name:
            raise RingMismatch(
                f"mixed rings: {self.ring.name} vs {other.ring.name}"
            )

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return (
            self.ring.name == other.ring.name
            and self.m == other.m
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ring.name, self.m, self.n, self.rows))

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        self._same_ring(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"add: {self.shape} vs {other.shape}")
        return Mat._raw(
            self.ring,
            self.m,
            self.n,
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            ),
        )

    def __sub__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        self._same_ring(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"sub: {self.shape} vs {other.shape}")
        return Mat._raw(
            self.ring,
            self.m,
            self.n,
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            ),
        )

    def __neg__(self):
        return Mat._raw(
            self.ring, self.m, self.n, tuple(tuple(-a for a in r) for r in self.rows)
        )

    def scale(self, c) -> "Mat":
        c = self.ring.coerce(c)
        return Mat._raw(
            self.ring, self.m, self.n, tuple(tuple(c * a for a in r) for r in self.rows)
        )

    def __mul__(self, other):
        if isinstance(other, Mat):
            raise TypeError("use @ for matrix multiplication")
        return self.scale(other)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        self._same_ring(other)
        if self.n != other.m:
            raise DimensionMismatch(f"matmul: {self.shape} @ {other.shape}")
        z = self.ring.zero
        bt = other.transpose().rows
        out = []
        for ra in self.rows:
            out_row = []
            for cb in bt:
                acc = z
                for a, b in zip(ra, cb):
                    if a != z and b != z:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(tuple(out_row))
        return Mat._raw(self.ring, self.m, other.n, tuple(out))

    def __pow__(self, k: int) -> "Mat":
        if not self.is_square():
            raise NotSquare("matrix power needs a square matrix")
        if k < 0:
            raise ValueError("negative matrix powers are not defined here")
        result = Mat.identity(self.ring, self.n)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base if k > 1 else base
            k >>= 1
        return result

    def __repr__(self):
        body = "; ".join(
            " ".join(self.ring.pretty(x) for x in row) for row in self.rows
        )
        return f"Mat<{self.ring.name} {self.m}x{self.n}: {body}>"


# -- block assembly -----------------------------------------------------------


def hstack(a: Mat, b: Mat) -> Mat:
    a._same_ring(b)
    if a.m != b.m:
        raise DimensionMismatch("hstack: row counts differ")
    return Mat._raw(
        a.ring, a.m, a.n + b.n, tuple(ra + rb for ra, rb in zip(a.rows, b.rows))
    )


def vstack(a: Mat, b: Mat) -> Mat:
    a._same_ring(b)
    if a.n != b.n:
        raise DimensionMismatch("vstack: column counts differ")
    return Mat._raw(a.ring, a.m + b.m, a.n, a.rows + b.rows)


def block_diag(a: Mat, b: Mat) -> Mat:
    a._same_ring(b)
    top = hstack(a, Mat.zeros(a.ring, a.m, b.n))
    bot = hstack(Mat.zeros(a.ring, b.m, a.n), b)
    return vstack(top, bot)


def split_blocks(a: Mat, r: int):
    """Split a square matrix into (A11, A12, A21, A22) at position r."""
    return (
        a.submatrix(0, r, 0, r),
        a.submatrix(0, r, r, a.n),
        a.submatrix(r, a.m, 0, r),
        a.submatrix(r, a.m, r, a.n),
    )


# -- determinant and inversion ------------------------------------------------


def det(a: Mat):
    """Exact determinant by the Bareiss fraction-free elimination."""
    if not a.is_square():
        raise NotSquare(f"determinant of a {a.m}x{a.n} matrix")
    ring = a.ring
    n = a.n
    if n == 0:
        return ring.one
    work = [list(row) for row in a.rows]
    z = ring.zero
    sign_flip = False
    prev = ring.one
    for k in range(n - 1):
        piv = None
        best = None
        for i in range(k, n):
            x = work[i][k]
            if x != z:
                s = ring.size(x)
                if best is None or s < best:
                    best = s
                    piv = i
        if piv is None:
            return ring.zero
        if piv != k:
            work[k], work[piv] = work[piv], work[k]
            sign_flip = not sign_flip
        pkk = work[k][k]
        for i in range(k + 1, n):
            wik = work[i][k]
            for j in range(k + 1, n):
                num = pkk * work[i][j] - wik * work[k][j]
                work[i][j] = ring.exact_div(num, prev)
            work[i][k] = z
        prev = pkk
    d = work[n - 1][n - 1]
    return -d if sign_flip else d


def _det_cofactor(a: Mat):
    """Cofactor-expansion determinant; quadratic-size oracle for tests."""
    ring = a.ring
    n = a.n
    if n == 0:
        return ring.one
    if n == 1:
        return a[0, 0]
    total = ring.zero
    rest = [row[1:] for row in a.rows]
    for i in range(n):
        if a[i, 0] == ring.zero:
            continue
        minor = Mat(ring, [rest[r] for r in range(n) if r != i])
        term = a[i, 0] * _det_cofactor(minor)
        total = total + (term if i % 2 == 0 else -term)
    return total


def _adjugate(a: Mat) -> Mat:
    ring = a.ring
    n = a.n
    if n == 0:
        return a
    if n == 1:
        return Mat.identity(ring, 1)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            rows = [
                tuple(a.rows[r][c] for c in range(n) if c != i)
                for r in range(n)
                if r != j
            ]
            cof = det(Mat._raw(ring, n - 1, n - 1, tuple(rows)))
            row.append(cof if (i + j) % 2 == 0 else -cof)
        out.append(tuple(row))
    return Mat._raw(ring, n, n, tuple(out))


def inverse_over_ring(a: Mat, _det=None) -> Mat:
    """Two-sided inverse with entries in the ring.

    Exists exactly when det(a) is a unit; otherwise raises
    NotInvertibleOverRing carrying the determinant.  Small matrices go
    through the adjugate, larger ones through the Hermite transform
    (column Hermite of a unimodular matrix is the identity, and the
    accumulated column transform is the inverse).  The product is
    re-verified before returning.
    """
    if not a.is_square():
        raise NotSquare(f"inverse of a {a.m}x{a.n} matrix")
    ring = a.ring
    d = det(a) if _det is None else _det
    if not ring.is_unit(d):
        raise NotInvertibleOverRing(
            f"determinant {ring.pretty(d)} is not a unit of {ring.name}", det=d
        )
    n = a.n
    if n == 0:
        return a
    if n <= _ADJUGATE_MAX:
        di = ring.unit_inverse(d)
        inv = _adjugate(a).scale(di)
    else:
        from . import normal_forms  # local import; normal_forms imports this module

        hr = normal_forms.column_hermite(a)
        if hr.H != Mat.identity(ring, n):
            raise InternalAssertion(
                "unit determinant but Hermite form is not the identity"
            )
        inv = hr.T
    ident = Mat.identity(ring, n)
    if a @ inv != ident or inv @ a != ident:
        raise InternalAssertion("inverse candidate failed verification")
    return inv


def _inverse_adjugate(a: Mat) -> Mat:
    """Adjugate-route inverse regardless of size (cross-check path)."""
    ring = a.ring
    d = det(a)
    if not ring.is_unit(d):
        raise NotInvertibleOverRing(
            f"determinant {ring.pretty(d)} is not a unit of {ring.name}", det=d
        )
    if a.n == 0:
        return a
    return _adjugate(a).scale(ring.unit_inverse(d))


def _inverse_hermite(a: Mat) -> Mat:
    """Hermite-route inverse regardless of size (cross-check path)."""
    from . import normal_forms

    ring = a.ring
    d = det(a)
    if not ring.is_unit(d):
        raise NotInvertibleOverRing(
            f"determinant {ring.pretty(d)} is not a unit of {ring.name}", det=d
        )
    if a.n == 0:
        return a
    hr = normal_forms.column_hermite(a)
    if hr.H != Mat.identity(ring, a.n):
        raise InternalAssertion("unit determinant but Hermite form is not the identity")
    return hr.T


def solve_in_column_module(a: Mat, b: Mat) -> Mat:
    """Solve a @ X == b over the ring, or raise NoSolution.

    Works column by column through the column Hermite form: pivots are
    consumed top-down, each forcing one exact division.  A failed
    division or a nonzero residue means b is outside the column module
    of a (over the ring; the fraction-field system may still be
    solvable with non-ring entries).
    """
    from . import normal_forms

    a._same_ring(b)
    if a.m != b.m:
        raise DimensionMismatch(f"solve: {a.shape} vs {b.shape}")
    ring = a.ring
    hr = normal_forms.column_hermite(a)
    hcols = [hr.H.col(j) for j in range(hr.H.n)]
    z = ring.zero
    ys = []
    for bc in range(b.n):
        c = list(b.col(bc))
        y = [z] * a.n
        for idx, pr in enumerate(hr.pivot_rows):
            val = c[pr]
            if val == z:
                continue
            piv = hcols[idx][pr]
            q, rem = ring.pivot_reduce(val, piv)
            if rem != z:
                raise NoSolution(
                    f"column {bc} of the right-hand side is outside the column module"
                )
            if q != z:
                for i in range(pr, a.m):
                    c[i] = c[i] - q * hcols[idx][i]
                y[idx] = q
        if any(x != z for x in c):
            raise NoSolution(
                f"column {bc} of the right-hand side is outside the column module"
            )
        ys.append(y)
    x = hr.T @ Mat._raw(
        a.ring, a.n, b.n, tuple(tuple(ys[j][i] for j in range(b.n)) for i in range(a.n))
    )
    if a @ x != b:
        raise InternalAssertion("solver produced a non-solution")
    return x
