"""Effective Bezout domains: integers, rationals, univariate rational polynomials.

A ring object bundles the division-sensitive operations (extended gcd,
exact division, canonical associates, pivot reduction) while the element
payloads stay plain Python values: ``int`` for the integers, ``Fraction``
for the rationals, and ``Poly`` for polynomials in one variable over the
rationals.  Ordinary arithmetic on payloads uses Python operators; only
operations whose meaning depends on the ring go through the ring object.

xgcd contract, identical across rings.  ``xgcd(a, b)`` returns
``(g, s, t, u, v)`` with

    s*a + t*b == g,   a == g*u,   b == g*v,

``g`` the canonical associate of gcd(a, b), and, for (a, b) != (0, 0),

    det [[s, t], [-v, u]] == s*u + t*v == 1,

so [[s, t], [-v, u]] is the unimodular 2x2 transform sending the column
(a, b) to (g, 0).  xgcd(0, 0) returns all zeros and gcd(0, 0) == 0.
The Bezout coefficient s is size-reduced: balanced modulo b/g over the
integers, degree-reduced modulo b/g for polynomials.

Canonical associates: non-negative integers, monic polynomials, and
{0, 1} for the rational field.  ``canonicalize(a) == (unit, assoc)``
with ``a == unit * assoc``.

Pivot size, used for pivot selection in elimination: absolute value for
integers, degree for polynomials, a constant for the field.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DivisionByZero, FormatError, NotDivisible


class Poly:
    """Univariate polynomial over the rationals.

    Immutable.  ``coeffs`` is an ascending tuple of Fractions with a
    nonzero last entry; the zero polynomial has an empty tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @staticmethod
    def constant(c) -> "Poly":
        return Poly((Fraction(c),))

    @staticmethod
    def x() -> "Poly":
        return Poly((Fraction(0), Fraction(1)))

    @property
    def degree(self) -> int:
        # Degree of the zero polynomial is -1 by convention.
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly((Fraction(other),))
        return None

    def __eq__(self, other):
        other = Poly._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("Poly", self.coeffs))

    def __add__(self, other):
        other = Poly._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = Poly._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = Poly._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = Poly._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def divmod(self, other: "Poly"):
        """Polynomial division with remainder; coefficients are rational."""
        other = Poly._coerce(other)
        if other is None or other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        db, lb = other.degree, other.lead
        q = [Fraction(0)] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c:
                f = c / lb
                q[i - db] = f
                for j, cb in enumerate(other.coeffs):
                    rem[i - db + j] -= f * cb
        return Poly(q), Poly(rem)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("x" if c == 1 else f"{c}*x")
            else:
                parts.append(f"x^{i}" if c == 1 else f"{c}*x^{i}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"


def _parse_rational(obj) -> Fraction:
    if isinstance(obj, bool):
        raise FormatError(f"not a rational: {obj!r}")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, Fraction):
        return obj
    if isinstance(obj, str):
        try:
            return Fraction(obj.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"bad rational syntax: {obj!r}") from exc
    raise FormatError(f"not a rational: {obj!r}")


def _format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class IntegerRing:
    """The rational integers as an effective Bezout domain."""

    name = "int"
    zero = 0
    one = 1

    def coerce(self, x):
        if isinstance(x, bool) or not isinstance(x, int):
            raise FormatError(f"not an integer element: {x!r}")
        return x

    def is_zero(self, a) -> bool:
        return a == 0

    def is_unit(self, a) -> bool:
        return a == 1 or a == -1

    def canonicalize(self, a):
        # unit * assoc == a, assoc >= 0
        if a < 0:
            return -1, -a
        return 1, a

    def unit_inverse(self, u):
        return u  # +-1 are self-inverse

    def size(self, a) -> int:
        return abs(a)

    def exact_div(self, a, b):
        if b == 0:
            raise DivisionByZero("integer division by zero")
        q, r = divmod(a, b)
        if r != 0:
            raise NotDivisible(f"{b} does not divide {a} in the integers")
        return q

    def divides(self, b, a) -> bool:
        if b == 0:
            return a == 0
        return a % b == 0

    def pivot_reduce(self, a, p):
        """(q, r) with a == q*p + r and 0 <= r < p (p a canonical pivot, p > 0)."""
        q, r = divmod(a, p)
        return q, r

    def xgcd(self, a, b):
        if a == 0 and b == 0:
            return 0, 0, 0, 0, 0
        old_r, r = a, b
        old_s, s = 1, 0
        old_t, t = 0, 1
        while r != 0:
            q = old_r // r
            old_r, r = r, old_r - q * r
            old_s, s = s, old_s - q * s
            old_t, t = t, old_t - q * t
        g, bs, bt = old_r, old_s, old_t
        if g < 0:
            g, bs, bt = -g, -bs, -bt
        # Size-reduce s modulo b/g (balanced residue), then recompute t.
        if b != 0:
            m = abs(b // g)
            if m > 1:
                bs %= m
                if bs > m // 2:
                    bs -= m
                bt = (g - bs * a) // b
            elif m == 1:
                bs = 0
                bt = g // b
        u = a // g
        v = b // g
        return g, bs, bt, u, v

    def gcd(self, a, b):
        return self.xgcd(a, b)[0]

    def parse_entry(self, obj):
        if isinstance(obj, bool):
            raise FormatError(f"bad integer entry: {obj!r}")
        if isinstance(obj, int):
            return obj
        if isinstance(obj, str):
            s = obj.strip()
            try:
                return int(s, 10)
            except ValueError as exc:
                raise FormatError(f"bad integer syntax: {obj!r}") from exc
        raise FormatError(f"bad integer entry: {obj!r}")

    def format_entry(self, a):
        return str(a)

    def pretty(self, a) -> str:
        return str(a)


class RationalField:
    """The rationals.  A field is a (degenerate) Bezout domain."""

    name = "rat"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        if isinstance(x, bool):
            raise FormatError(f"not a rational element: {x!r}")
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, Fraction):
            return x
        raise FormatError(f"not a rational element: {x!r}")

    def is_zero(self, a) -> bool:
        return a == 0

    def is_unit(self, a) -> bool:
        return a != 0

    def canonicalize(self, a):
        if a == 0:
            return Fraction(1), Fraction(0)
        return a, Fraction(1)

    def unit_inverse(self, u):
        if u == 0:
            raise DivisionByZero("zero is not a unit")
        return 1 / u

    def size(self, a) -> int:
        return 0  # every nonzero element is an equally good pivot

    def exact_div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by zero")
        return a / b

    def divides(self, b, a) -> bool:
        return not (b == 0 and a != 0)

    def pivot_reduce(self, a, p):
        return a / p, Fraction(0)

    def xgcd(self, a, b):
        zero, one = Fraction(0), Fraction(1)
        if a == 0 and b == 0:
            return zero, zero, zero, zero, zero
        if a != 0:
            return one, 1 / a, zero, a, b
        return one, zero, 1 / b, zero, b

    def gcd(self, a, b):
        return self.xgcd(a, b)[0]

    def parse_entry(self, obj):
        return _parse_rational(obj)

    def format_entry(self, a):
        return _format_rational(a)

    def pretty(self, a) -> str:
        return _format_rational(a)


class PolynomialRing:
    """Univariate polynomials over the rationals (a Euclidean domain)."""

    name = "polyrat"
    zero = Poly()
    one = Poly((Fraction(1),))

    def coerce(self, x):
        if isinstance(x, Poly):
            return x
        if isinstance(x, bool):
            raise FormatError(f"not a polynomial element: {x!r}")
        if isinstance(x, (int, Fraction)):
            return Poly((Fraction(x),))
        raise FormatError(f"not a polynomial element: {x!r}")

    def is_zero(self, a) -> bool:
        return a.is_zero()

    def is_unit(self, a) -> bool:
        return a.degree == 0

    def canonicalize(self, a):
        # unit * assoc == a with assoc monic (or zero).
        if a.is_zero():
            return self.one, a
        lc = a.lead
        if lc == 1:
            return self.one, a
        return Poly.constant(lc), Poly(tuple(c / lc for c in a.coeffs))

    def unit_inverse(self, u):
        if u.degree != 0:
            raise DivisionByZero(f"not a unit: {u}")
        return Poly.constant(1 / u.coeffs[0])

    def size(self, a) -> int:
        return a.degree

    def exact_div(self, a, b):
        if b.is_zero():
            raise DivisionByZero("polynomial division by zero")
        q, r = a.divmod(b)
        if not r.is_zero():
            raise NotDivisible(f"({b}) does not divide ({a})")
        return q

    def divides(self, b, a) -> bool:
        if b.is_zero():
            return a.is_zero()
        return a.divmod(b)[1].is_zero()

    def pivot_reduce(self, a, p):
        """(q, r) with a == q*p + r and deg r < deg p (p monic)."""
        return a.divmod(p)

    def xgcd(self, a, b):
        zero = Poly()
        if a.is_zero() and b.is_zero():
            return zero, zero, zero, zero, zero
        old_r, r = a, b
        old_s, s = self.one, zero
        old_t, t = zero, self.one
        while not r.is_zero():
            q, rem = old_r.divmod(r)
            old_r, r = r, rem
            old_s, s = s, old_s - q * s
            old_t, t = t, old_t - q * t
        g, bs, bt = old_r, old_s, old_t
        unit, g = self.canonicalize(g)
        ui = self.unit_inverse(unit)
        bs, bt = ui * bs, ui * bt
        if not b.is_zero():
            m = self.exact_div(b, g)
            if m.degree > 0:
                _, bs = bs.divmod(m)
                bt = self.exact_div(g - bs * a, b)
            else:
                bs = zero
                bt = self.exact_div(g, b)
        u = self.exact_div(a, g)
        v = self.exact_div(b, g)
        return g, bs, bt, u, v

    def gcd(self, a, b):
        return self.xgcd(a, b)[0]

    def parse_entry(self, obj):
        if not isinstance(obj, (list, tuple)):
            raise FormatError(
                f"polynomial entries are coefficient arrays, got {obj!r}"
            )
        return Poly(tuple(_parse_rational(c) for c in obj))

    def format_entry(self, a):
        return [_format_rational(c) for c in a.coeffs]

    def pretty(self, a) -> str:
        return str(a)


ZZ = IntegerRing()
QQ = RationalField()
QQX = PolynomialRing()

RINGS = {"int": ZZ, "rat": QQ, "polyrat": QQX}


def get_ring(name: str):
    try:
        return RINGS[name]
    except KeyError:
        raise FormatError(f"unknown ring {name!r}; expected one of {sorted(RINGS)}")
