"""Exact univariate polynomials over the rationals.

Coefficients are :class:`fractions.Fraction` values stored low-to-high in an
immutable tuple.  The representation is canonical: the last coefficient is
nonzero, and the zero polynomial is the empty tuple.  Its degree is
``-math.inf`` so that degree arithmetic can never be mistaken for a real
degree (``range(-inf)`` raises instead of silently looping zero times).

Besides ring arithmetic this module provides the minimal-degree Bezout
solver, Sylvester resultants (fraction-free Bareiss elimination) and
discriminants.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence

Rational = Fraction

ZERO_DEGREE = -math.inf


class NotCoprime(ValueError):
    """Raised when a Bezout identity p*f + q*g = 1 cannot exist."""


class ZeroPolynomial(ValueError):
    """Raised when an operation needs a nonzero polynomial."""


class ConstantPolynomial(ValueError):
    """Raised when an operation needs a polynomial of positive degree."""


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def _lcm(values: Iterable[int]) -> int:
    return reduce(lambda a, b: a * b // math.gcd(a, b), values, 1)


class Polynomial:
    """Dense polynomial with exact rational coefficients, lowest power first."""

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        c = [as_rational(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._coeffs = tuple(c)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple) -> Polynomial:
        # trusted constructor: coeffs already Fractions and trimmed
        obj = cls.__new__(cls)
        obj._coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c) -> Polynomial:
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c=1) -> Polynomial:
        if degree < 0:
            raise ValueError("monomial degree must be nonnegative")
        return cls([0] * degree + [c])

    @classmethod
    def x(cls) -> Polynomial:
        return cls([0, 1])

    # ---- basic accessors -------------------------------------------------
    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self):
        return len(self._coeffs) - 1 if self._coeffs else ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    @property
    def lc(self) -> Fraction:
        if not self._coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == Polynomial([other])._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._coeffs)
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({self.to_strings()!r})"

    def __str__(self) -> str:
        return render(self)

    # ---- ring arithmetic -------------------------------------------------
    @staticmethod
    def _coerce(other) -> Polynomial | None:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial([other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._coeffs, o._coeffs
        if len(a) < len(b):
            a, b = b, a
        c = list(a)
        for i, v in enumerate(b):
            c[i] += v
        while c and c[-1] == 0:
            c.pop()
        return Polynomial._raw(tuple(c))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw(tuple(-a for a in self._coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Polynomial._raw(_convolve(self._coeffs, o._coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = Polynomial([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return poly_divmod(self, o)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def scale(self, c) -> Polynomial:
        c = as_rational(c)
        if c == 0:
            return Polynomial._raw(())
        return Polynomial._raw(tuple(a * c for a in self._coeffs))

    def shift(self, k: int) -> Polynomial:
        """Multiply by x**k."""
        if not self._coeffs:
            return self
        return Polynomial._raw((Fraction(0),) * k + self._coeffs)

    def __call__(self, x0):
        return poly_eval(self, x0)

    def derivative(self, k: int = 1) -> Polynomial:
        return poly_derivative(self, k)

    def compose_affine(self, a, b) -> Polynomial:
        return poly_affine_sub(self, a, b)

    def monic(self) -> Polynomial:
        return self.scale(1 / self.lc)

    def content(self) -> Fraction:
        """Positive rational c such that self / c is primitive in Z[x]."""
        if not self._coeffs:
            return Fraction(0)
        num = reduce(math.gcd, (a.numerator for a in self._coeffs))
        den = _lcm(a.denominator for a in self._coeffs)
        return Fraction(num, den)

    def reversed(self) -> Polynomial:
        """x**deg * f(1/x).  Factors of x in f do not survive the round trip."""
        return Polynomial(reversed(self._coeffs))

    # ---- serialization ---------------------------------------------------
    def to_strings(self) -> list[str]:
        return [format_rational(a) for a in self._coeffs]

    @classmethod
    def from_strings(cls, items: Sequence[str]) -> Polynomial:
        return cls(Fraction(s) for s in items)


def format_rational(a: Fraction) -> str:
    return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"


def render(f: Polynomial, ascending: bool = False, var: str = "x") -> str:
    """Human-readable form, e.g. ``6*x^2-3*x+1``."""
    if f.is_zero():
        return "0"
    powers = range(len(f.coeffs)) if ascending else range(len(f.coeffs) - 1, -1, -1)
    out = []
    for i in powers:
        c = f.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = format_rational(abs(c))
        if i == 0:
            term = mag
        else:
            mono = var if i == 1 else f"{var}^{i}"
            term = mono if mag == "1" else f"{mag}*{mono}"
        if not out:
            out.append(term if sign == "+" else "-" + term)
        else:
            out.append(sign + term)
    return "".join(out)


def _convolve(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    # clear denominators and convolve over Z; much cheaper than Fraction products
    da = _lcm(c.denominator for c in a)
    db = _lcm(c.denominator for c in b)
    ia = [c.numerator * (da // c.denominator) for c in a]
    ib = [c.numerator * (db // c.denominator) for c in b]
    if len(ia) < len(ib):
        ia, ib = ib, ia
    out = [0] * (len(ia) + len(ib) - 1)
    for j, bj in enumerate(ib):
        if bj:
            for i, ai in enumerate(ia):
                out[i + j] += ai * bj
    den = da * db
    while out and out[-1] == 0:
        out.pop()
    if den == 1:
        return tuple(Fraction(v) for v in out)
    return tuple(Fraction(v, den) for v in out)


# ---- module-level operations ---------------------------------------------

def poly_ring(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown ring operation {op!r}")


def poly_eval(f: Polynomial, x0) -> Fraction:
    x0 = as_rational(x0)
    acc = Fraction(0)
    for c in reversed(f.coeffs):
        acc = acc * x0 + c
    return acc


def poly_derivative(f: Polynomial, k: int = 1) -> Polynomial:
    if k < 0:
        raise ValueError("derivative order must be nonnegative")
    c = f.coeffs
    if k == 0:
        return f
    if k >= len(c):
        return Polynomial._raw(())
    out = []
    for i in range(k, len(c)):
        out.append(c[i] * math.perm(i, k))
    return Polynomial._raw(tuple(out))


def poly_affine_sub(f: Polynomial, a, b) -> Polynomial:
    """f(a*x + b) by Horner's scheme."""
    lin = Polynomial([b, a])
    acc = Polynomial._raw(())
    for c in reversed(f.coeffs):
        acc = acc * lin + Polynomial._raw((c,))
    return acc


def poly_divmod(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial]:
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(f.coeffs)
    dg = len(g.coeffs) - 1
    if len(r) - 1 < dg:
        return Polynomial._raw(()), f
    inv = 1 / g.lc
    gc = g.coeffs
    q = [Fraction(0)] * (len(r) - dg)
    for i in range(len(r) - 1 - dg, -1, -1):
        t = r[i + dg] * inv
        q[i] = t
        if t:
            for j in range(dg + 1):
                r[i + j] -= t * gc[j]
    return Polynomial(q), Polynomial(r[:dg])


def exact_div(f: Polynomial, g: Polynomial) -> Polynomial:
    q, r = poly_divmod(f, g)
    if not r.is_zero():
        raise ArithmeticError(f"{render(g)} does not divide {render(f)}")
    return q


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd (zero if both inputs are zero)."""
    while not g.is_zero():
        f, g = g, poly_divmod(f, g)[1]
    return f.monic() if not f.is_zero() else f


def is_integer_poly(f: Polynomial) -> bool:
    return all(c.denominator == 1 for c in f.coeffs)


class BezoutPair:
    """Witness (p, q) of p*f + q*g = 1."""

    __slots__ = ("p", "q")

    def __init__(self, p: Polynomial, q: Polynomial):
        self.p = p
        self.q = q

    def __iter__(self):
        return iter((self.p, self.q))

    def __eq__(self, other):
        if isinstance(other, BezoutPair):
            return (self.p, self.q) == (other.p, other.q)
        if isinstance(other, tuple):
            return (self.p, self.q) == other
        return NotImplemented

    def __repr__(self):
        return f"BezoutPair(p={self.p!r}, q={self.q!r})"

    def holds_for(self, f: Polynomial, g: Polynomial) -> bool:
        return self.p * f + self.q * g == Polynomial([1])


def bezout_min_degree(f: Polynomial, g: Polynomial) -> BezoutPair:
    """Unique (p, q) with p*f + q*g = 1, deg p < deg g and deg q < deg f.

    Runs the extended Euclidean algorithm, then reduces p modulo g so the
    degree bounds hold regardless of the path Euclid took.
    """
    if f.is_zero() or g.is_zero():
        raise NotCoprime("zero polynomial has no Bezout partner")
    r0, r1 = f, g
    s0, s1 = Polynomial([1]), Polynomial._raw(())
    while not r1.is_zero():
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    if r0.degree > 0:
        raise NotCoprime(f"gcd has positive degree: {render(r0.monic())}")
    s0 = s0.scale(1 / r0.lc)
    if g.degree > 0:
        s0 = poly_divmod(s0, g)[1]
    else:
        s0 = Polynomial._raw(())
    q = exact_div(Polynomial([1]) - s0 * f, g)
    return BezoutPair(s0, q)


def sylvester_matrix(f: Polynomial, g: Polynomial) -> list[list[Fraction]]:
    """Rows of the (deg f + deg g)-square Sylvester matrix, highest power first."""
    m, n = f.degree, g.degree
    size = m + n
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    rows = []
    for i in range(n):
        rows.append([Fraction(0)] * i + fc + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + gc + [Fraction(0)] * (size - n - 1 - i))
    return rows


def bareiss_det(rows: list[list[Fraction]]) -> Fraction:
    """Exact determinant: scale rows to integers, then Bareiss elimination."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    m = []
    for row in rows:
        d = _lcm(c.denominator for c in row)
        scale *= d
        m.append([c.numerator * (d // c.denominator) for c in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = m[k][k]
        rk = m[k]
        for i in range(k + 1, n):
            ri = m[i]
            a = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pivot - a * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return Fraction(sign * m[n - 1][n - 1]) / scale


def sylvester_resultant(f: Polynomial, g: Polynomial) -> Fraction:
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("resultant of the zero polynomial is undefined here")
    return bareiss_det(sylvester_matrix(f, g))


def discriminant(f: Polynomial) -> Fraction:
    """(-1)**(m(m-1)/2) / lc(f) * R(f, f')."""
    if f.is_zero() or f.degree < 1:
        raise ConstantPolynomial("discriminant needs degree >= 1")
    m = f.degree
    if m == 1:
        return Fraction(1)
    sign = -1 if (m * (m - 1) // 2) % 2 else 1
    return sign * sylvester_resultant(f, poly_derivative(f)) / f.lc
