"""Constructors for the polynomial sequences built around P_n x^(n+1) + Q_n (x+1)^(n+1) = 1.

Each family has a primary closed form plus at least one independent route
(a recurrence, a symmetry, or a quotient of other families).  Passing
``check=True`` to a constructor computes both and raises
:class:`FamilyMismatch` when they differ.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, perm

from .polycore import (
    Polynomial,
    bezout_min_degree,
    exact_div,
    poly_affine_sub,
    poly_derivative,
)

ONE = Polynomial([1])
X = Polynomial([0, 1])
HALF = Fraction(1, 2)


class FamilyMismatch(AssertionError):
    """Two computation routes for the same family member disagree."""


class SeedNotBezout(ValueError):
    """The seed (p0, q0, Y, Z) does not satisfy p0*Y + q0*Z = 1."""


def _agree(name: str, first: Polynomial, second: Polynomial) -> Polynomial:
    if first != second:
        raise FamilyMismatch(f"{name}: {first} != {second}")
    return first


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


# ---- P_n, Q_n and derivatives ----------------------------------------------

@lru_cache(maxsize=None)
def _q_poly(n: int) -> Polynomial:
    return Polynomial([(-1) ** i * comb(n + i, i) for i in range(n + 1)])


def q_poly(n: int, check: bool = False) -> Polynomial:
    """Q_n(x) = sum_i (-1)^i C(n+i, i) x^i."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    q = _q_poly(n)
    if check:
        _agree(f"Q_{n}", q, q_poly_recurrence(n))
    return q


def q_poly_recurrence(n: int) -> Polynomial:
    """Q_n from the three-term recurrence with Q_0 = 1, Q_1 = 1 - 2x."""
    prev, cur = ONE, Polynomial([1, -2])
    if n == 0:
        return prev
    for m in range(2, n + 1):
        rhs = (
            -Polynomial([-m, 2 * (2 * m - 1), 2 * (2 * m - 1)]) * cur
            + Polynomial([0, 2 * (2 * m - 1)]) * prev
        )
        prev, cur = cur, exact_div(rhs, Polynomial([m, m]))
    return cur


@lru_cache(maxsize=None)
def _p_poly(n: int) -> Polynomial:
    scale = (-1) ** (n + 1) * (2 * n + 1) * comb(2 * n, n)
    return Polynomial(Fraction(scale * comb(n, i), n + i + 1) for i in range(n + 1))


def p_poly(n: int, check: bool = False) -> Polynomial:
    """P_n(x) = (-1)^(n+1) (2n+1) C(2n,n) sum_i C(n,i)/(n+i+1) x^i."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    p = _p_poly(n)
    if check:
        _agree(f"P_{n}", p, p_poly_symmetric(n))
    return p


def p_poly_symmetric(n: int) -> Polynomial:
    """P_n(x) = (-1)^(n+1) Q_n(-1-x)."""
    return poly_affine_sub(q_poly(n), -1, -1).scale((-1) ** (n + 1))


def bezout_family(n: int) -> tuple[Polynomial, Polynomial]:
    """(P_n, Q_n) by extended Euclid on x^(n+1), (x+1)^(n+1)."""
    pair = bezout_min_degree(X ** (n + 1), Polynomial([1, 1]) ** (n + 1))
    return pair.p, pair.q


def q_deriv_poly(n: int, k: int, check: bool = False) -> Polynomial:
    """k-th derivative of Q_n from its explicit expansion.

    Addressed by the absolute index n; k > n gives the zero polynomial.
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if k > n:
        return Polynomial()
    m = n - k
    coeffs = [
        (-1) ** (i + k) * perm(i + k, k) * comb(m + i + 2 * k, i + k)
        for i in range(m + 1)
    ]
    q = Polynomial(coeffs)
    if check:
        _agree(f"Q_{n}^({k})", q, poly_derivative(q_poly(n), k))
    return q


def p_deriv_poly(n: int, k: int) -> Polynomial:
    return poly_derivative(p_poly(n), k)


@dataclass(frozen=True)
class RecurrenceCoeffs:
    u: Polynomial
    v: Polynomial
    w: Polynomial


def recurrence_coeffs(k: int, n: int) -> RecurrenceCoeffs:
    """u, v, w with u Q_{k+n}^(k) = v Q_{k+n-1}^(k) + w Q_{k+n-2}^(k)."""
    if k < 0 or n < 2:
        raise ValueError("need k >= 0 and n >= 2")
    s = n + k
    u = Polynomial([1, 1]) * Polynomial([n + 2 * k - 1, 2 * (s - 1)])
    u = u.scale(n * s)
    v = (
        Polynomial([0, 0, 1]) * Polynomial([3 * n + 4 * k, 2 * s])
    ).scale(-2 * (s - 1) * (2 * s - 1)) - Polynomial([-n, 2 * (s - 1)]).scale(
        (n + 2 * k - 1) * (n + 2 * k)
    )
    w = (X * Polynomial([n + 2 * k, 2 * s])).scale(2 * (n + 2 * k - 1) * (2 * s - 1))
    return RecurrenceCoeffs(u, v, w)


def q_deriv_recurrence(n: int, k: int) -> Polynomial:
    """Q_n^(k) by running the (u, v, w) recurrence up from Q_k^(k), Q_{k+1}^(k)."""
    if k > n:
        return Polynomial()
    first = Polynomial([(-1) ** k * factorial(2 * k) // factorial(k)])
    if n == k:
        return first
    second = Polynomial([1, -2 * (k + 1)]).scale(
        Fraction((-1) ** k * factorial(2 * k + 1), factorial(k + 1))
    )
    prev, cur = first, second
    for m in range(2, n - k + 1):
        c = recurrence_coeffs(k, m)
        prev, cur = cur, exact_div(c.v * cur + c.w * prev, c.u)
    return cur


# ---- Chebyshev and the Pell family Y_n, Z_n --------------------------------

@lru_cache(maxsize=None)
def _cheb(kind: str, n: int) -> Polynomial:
    if kind == "U" and n == -1:
        return Polynomial()
    if n == 0:
        return ONE
    if n == 1:
        return X if kind == "T" else Polynomial([0, 2])
    two_x = Polynomial([0, 2])
    return two_x * _cheb(kind, n - 1) - _cheb(kind, n - 2)


def chebyshev(kind: str, n: int) -> Polynomial:
    """T_n (n >= 0) or U_n (n >= -1, with U_{-1} = 0)."""
    if kind not in ("T", "U"):
        raise ValueError("kind must be 'T' or 'U'")
    lo = 0 if kind == "T" else -1
    if n < lo:
        raise ValueError(f"{kind}_n needs n >= {lo}")
    # fill the cache bottom-up so deep indices never hit the recursion limit
    for m in range(lo, n + 1):
        _cheb(kind, m)
    return _cheb(kind, n)


def cheb_shifted(kind: str, n: int) -> Polynomial:
    """T_n(x + 1/2) or U_n(x + 1/2)."""
    return poly_affine_sub(chebyshev(kind, n), 1, HALF)


def yz_closed(n: int) -> tuple[Polynomial, Polynomial]:
    u1 = cheb_shifted("U", n + 1)
    u0 = cheb_shifted("U", n)
    return (u1 - u0).scale(HALF), (u1 + u0).scale(HALF)


def yz_pell(n: int) -> tuple[Polynomial, Polynomial]:
    """Y_n, Z_n from T_n(x+1/2) and U_{n-1}(x+1/2)."""
    t = cheb_shifted("T", n)
    u = cheb_shifted("U", n - 1)
    y = X * t + (Polynomial([-1, 2]) * Polynomial([1, 1]) * u).scale(HALF)
    z = Polynomial([1, 1]) * t + (X * Polynomial([3, 2]) * u).scale(HALF)
    return y, z


def yz_pair(n: int, check: bool = False) -> tuple[Polynomial, Polynomial]:
    """Solutions (Y_n, Z_n) of (2x+3) Y^2 + (1-2x) Z^2 = 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    y, z = yz_closed(n)
    if check:
        y2, z2 = yz_pell(n)
        _agree(f"Y_{n}", y, y2)
        _agree(f"Z_{n}", z, z2)
    return y, z


def yz_factors(n: int) -> tuple[tuple[Polynomial, Polynomial], tuple[Polynomial, Polynomial]]:
    """Factorizations of Y_{3n} and Z_{3n} (n >= 1) as pairs of factors."""
    if n < 1:
        raise ValueError("n must be positive")
    u = lambda m: cheb_shifted("U", m)  # noqa: E731
    tail = u(2 * n + 1) - u(2 * n - 1)
    y = ((u(n) - u(n - 1)).scale(HALF), tail - 1)
    z = ((u(n) + u(n - 1)).scale(HALF), tail + 1)
    return y, z


# ---- V_n and W_n ----------------------------------------------------------

def v_poly(n: int, check: bool = False) -> Polynomial:
    """V_n(x) = sum_k (n-k)(n-k+1)/n C(n-1+k, k) x^k, degree n-1."""
    if n < 1:
        raise ValueError("n must be positive")
    v = Polynomial(
        Fraction((n - k) * (n - k + 1) * comb(n - 1 + k, k), n) for k in range(n)
    )
    if check:
        _agree(f"V_{n}", v, v_poly_hankel(n))
    return v


def hankel(n: int) -> Polynomial:
    """Q_n(-x)^2 - Q_{n-1}(-x) Q_{n+1}(-x)."""
    q = lambda m: poly_affine_sub(q_poly(m), -1, 0)  # noqa: E731
    return q(n) * q(n) - q(n - 1) * q(n + 1)


def v_poly_hankel(n: int) -> Polynomial:
    """V_n as 2(n+1) W_n / (C(2n,n) x^n (1-2x)), by exact division."""
    den = Polynomial([1, -2]).shift(n).scale(comb(2 * n, n))
    return exact_div(hankel(n).scale(2 * (n + 1)), den)


def v_poly_recurrence(n: int) -> Polynomial:
    if n < 1:
        raise ValueError("n must be positive")
    prev, cur = Polynomial([2]), Polynomial([3, 2])
    if n == 1:
        return prev
    for m in range(3, n + 1):
        a = Polynomial([-m - 1, -2 * (2 * m - 3), 2 * (2 * m - 3)])
        rhs = a * cur + Polynomial([0, 2 * (2 * m - 1)]) * prev
        prev, cur = cur, exact_div(rhs, Polynomial([-m, m]))
    return cur


def w_poly(n: int, check: bool = False) -> Polynomial:
    """W_n(x) = Q_n(-x)^2 - Q_{n-1}(-x) Q_{n+1}(-x)."""
    if n < 1:
        raise ValueError("n must be positive")
    w = hankel(n)
    if check:
        alt = (v_poly(n) * Polynomial([1, -2]).shift(n)).scale(
            Fraction(comb(2 * n, n), 2 * (n + 1))
        )
        _agree(f"W_{n}", w, alt)
    return w


# ---- Bezout chains and the Thue-type family -------------------------------

def bezout_chain(n: int, p0: Polynomial, q0: Polynomial, Y: Polynomial, Z: Polynomial):
    """(p_n, q_n) with p_n Y^(n+1) + q_n Z^(n+1) = 1, built up from p0 Y + q0 Z = 1."""
    if p0 * Y + q0 * Z != ONE:
        raise SeedNotBezout("p0*Y + q0*Z != 1")
    p, q = p0, q0
    y_pow, z_pow = ONE, ONE  # Y^m, Z^m for the current m
    for _ in range(n):
        y_next, z_next = y_pow * Y, z_pow * Z
        p_new = p * (p0 + p0 * q * z_next + q0 * p * y_pow * Z)
        q_new = q * (q0 + q0 * p * y_next + p0 * q * Y * z_pow)
        p, q = p_new, q_new
        y_pow, z_pow = y_next, z_next
    return p, q


@dataclass(frozen=True)
class ThueWitness:
    n: int
    m: int
    Y: Polynomial
    Z: Polynomial
    signs: tuple  # (zeta, xi) pairs of rational m-th roots of unity checked


def rational_roots_of_unity(m: int) -> tuple[int, ...]:
    return (1, -1) if m % 2 == 0 else (1,)


def thue_family(m: int, r: int) -> ThueWitness:
    """n = rm - 1 with Y = x^r, Z = (x+1)^r solving P_n Y^m + Q_n Z^m = 1."""
    if m < 2 or r < 1:
        raise ValueError("need m >= 2 and r >= 1")
    n = r * m - 1
    Y, Z = X ** r, Polynomial([1, 1]) ** r
    P, Q = p_poly(n), q_poly(n)
    signs = []
    for zeta in rational_roots_of_unity(m):
        for xi in rational_roots_of_unity(m):
            lhs = P * Y.scale(zeta) ** m + Q * Z.scale(xi) ** m
            if lhs != ONE:
                raise FamilyMismatch(f"Thue identity fails for m={m}, r={r}, signs=({zeta},{xi})")
            signs.append((zeta, xi))
    return ThueWitness(n, m, Y, Z, tuple(signs))


# ---- family dispatch (CLI, tables) ----------------------------------------

FAMILY_TAGS = ("P", "Q", "Qderiv", "ChebT", "ChebU", "Y", "Z", "V", "W",
               "BezoutChainP", "BezoutChainQ")


@dataclass(frozen=True)
class FamilyId:
    tag: str
    k: int = 0

    def __post_init__(self):
        if self.tag not in FAMILY_TAGS:
            raise ValueError(f"unknown family {self.tag!r}")
        if self.k < 0:
            raise ValueError("derivative order must be nonnegative")

    def build(self, n: int) -> Polynomial:
        t = self.tag
        if t == "P":
            return p_poly(n)
        if t == "Q":
            return q_poly(n)
        if t == "Qderiv":
            return q_deriv_poly(n, self.k)
        if t == "ChebT":
            return chebyshev("T", n)
        if t == "ChebU":
            return chebyshev("U", n)
        if t == "Y":
            return yz_pair(n)[0]
        if t == "Z":
            return yz_pair(n)[1]
        if t == "V":
            return v_poly(n)
        if t == "W":
            return w_poly(n)
        seed = (Polynomial([-1]), ONE, X, Polynomial([1, 1]))
        pair = bezout_chain(n, *seed)
        return pair[0] if t == "BezoutChainP" else pair[1]
