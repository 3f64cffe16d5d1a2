"""Integer-side tools: square and prime tests, the Pell sequences X_j and n_j,
the square-discriminant classifier for D_{k,n} = Disc(Q_n^(k)) and the
Eisenstein criterion."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb, factorial, isqrt

from .polycore import Polynomial, is_integer_poly


class UnsupportedMagnitude(ValueError):
    pass


class NotIntegerPoly(ValueError):
    pass


class NotPrime(ValueError):
    pass


def is_perfect_square(v: int) -> int | None:
    """Integer square root of v, or None when v is not a square."""
    if v < 0:
        return None
    r = isqrt(v)
    return r if r * r == v else None


def rational_square_root(v: Fraction) -> Fraction | None:
    v = Fraction(v)
    num = is_perfect_square(v.numerator)
    den = is_perfect_square(v.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


# Deterministic for n < 3.3e24 (Sorenson and Webster), so certainly below 2**64.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(v: int) -> bool:
    """Deterministic Miller-Rabin for 0 <= v < 2**64."""
    if v >= 1 << 64:
        raise UnsupportedMagnitude("primality is only supported below 2**64")
    if v < 2:
        return False
    for p in _MR_BASES:
        if v % p == 0:
            return v == p
    d, s = v - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, v)
        if x in (1, v - 1):
            continue
        for _ in range(s - 1):
            x = x * x % v
            if x == v - 1:
                break
        else:
            return False
    return True


def primes_upto(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if is_prime(p)]


# ---- Pell sequences -------------------------------------------------------

@dataclass(frozen=True)
class PellState:
    k: int
    j: int
    X: int

    def y(self) -> int:
        """The Y with X^2 - 8 Y^2 = (2k+1)^2; raises if none exists."""
        rem = self.X * self.X - (2 * self.k + 1) ** 2
        if rem % 8:
            raise ArithmeticError(f"X_{self.j}^2 - (2k+1)^2 not divisible by 8")
        y = is_perfect_square(rem // 8)
        if y is None:
            raise ArithmeticError(f"X_{self.j} gives no integer Y")
        return y


def pell_x(k: int, j: int) -> int:
    """X_1 = 3(2k+1), X_2 = 17(2k+1), X_j = 6 X_{j-1} - X_{j-2}."""
    if j < 1 or k < 0:
        raise ValueError("need j >= 1 and k >= 0")
    a, b = 3 * (2 * k + 1), 17 * (2 * k + 1)
    if j == 1:
        return a
    for _ in range(j - 2):
        a, b = b, 6 * b - a
    return b


def pell_state(k: int, j: int) -> PellState:
    return PellState(k, j, pell_x(k, j))


def n_j(j: int, k: int = 0) -> int:
    """j-th n > k with n = k (mod 4) making (n+k+1)(2n+1) a square along the X_{2j+1} branch."""
    if j < 1:
        raise ValueError("j must be positive")
    x = pell_x(k, 2 * j + 1)
    num = x - 2 * k - 3
    if num % 4:
        raise ArithmeticError("X_{2j+1} - 2k - 3 is not divisible by 4")
    return num // 4


# ---- discriminant squares -------------------------------------------------

def disc_closed_form(k: int, n: int) -> Fraction:
    """Closed form of Disc(Q_n^(k)) for n > k >= 0."""
    if not n > k >= 0:
        raise ValueError("need n > k >= 0")
    eps = (n - k) * (n - k - 1) // 2
    base = Fraction(factorial(n + k), factorial(n - k)) * comb(2 * n, n) * (2 * n + 1)
    val = Fraction(n + k + 1, comb(2 * n, n + k)) * base ** (n - k - 1)
    return -val if eps % 2 else val


class Verdict(str, Enum):
    SQUARE = "Square"
    NOT_SQUARE = "NotSquare"


@dataclass(frozen=True)
class SquareClassification:
    verdict: Verdict
    reason: str  # NegativeSign | PrimeWitness | PellMember | DirectIntegerCheck
    value_class: int  # (n - k) mod 4
    witness: int | None = None  # prime p or Pell index j
    root: int | None = None  # integer square root of D when verdict is Square

    @property
    def is_square(self) -> bool:
        return self.verdict is Verdict.SQUARE


def _disc_base(k: int, n: int) -> int:
    return factorial(n + k) // factorial(n - k) * comb(2 * n, n) * (2 * n + 1)


def _disc_root(k: int, n: int) -> int:
    """Square root of D_{k,n}, assuming it is a square.

    Uses D = (n+k+1)/C(2n,n+k) * B^(n-k-1) with B the integer base, so the
    root is assembled from B^((n-k-1)//2) without forming D itself.
    """
    b = _disc_base(k, n)
    if (n - k) % 4 == 1:
        lead = rational_square_root(Fraction(n + k + 1, comb(2 * n, n + k)))
        half = (n - k - 1) // 2
    else:
        s = is_perfect_square((n + k + 1) * (2 * n + 1))
        lead = None if s is None else Fraction(s * factorial(n + k), factorial(n))
        half = (n - k - 2) // 2
    root = None if lead is None else lead * b ** half
    if root is None or root.denominator != 1:
        raise ArithmeticError(f"D_{{{k},{n}}} has no integer square root")
    return root.numerator


def classify_disc_square(k: int, n: int) -> SquareClassification:
    """Decide whether D_{k,n} = Disc(Q_n^(k)) is the square of an integer.

    The residue of n - k mod 4 routes the decision: 2 and 3 give a negative
    discriminant; 1 reduces to whether C(2n, n+k)/(n+k+1) is a square, settled
    by a prime in n+k+2..2n-1 or else directly; 0 reduces to whether
    (n+k+1)(2n+1) is a square.  A Square verdict carries the integer root.
    """
    if not n > k >= 0:
        raise ValueError("need n > k >= 0")
    r = (n - k) % 4
    if r in (2, 3):
        return SquareClassification(Verdict.NOT_SQUARE, "NegativeSign", r)
    if r == 1:
        for p in range(n + k + 2, 2 * n):
            if is_prime(p):
                return SquareClassification(Verdict.NOT_SQUARE, "PrimeWitness", r, p)
        core = Fraction(comb(2 * n, n + k), n + k + 1)
        if rational_square_root(core) is None:
            return SquareClassification(Verdict.NOT_SQUARE, "DirectIntegerCheck", r)
        return SquareClassification(Verdict.SQUARE, "DirectIntegerCheck", r, root=_disc_root(k, n))
    if is_perfect_square((n + k + 1) * (2 * n + 1)) is None:
        return SquareClassification(Verdict.NOT_SQUARE, "DirectIntegerCheck", r)
    j = _pell_index(k, n)
    reason = "PellMember" if j is not None else "DirectIntegerCheck"
    return SquareClassification(Verdict.SQUARE, reason, r, j, _disc_root(k, n))


def _pell_index(k: int, n: int) -> int | None:
    j = 1
    while True:
        m = n_j(j, k)
        if m == n:
            return j
        if m > n:
            return None
        j += 1


def direct_square_check(k: int, n: int) -> bool:
    d = disc_closed_form(k, n)
    return d.denominator == 1 and is_perfect_square(d.numerator) is not None


# ---- Eisenstein -----------------------------------------------------------

def eisenstein_check(f: Polynomial, p: int, reverse: bool = False) -> bool:
    """True iff f is p-Eisenstein: p does not divide lc(f), p divides every
    other coefficient, and p^2 does not divide the constant term.

    With ``reverse`` the test is applied to x^deg f(1/x), which certifies
    irreducibility of f just the same when f(0) != 0.
    """
    if not is_integer_poly(f):
        raise NotIntegerPoly("Eisenstein criterion needs integer coefficients")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if f.degree < 1:
        return False
    c = [int(a) for a in f.coeffs]
    if reverse:
        if c[0] == 0:
            return False
        c.reverse()
    if c[-1] % p == 0:
        return False
    if any(a % p for a in c[:-1]):
        return False
    return c[0] % (p * p) != 0
