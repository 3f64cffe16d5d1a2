"""Truncated power series in t whose coefficients are polynomials in x.

A :class:`TruncatedBiSeries` of order N is known exactly through t^N.  Ring
operations require equal orders; multiplying by t^k raises the order by k and
differentiating in t lowers it by one, so every value always states how far it
can be trusted.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence

from .polycore import Polynomial, exact_div, poly_affine_sub, poly_derivative

ONE = Polynomial([1])


class OrderMismatch(ValueError):
    pass


class NonUnitLeadingCoefficient(ValueError):
    pass


class NonzeroConstantTerm(ValueError):
    pass


class TruncatedBiSeries:
    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        c = [p if isinstance(p, Polynomial) else Polynomial(p) if isinstance(p, (list, tuple))
             else Polynomial([p]) for p in coeffs]
        if order is None:
            order = len(c) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        if len(c) > order + 1:
            c = c[: order + 1]
        c += [Polynomial()] * (order + 1 - len(c))
        self.order = order
        self.coeffs = tuple(c)

    @classmethod
    def zero(cls, order: int) -> TruncatedBiSeries:
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> TruncatedBiSeries:
        return cls([ONE], order)

    @classmethod
    def from_terms(cls, terms: dict[int, Polynomial], order: int) -> TruncatedBiSeries:
        """Series with the given t^i coefficients (terms beyond the order are dropped)."""
        c = [Polynomial()] * (order + 1)
        for i, p in terms.items():
            if i <= order:
                c[i] = p if isinstance(p, Polynomial) else Polynomial([p])
        return cls(c, order)

    def coeff(self, n: int) -> Polynomial:
        if not 0 <= n <= self.order:
            raise IndexError(f"t^{n} is outside the known range 0..{self.order}")
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedBiSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"TruncatedBiSeries(order={self.order}, coeffs={[str(p) for p in self.coeffs]})"

    def _check(self, other: TruncatedBiSeries) -> None:
        if self.order != other.order:
            raise OrderMismatch(f"orders {self.order} and {other.order} differ")

    def __add__(self, other: TruncatedBiSeries) -> TruncatedBiSeries:
        self._check(other)
        return TruncatedBiSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __sub__(self, other: TruncatedBiSeries) -> TruncatedBiSeries:
        self._check(other)
        return TruncatedBiSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __neg__(self) -> TruncatedBiSeries:
        return TruncatedBiSeries([-a for a in self.coeffs], self.order)

    def __mul__(self, other: TruncatedBiSeries) -> TruncatedBiSeries:
        self._check(other)
        n = self.order
        out = []
        for k in range(n + 1):
            acc = Polynomial()
            for i in range(k + 1):
                a, b = self.coeffs[i], other.coeffs[k - i]
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return TruncatedBiSeries(out, n)

    def scale(self, p) -> TruncatedBiSeries:
        """Multiply every coefficient by a polynomial in x (or a scalar)."""
        if not isinstance(p, Polynomial):
            p = Polynomial([p])
        return TruncatedBiSeries([p * a for a in self.coeffs], self.order)

    def mul_t(self, k: int = 1) -> TruncatedBiSeries:
        """Multiply by t^k; the result is known through t^(order + k)."""
        return TruncatedBiSeries([Polynomial()] * k + list(self.coeffs), self.order + k)

    def truncate(self, order: int) -> TruncatedBiSeries:
        if order > self.order:
            raise OrderMismatch(f"cannot extend order {self.order} to {order}")
        return TruncatedBiSeries(self.coeffs[: order + 1], order)

    def map_x(self, a, b) -> TruncatedBiSeries:
        """Substitute x -> a*x + b in every coefficient."""
        return TruncatedBiSeries([poly_affine_sub(p, a, b) for p in self.coeffs], self.order)

    def partial(self, var: str) -> TruncatedBiSeries:
        return series_partial(self, var)

    def to_json(self) -> str:
        return json.dumps([p.to_strings() for p in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> TruncatedBiSeries:
        return cls([Polynomial.from_strings(c) for c in json.loads(text)])


def series_arith(a: TruncatedBiSeries, b: TruncatedBiSeries, op: str) -> TruncatedBiSeries:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown series operation {op!r}")


def series_inverse(a: TruncatedBiSeries) -> TruncatedBiSeries:
    """Multiplicative inverse; the t^0 coefficient must be a nonzero constant."""
    c0 = a.coeffs[0]
    if c0.degree != 0:
        raise NonUnitLeadingCoefficient(f"t^0 coefficient {c0} is not a nonzero constant")
    inv0 = 1 / c0.lc
    out = [Polynomial([inv0])]
    for n in range(1, a.order + 1):
        acc = Polynomial()
        for i in range(1, n + 1):
            if a.coeffs[i] and out[n - i]:
                acc = acc + a.coeffs[i] * out[n - i]
        out.append(acc.scale(-inv0))
    return TruncatedBiSeries(out, a.order)


def series_divide_exact(num: TruncatedBiSeries, den: TruncatedBiSeries) -> TruncatedBiSeries:
    """s with den * s = num, dividing by the t^0 coefficient of den in Q[x].

    That coefficient may be a nonconstant polynomial such as 1 + x; every
    step must then divide exactly, otherwise ArithmeticError is raised.
    """
    num._check(den)
    d0 = den.coeffs[0]
    if d0.is_zero():
        raise NonUnitLeadingCoefficient("t^0 coefficient of the divisor is zero")
    out: list[Polynomial] = []
    for n in range(num.order + 1):
        acc = num.coeffs[n]
        for i in range(1, n + 1):
            if den.coeffs[i] and out[n - i]:
                acc = acc - den.coeffs[i] * out[n - i]
        out.append(exact_div(acc, d0))
    return TruncatedBiSeries(out, num.order)


def series_sqrt_one_plus(u: TruncatedBiSeries) -> TruncatedBiSeries:
    """sqrt(1 + u) by the binomial series; u must vanish at t = 0."""
    if not u.coeffs[0].is_zero():
        raise NonzeroConstantTerm("u must have zero t^0 coefficient")
    n = u.order
    result = TruncatedBiSeries.one(n)
    power = TruncatedBiSeries.one(n)
    b = Fraction(1)
    for i in range(1, n + 1):
        b = b * (Fraction(1, 2) - (i - 1)) / i
        power = power * u
        result = result + power.scale(b)
    return result


def series_partial(a: TruncatedBiSeries, var: str) -> TruncatedBiSeries:
    if var == "x":
        return TruncatedBiSeries([poly_derivative(p) for p in a.coeffs], a.order)
    if var == "t":
        if a.order == 0:
            raise OrderMismatch("d/dt of an order-0 series carries no information")
        return TruncatedBiSeries(
            [a.coeffs[n].scale(n) for n in range(1, a.order + 1)], a.order - 1
        )
    raise ValueError("var must be 't' or 'x'")


def _t_poly(terms: Sequence[Polynomial], order: int) -> TruncatedBiSeries:
    return TruncatedBiSeries.from_terms(dict(enumerate(terms)), order)


# ---- the two generating functions ----------------------------------------

def q_gf_parts(N: int) -> tuple[TruncatedBiSeries, TruncatedBiSeries]:
    """Numerator and denominator of the Q_n generating function.

    numerator = 1 + 4xt + (1+2x) sqrt(1+4xt), denominator = 2(1+x-t)(1+4xt).
    """
    four_xt = _t_poly([Polynomial(), Polynomial([0, 4])], N)
    root = series_sqrt_one_plus(four_xt)
    num = TruncatedBiSeries.one(N) + four_xt + root.scale(Polynomial([1, 2]))
    den = _t_poly([Polynomial([2, 2]), Polynomial([-2])], N) * (TruncatedBiSeries.one(N) + four_xt)
    return num, den


def q_generating(N: int) -> TruncatedBiSeries:
    """sum_{n<=N} Q_n(x) t^n expanded from the closed form."""
    if N < 0:
        raise ValueError("order must be nonnegative")
    four_xt = _t_poly([Polynomial(), Polynomial([0, 4])], N)
    num, _ = q_gf_parts(N)
    # (1+4xt) is a unit; (1+x-t) is divided out coefficient by coefficient
    unit = (TruncatedBiSeries.one(N) + four_xt).scale(2)
    return series_divide_exact(num * series_inverse(unit), _t_poly([Polynomial([1, 1]), Polynomial([-1])], N))


def v_gf_parts(N: int) -> tuple[TruncatedBiSeries, TruncatedBiSeries]:
    """numerator = -2t^2 + 2(2-3x)t - 1 + 2x + (1-2x) sqrt(1-4xt), denominator = 2(t+x-1)^2."""
    minus_four_xt = _t_poly([Polynomial(), Polynomial([0, -4])], N)
    root = series_sqrt_one_plus(minus_four_xt)
    poly_part = _t_poly([Polynomial([-1, 2]), Polynomial([4, -6]), Polynomial([-2])], N)
    num = poly_part + root.scale(Polynomial([1, -2]))
    lin = _t_poly([Polynomial([-1, 1]), ONE], N)
    return num, (lin * lin).scale(2)


def v_generating(N: int) -> TruncatedBiSeries:
    """sum_{1<=n<=N} V_n(x) t^n expanded from the closed form."""
    if N < 0:
        raise ValueError("order must be nonnegative")
    num, den = v_gf_parts(N)
    return series_divide_exact(num, den)
