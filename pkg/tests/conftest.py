from fractions import Fraction

import sympy
from hypothesis import settings, strategies as st

from bezoutpoly.polycore import Polynomial

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

X = sympy.Symbol("x")

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=6)
small_ints = st.integers(min_value=-9, max_value=9)


def polys(max_degree=5, elements=rationals):
    return st.lists(elements, max_size=max_degree + 1).map(Polynomial)


def nonconstant_polys(max_degree=5, elements=rationals):
    return polys(max_degree, elements).filter(lambda f: f.degree >= 1)


def to_sympy(f: Polynomial) -> sympy.Poly:
    coeffs = [sympy.Rational(c.numerator, c.denominator) for c in reversed(f.coeffs)] or [0]
    return sympy.Poly(coeffs, X, domain="QQ")


def from_sympy(p) -> Polynomial:
    p = sympy.Poly(p, X)
    return Polynomial(Fraction(int(c.p), int(c.q)) for c in reversed(p.all_coeffs()))


def parse(text: str) -> Polynomial:
    """Polynomial from a rendered string such as ``6*x^2-3*x+1``."""
    return from_sympy(sympy.sympify(text.replace("^", "**"), locals={"x": X}))
