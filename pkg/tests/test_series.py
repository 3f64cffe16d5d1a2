from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from bezoutpoly import families as fam
from bezoutpoly.polycore import Polynomial
from bezoutpoly.series import (
    NonUnitLeadingCoefficient,
    NonzeroConstantTerm,
    OrderMismatch,
    TruncatedBiSeries,
    q_generating,
    q_gf_parts,
    series_arith,
    series_divide_exact,
    series_inverse,
    series_partial,
    series_sqrt_one_plus,
    v_generating,
    v_gf_parts,
)

from conftest import X, from_sympy, polys

P = Polynomial
S = TruncatedBiSeries
F = Fraction
T = sympy.Symbol("t")


def series(order, max_degree=3):
    return st.lists(polys(max_degree), min_size=order + 1, max_size=order + 1).map(
        lambda cs: S(cs, order)
    )


def unit_series(order):
    return st.tuples(st.fractions(min_value=-5, max_value=5).filter(bool), series(order)).map(
        lambda pair: S([P([pair[0]])] + list(pair[1].coeffs[1:]), order)
    )


def sympy_coeffs(expr, order):
    """t-coefficients of a closed form, expanded independently by sympy."""
    ser = sympy.series(expr, T, 0, order + 1).removeO()
    ser = sympy.expand(ser)
    return [from_sympy(sympy.cancel(ser.coeff(T, n))) for n in range(order + 1)]


class TestArithmetic:
    def test_difference_of_squares(self):
        a, b = S([1, 1], 2), S([1, -1], 2)
        assert series_arith(a, b, "mul") == S([1, 0, -1], 2)

    def test_absorbing_zero(self):
        assert S([1, 2, 3]) * S.zero(2) == S.zero(2)

    def test_order_mismatch(self):
        with pytest.raises(OrderMismatch):
            S([1], 2) + S([1], 3)

    def test_unknown_op(self):
        with pytest.raises(ValueError):
            series_arith(S.one(1), S.one(1), "div")

    @given(series(4), series(4), series(4))
    def test_ring_axioms(self, a, b, c):
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert (a - b) + b == a

    def test_truncate_and_mul_t(self):
        a = S([1, 2, 3], 2)
        assert a.mul_t(2) == S([0, 0, 1, 2, 3], 4)
        assert a.truncate(1) == S([1, 2], 1)
        with pytest.raises(OrderMismatch):
            a.truncate(3)

    def test_coeff_outside_range(self):
        with pytest.raises(IndexError):
            S([1], 2).coeff(3)

    @given(series(3))
    def test_json_round_trip(self, a):
        assert S.from_json(a.to_json()) == a


class TestInverse:
    def test_geometric(self):
        assert series_inverse(S([1, -1], 3)) == S([1, 1, 1, 1], 3)

    def test_constant(self):
        assert series_inverse(S([2], 0)) == S([F(1, 2)], 0)

    def test_one_plus_4xt(self):
        a = S([P([1]), P([0, 4])], 2)
        assert series_inverse(a) == S([P([1]), P([0, -4]), P([0, 0, 16])], 2)
        assert a * series_inverse(a) == S.one(2)

    def test_non_unit(self):
        with pytest.raises(NonUnitLeadingCoefficient):
            series_inverse(S([P([1, 1])], 2))

    @given(unit_series(4))
    def test_is_inverse(self, a):
        assert a * series_inverse(a) == S.one(4)

    @given(series(4), unit_series(4))
    def test_exact_division_roundtrip(self, b, a):
        assert series_divide_exact(a * b, a) == b

    def test_division_by_nonunit_polynomial(self):
        den = S([P([1, 1]), P([-1])], 3)
        num = den * S([P([1, 2]), P([3]), P([]), P([0, 1])], 3)
        assert series_divide_exact(num, den).coeff(3) == P([0, 1])


class TestSqrt:
    def test_binomial(self):
        u = S([P(), P([0, 4])], 2)
        assert series_sqrt_one_plus(u) == S([P([1]), P([0, 2]), P([0, 0, -2])], 2)

    def test_zero(self):
        assert series_sqrt_one_plus(S.zero(3)) == S.one(3)

    def test_constant_term_rejected(self):
        with pytest.raises(NonzeroConstantTerm):
            series_sqrt_one_plus(S([1, 1], 2))

    @given(series(4, max_degree=2))
    def test_square(self, u):
        u = S([P()] + list(u.coeffs[1:]), 4)
        r = series_sqrt_one_plus(u)
        assert r * r == S.one(4) + u


class TestPartial:
    def test_t(self):
        assert series_partial(S([P([1]), fam.q_poly(1)], 1), "t") == S([fam.q_poly(1)], 0)

    def test_x(self):
        assert S([P(), P([0, 0, 1])], 1).partial("x") == S([P(), P([0, 2])], 1)

    def test_bad_variable(self):
        with pytest.raises(ValueError):
            series_partial(S.one(1), "y")

    def test_order_zero_t(self):
        with pytest.raises(OrderMismatch):
            series_partial(S.one(0), "t")

    @given(series(4), series(4))
    def test_product_rule(self, a, b):
        lhs = (a * b).partial("t")
        rhs = a.truncate(3) * b.partial("t") + a.partial("t") * b.truncate(3)
        assert lhs == rhs


class TestGeneratingFunctions:
    def test_q_low_terms(self):
        g = q_generating(4)
        assert g.coeff(0) == 1
        assert g.coeff(1) == P([1, -2])
        assert g.coeff(4) == fam.q_poly(4)
        assert g.partial("t").coeff(0) == P([1, -2])

    def test_v_low_terms(self):
        g = v_generating(3)
        assert g.coeff(0).is_zero()
        assert g.coeff(2) == P([3, 2])
        assert g.coeff(3) == fam.v_poly(3)

    @pytest.mark.parametrize("N", [0, 1, 5, 20])
    def test_q_matches_family(self, N):
        g = q_generating(N)
        assert [g.coeff(n) for n in range(N + 1)] == [fam.q_poly(n) for n in range(N + 1)]

    @pytest.mark.parametrize("N", [1, 5, 20])
    def test_v_matches_family(self, N):
        g = v_generating(N)
        assert [g.coeff(n) for n in range(1, N + 1)] == [fam.v_poly(n) for n in range(1, N + 1)]

    def test_cleared_denominators(self):
        for parts, members in ((q_gf_parts, fam.q_poly), (v_gf_parts, None)):
            num, den = parts(8)
            cs = [members(n) for n in range(9)] if members else [P()] + [fam.v_poly(n) for n in range(1, 9)]
            assert den * S(cs, 8) == num

    def test_q_against_sympy_expansion(self):
        x = X
        r = sympy.sqrt(1 + 4 * x * T)
        expr = (1 + 4 * x * T + (1 + 2 * x) * r) / (2 * (1 + x - T) * (1 + 4 * x * T))
        assert list(q_generating(5).coeffs) == sympy_coeffs(expr, 5)

    def test_v_against_sympy_expansion(self):
        x = X
        expr = (-2 * T ** 2 + 2 * (2 - 3 * x) * T - 1 + 2 * x + (1 - 2 * x) * sympy.sqrt(1 - 4 * x * T)) / (
            2 * (T + x - 1) ** 2
        )
        assert list(v_generating(5).coeffs) == sympy_coeffs(expr, 5)

    def test_negative_order(self):
        with pytest.raises(ValueError):
            q_generating(-1)
