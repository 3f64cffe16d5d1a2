from fractions import Fraction
from math import comb, factorial

import pytest
import sympy
from hypothesis import given, strategies as st

from bezoutpoly import families as fam
from bezoutpoly.polycore import Polynomial, exact_div, is_integer_poly, poly_affine_sub, poly_derivative

from conftest import X, from_sympy, parse

P = Polynomial
F = Fraction
ONE = P([1])
XP1 = P([1, 1])


def X_(e):
    return P.monomial(e)


ns = st.integers(min_value=0, max_value=25)
pos = st.integers(min_value=1, max_value=25)


class TestQP:
    @pytest.mark.parametrize(
        "n, text",
        [(0, "1"), (2, "6*x^2-3*x+1"), (4, "70*x^4-35*x^3+15*x^2-5*x+1")],
    )
    def test_q_values(self, n, text):
        assert fam.q_poly(n) == parse(text)

    @pytest.mark.parametrize("n, text", [(1, "2*x+3"), (3, "20*x^3+70*x^2+84*x+35")])
    def test_p_values(self, n, text):
        assert fam.p_poly(n) == parse(text)

    def test_p2_at_zero(self):
        assert fam.p_poly(2)(0) == -10

    def test_negative_index(self):
        with pytest.raises(ValueError):
            fam.q_poly(-1)

    @given(ns)
    def test_defining_equation(self, n):
        assert fam.p_poly(n) * X_(n + 1) + fam.q_poly(n) * XP1 ** (n + 1) == 1

    @given(ns)
    def test_checked_routes_agree(self, n):
        assert fam.q_poly(n, check=True) == fam.q_poly_recurrence(n)
        assert fam.p_poly(n, check=True) == fam.p_poly_symmetric(n)

    @pytest.mark.parametrize("n", range(0, 13))
    def test_extended_euclid_oracle(self, n):
        assert fam.bezout_family(n) == (fam.p_poly(n), fam.q_poly(n))

    def test_sympy_oracle(self):
        x = X
        for n in range(8):
            s, t, h = sympy.gcdex(x ** (n + 1), (x + 1) ** (n + 1), x)
            assert h == 1
            assert (from_sympy(s), from_sympy(t)) == (fam.p_poly(n), fam.q_poly(n))

    @given(ns)
    def test_integer_coefficients(self, n):
        assert is_integer_poly(fam.p_poly(n)) and is_integer_poly(fam.q_poly(n))

    @given(ns)
    def test_special_values(self, n):
        assert fam.q_poly(n)(F(-1, 2)) == 2 ** n
        assert fam.p_poly(n)(-1) == (-1) ** (n + 1)
        assert fam.p_poly(n)(1) + 2 ** (n + 1) * fam.q_poly(n)(1) == 1


class TestDerivatives:
    def test_examples(self):
        assert fam.q_deriv_poly(2, 1) == P([-3, 12])
        assert fam.q_deriv_poly(3, 0) == fam.q_poly(3)
        assert fam.q_deriv_poly(2, 5).is_zero()

    @pytest.mark.parametrize("k", range(6))
    def test_top_derivative_is_constant(self, k):
        assert fam.q_deriv_poly(k, k) == F((-1) ** k * factorial(2 * k), factorial(k))

    @given(ns, st.integers(min_value=0, max_value=27))
    def test_explicit_matches_differentiation(self, n, k):
        assert fam.q_deriv_poly(n, k, check=True) == poly_derivative(fam.q_poly(n), k)

    @given(st.integers(min_value=0, max_value=6), st.integers(min_value=0, max_value=14))
    def test_recurrence_route(self, k, m):
        n = k + m
        assert fam.q_deriv_recurrence(n, k) == fam.q_deriv_poly(n, k)

    def test_recurrence_coeffs_example(self):
        c = fam.recurrence_coeffs(1, 2)
        assert c.u == parse("24*x^2+42*x+18")
        assert c.v == parse("-120*x^3-200*x^2-48*x+24")
        assert c.w == parse("180*x^2+120*x")

    def test_recurrence_coeffs_k0_common_factor(self):
        c = fam.recurrence_coeffs(0, 2)
        common = P([1, 2]).scale(2)
        assert exact_div(c.u, common) == P([2, 2])

    @given(st.integers(min_value=0, max_value=8), st.integers(min_value=2, max_value=20))
    def test_w_vanishes_at_beta(self, k, n):
        assert fam.recurrence_coeffs(k, n).w(F(-(n + 2 * k), 2 * (n + k))) == 0

    def test_recurrence_coeffs_domain(self):
        with pytest.raises(ValueError):
            fam.recurrence_coeffs(0, 1)

    @given(ns)
    def test_ode(self, n):
        q = fam.q_poly(n)
        lhs = P([0, 1, 1]) * poly_derivative(q, 2) + P([-n, 2]) * poly_derivative(q) - q.scale(n * (n + 1))
        assert lhs.is_zero()


class TestChebyshev:
    def test_u2(self):
        assert fam.chebyshev("U", 2) == P([-1, 0, 4])

    def test_u_minus_one(self):
        assert fam.chebyshev("U", -1).is_zero()

    @given(st.integers(min_value=1, max_value=40))
    def test_pell(self, n):
        t, u = fam.chebyshev("T", n), fam.chebyshev("U", n - 1)
        assert t * t - P([-1, 0, 1]) * u * u == 1

    @given(st.integers(min_value=0, max_value=20))
    def test_sympy_oracle(self, n):
        assert fam.chebyshev("T", n) == from_sympy(sympy.chebyshevt(n, X))
        assert fam.chebyshev("U", n) == from_sympy(sympy.chebyshevu(n, X))

    def test_deep_index(self):
        assert fam.chebyshev("T", 1500).degree == 1500

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            fam.chebyshev("V", 2)
        with pytest.raises(ValueError):
            fam.chebyshev("T", -1)


class TestYZ:
    def test_examples(self):
        assert fam.yz_pair(0) == (X_(1), XP1)
        y3, z3 = fam.yz_pair(3)
        assert y3 == X_(1) * parse("8*x^3+12*x^2-3")
        assert z3 == XP1 * parse("8*x^3+12*x^2-1")
        assert fam.yz_pair(2)[0] == parse("4*x^3+4*x^2-x-1/2")

    @given(ns)
    def test_pell_identity(self, n):
        y, z = fam.yz_pair(n, check=True)
        assert P([3, 2]) * y * y + P([1, -2]) * z * z == 1

    @given(st.integers(min_value=1, max_value=10))
    def test_factorization(self, n):
        (ya, yb), (za, zb) = fam.yz_factors(n)
        y, z = fam.yz_pair(3 * n)
        assert ya * yb == y and za * zb == z
        assert min(ya.degree, yb.degree, za.degree, zb.degree) >= 1

    def test_printed_z4_breaks_the_pell_identity(self):
        # the value printed in the reference table has +6x where -6x belongs
        y4, z4 = fam.yz_pair(4)
        printed = parse("16*x^5+48*x^4+40*x^3+2*x^2+6*x-1/2")
        assert printed != z4
        assert P([3, 2]) * y4 * y4 + P([1, -2]) * printed * printed != 1
        assert z4 == parse("16*x^5+48*x^4+40*x^3+2*x^2-6*x-1/2")


class TestVW:
    def test_v_examples(self):
        assert fam.v_poly(1) == 2
        assert fam.v_poly(2) == P([3, 2])
        assert fam.v_poly(3) == P([4, 6, 4])
        assert fam.v_poly(4)(1) == 42

    def test_w_examples(self):
        assert fam.w_poly(1) == parse("x-2*x^2")
        assert fam.w_poly(4) == parse("35*x^4+14*x^5-63*x^6-140*x^7-140*x^8")
        assert fam.w_poly(2).coeff(2) == 3

    @given(pos)
    def test_three_routes_agree(self, n):
        v = fam.v_poly(n, check=True)
        assert v == fam.v_poly_hankel(n) == fam.v_poly_recurrence(n)
        fam.w_poly(n, check=True)

    @given(pos)
    def test_values(self, n):
        v = fam.v_poly(n)
        assert v(0) == n + 1 and v(F(1, 2)) == 2 ** n and v(1) == fam.catalan(n + 1)

    def test_domain(self):
        with pytest.raises(ValueError):
            fam.v_poly(0)
        with pytest.raises(ValueError):
            fam.w_poly(0)


class TestBezoutChain:
    SEED = (P([-1]), ONE, X_(1), XP1)

    def test_first_steps(self):
        assert fam.bezout_chain(1, *self.SEED) == (P([3, 2]), P([1, -2]))
        assert fam.bezout_chain(2, *self.SEED)[0] == parse("8*x^4+28*x^3+30*x^2+5*x-6")

    def test_degree_law(self):
        degs = [fam.bezout_chain(n, *self.SEED)[0].degree for n in range(1, 6)]
        assert degs == [1, 4, 11, 26, 57]

    @pytest.mark.parametrize("n", range(0, 6))
    def test_identity(self, n):
        p, q = fam.bezout_chain(n, *self.SEED)
        assert p * X_(1) ** (n + 1) + q * XP1 ** (n + 1) == 1

    def test_other_seed(self):
        y, z = fam.yz_pair(1)
        p1, q1 = fam.p_poly(1), fam.q_poly(1)
        # P_1 Y^2 + Q_1 Z^2 = 1 means (p0, q0, Y, Z) = (P_1 Y, Q_1 Z, Y, Z) is a seed
        p, q = fam.bezout_chain(2, p1 * y, q1 * z, y, z)
        assert p * y ** 3 + q * z ** 3 == 1

    def test_bad_seed(self):
        with pytest.raises(fam.SeedNotBezout):
            fam.bezout_chain(1, ONE, ONE, X_(1), XP1)


class TestThue:
    @pytest.mark.parametrize("m, r, n", [(2, 2, 3), (3, 1, 2), (2, 3, 5), (4, 3, 11)])
    def test_witness(self, m, r, n):
        w = fam.thue_family(m, r)
        assert w.n == n
        assert len(w.signs) == (4 if m % 2 == 0 else 1)

    def test_domain(self):
        with pytest.raises(ValueError):
            fam.thue_family(1, 1)


class TestFamilyId:
    def test_dispatch(self):
        assert fam.FamilyId("Q").build(3) == fam.q_poly(3)
        assert fam.FamilyId("Qderiv", 2).build(4) == fam.q_deriv_poly(4, 2)
        assert fam.FamilyId("BezoutChainP").build(1) == fam.p_poly(1)

    def test_unknown(self):
        with pytest.raises(ValueError):
            fam.FamilyId("R")


class TestLatticePaths:
    @pytest.mark.parametrize("n", range(9))
    def test_binomial_counts(self, n):
        q = poly_affine_sub(fam.q_poly(n), -1, 0)
        assert [int(c) for c in q.coeffs] == [comb(n + i, i) for i in range(n + 1)]
