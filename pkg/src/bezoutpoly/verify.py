"""Registry of identity checkers.

Each checker is a generator yielding ``(params, lhs, rhs)`` triples, where the
two sides come from independent computations.  :func:`verify` consumes the
generator, stops at the first pair that differs and wraps the outcome in a
:class:`VerificationReport`.
"""
from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterator

from . import families as fam
from .numthy import (
    classify_disc_square,
    direct_square_check,
    disc_closed_form,
    eisenstein_check,
    is_prime,
)
from .polycore import (
    Polynomial,
    discriminant,
    exact_div,
    poly_affine_sub,
    poly_derivative,
    sylvester_resultant,
)
from .series import (
    TruncatedBiSeries,
    q_generating,
    q_gf_parts,
    v_generating,
    v_gf_parts,
)

X = Polynomial([0, 1])
ONE = Polynomial([1])
HALF = Fraction(1, 2)

Check = tuple  # (params: dict, lhs, rhs)


class UnknownIdentity(KeyError):
    pass


@dataclass(frozen=True)
class Counterexample:
    params: dict
    lhs: list  # polynomial serialization (coefficient strings, low to high)
    rhs: list

    def to_dict(self) -> dict:
        return {"params": dict(self.params), "lhs": list(self.lhs), "rhs": list(self.rhs)}


@dataclass
class VerificationReport:
    identity_id: str
    range: dict
    passed: bool
    counterexample: Counterexample | None = None
    elapsed: float = 0.0
    checks: int = 0
    notes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "id": self.identity_id,
            "range": dict(self.range),
            "passed": self.passed,
            "counterexample": self.counterexample.to_dict() if self.counterexample else None,
            "elapsed_ms": round(self.elapsed * 1000, 3),
            "checks": self.checks,
            "notes": list(self.notes),
        }


REPORT_SCHEMA = {
    "type": "object",
    "required": ["id", "range", "passed", "counterexample", "elapsed_ms"],
    "properties": {
        "id": {"type": "string"},
        "range": {
            "type": "object",
            "required": ["nmax", "kmax"],
            "properties": {
                "nmax": {"type": "integer"},
                "kmax": {"type": ["integer", "null"]},
            },
        },
        "passed": {"type": "boolean"},
        "counterexample": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["params", "lhs", "rhs"],
                    "properties": {
                        "params": {"type": "object"},
                        "lhs": {"type": "array", "items": {"type": "string"}},
                        "rhs": {"type": "array", "items": {"type": "string"}},
                    },
                },
            ]
        },
        "elapsed_ms": {"type": "number", "minimum": 0},
        "checks": {"type": "integer"},
        "notes": {"type": "array", "items": {"type": "string"}},
    },
}


def _as_poly(v) -> Polynomial:
    if isinstance(v, Polynomial):
        return v
    if isinstance(v, TruncatedBiSeries):
        raise TypeError("compare series coefficient-wise")
    return Polynomial([int(v) if isinstance(v, bool) else v])


# ---- helpers shared by checkers -------------------------------------------

def _q_neg(n: int) -> Polynomial:
    return poly_affine_sub(fam.q_poly(n), -1, 0)


def _k_range(n: int, kmax: int | None, upto: int) -> range:
    top = upto if kmax is None else min(kmax, upto)
    return range(0, top + 1)


def delta_closed_form(k: int, n: int) -> Fraction:
    """Closed form for R(Q_{n+k}^(k), Q_{n-1+k}^(k)), n >= 1."""
    a = Fraction(factorial(2 * k + 2 * n), factorial(n) * factorial(k + n))
    b = Fraction(factorial(2 * k + n - 1), factorial(k + n - 1))
    beta = Fraction(-(n + 2 * k), 2 * (n + k))
    val = fam.q_deriv_poly(n - 1 + k, k)(beta)
    return Fraction(2 * (2 * k + n), n) * a ** (n - 2) * b ** n * val


def consecutive_deriv_resultant(k: int, n: int) -> Fraction:
    """Closed form of R(Q_n^(k), Q_n^(k+1)) for 0 <= k < n."""
    inner = Fraction(factorial(n + k) * factorial(2 * n), factorial(n - k) * factorial(n) ** 2)
    return (
        (-1) ** n
        * Fraction(2 * n + 1) ** (n - k)
        * Fraction(n + k + 1, 2 * n + 1)
        * Fraction(factorial(n + k), factorial(n))
        * inner ** (n - k - 1)
    )


def disc_q_closed(n: int) -> Fraction:
    """Closed form of Disc(Q_n) (k = 0 specialization), n >= 1."""
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * (n + 1) * Fraction(2 * n + 1) ** (n - 1) * Fraction(comb(2 * n, n)) ** (n - 2)


def count_lattice_paths(n: int, i: int) -> int:
    """Brute force: enumerate every step word with n east and i north steps."""
    count = 0
    for word in itertools.product((0, 1), repeat=n + i):
        if sum(word) == i:
            count += 1
    return count


# ---- checkers ---------------------------------------------------------------

def check_defining(nmax, kmax) -> Iterator[Check]:
    for n in range(nmax + 1):
        lhs = fam.p_poly(n) * X ** (n + 1) + fam.q_poly(n) * Polynomial([1, 1]) ** (n + 1)
        yield {"n": n}, lhs, ONE
        yield {"n": n, "part": "deg"}, max(fam.p_poly(n).degree, fam.q_poly(n).degree), n


def check_bezout_oracle(nmax, kmax) -> Iterator[Check]:
    for n in range(nmax + 1):
        p, q = fam.bezout_family(n)
        yield {"n": n, "part": "P"}, p, fam.p_poly(n)
        yield {"n": n, "part": "Q"}, q, fam.q_poly(n)


def check_symmetry(nmax, kmax) -> Iterator[Check]:
    for n in range(nmax + 1):
        s = (-1) ** (n + 1)
        yield {"n": n, "part": "P"}, fam.p_poly(n), poly_affine_sub(fam.q_poly(n), -1, -1).scale(s)
        yield {"n": n, "part": "Q"}, fam.q_poly(n), poly_affine_sub(fam.p_poly(n), -1, -1).scale(s)


def check_special_values(nmax, kmax) -> Iterator[Check]:
    for n in range(nmax + 1):
        P, Q = fam.p_poly(n), fam.q_poly(n)
        s = (-1) ** (n + 1)
        yield {"n": n, "at": "P(-1)"}, P(-1), s
        yield {"n": n, "at": "P(-1/2)"}, P(-HALF), s * 2 ** n
        yield {"n": n, "at": "Q(-1/2)"}, Q(-HALF), 2 ** n
        yield {"n": n, "at": "Q(0)"}, Q(0), 1
        yield {"n": n, "at": "P(0)"}, P(0), s * comb(2 * n + 1, n + 1)
        yield {"n": n, "at": "P(0)+Q(-1)"}, P(0), s * Q(-1)
        yield {"n": n, "at": "P(1)+2^(n+1)Q(1)"}, P(1) + 2 ** (n + 1) * Q(1), 1
        for k in _k_range(n, kmax, n):
            rhs = Fraction((-1) ** k * factorial(2 * n + 1), (n + k + 1) * factorial(n) * factorial(n - k))
            yield {"n": n, "k": k, "at": "Q^(k)(-1)"}, poly_derivative(Q, k)(-1), rhs


def check_cn_identity(nmax, kmax) -> Iterator[Check]:
    for n in range(nmax + 1):
        Q = fam.q_poly(n)
        lhs = Polynomial([1, 1]) * poly_derivative(Q) + Q.scale(n + 1)
        rhs = Polynomial.monomial(n, (-1) ** n * (2 * n + 1) * comb(2 * n, n))
        yield {"n": n}, lhs, rhs


def check_deriv_chain(nmax, kmax) -> Iterator[Check]:
    for n in range(nmax + 1):
        top = n + 1 if kmax is None else min(kmax, n + 1)
        for k in range(1, top + 1):
            lhs = Polynomial([1, 1]) * poly_derivative(fam.q_poly(n), k) + poly_derivative(
                fam.q_poly(n), k - 1
            ).scale(n + k)
            c = Fraction((-1) ** n * factorial(2 * n + 1), factorial(n) * factorial(n - k + 1))
            yield {"n": n, "k": k}, lhs, Polynomial.monomial(n - k + 1, c)


def check_ode(nmax, kmax) -> Iterator[Check]:
    for n in range(nmax + 1):
        Q = fam.q_poly(n)
        lhs = (
            Polynomial([0, 1, 1]) * poly_derivative(Q, 2)
            + Polynomial([-n, 2]) * poly_derivative(Q, 1)
            - Q.scale(n * (n + 1))
        )
        yield {"n": n}, lhs, Polynomial()


def check_recurrence_k(nmax, kmax) -> Iterator[Check]:
    for k in range(kmax + 1):
        qb = lambda m: fam.q_deriv_poly(m + k, k)  # noqa: E731
        yield {"k": k, "part": "init0"}, qb(0), Fraction((-1) ** k * factorial(2 * k), factorial(k))
        yield (
            {"k": k, "part": "init1"},
            qb(1),
            Polynomial([1, -2 * (k + 1)]).scale(Fraction((-1) ** k * factorial(2 * k + 1), factorial(k + 1))),
        )
        for n in range(2, nmax + 1):
            c = fam.recurrence_coeffs(k, n)
            yield {"k": k, "n": n}, c.u * qb(n), c.v * qb(n - 1) + c.w * qb(n - 2)
            yield {"k": k, "n": n, "part": "w(beta)"}, c.w(Fraction(-(n + 2 * k), 2 * (n + k))), 0


def check_recurrence_0(nmax, kmax) -> Iterator[Check]:
    for n in range(2, nmax + 1):
        Q = fam.q_poly
        lhs = Polynomial([n, n]) * Q(n)
        rhs = -Polynomial([-n, 2 * (2 * n - 1), 2 * (2 * n - 1)]) * Q(n - 1) + Polynomial(
            [0, 2 * (2 * n - 1)]
        ) * Q(n - 2)
        yield {"n": n}, lhs, rhs
        # the k = 0 coefficients reduce to these after removing (2x+1) n (n-1)
        c = fam.recurrence_coeffs(0, n)
        common = Polynomial([1, 2]).scale(n * (n - 1))
        yield {"n": n, "part": "u/common"}, exact_div(c.u, common), Polynomial([n, n])
        yield {"n": n, "part": "v/common"}, exact_div(c.v, common), -Polynomial(
            [-n, 2 * (2 * n - 1), 2 * (2 * n - 1)]
        )
        yield {"n": n, "part": "w/common"}, exact_div(c.w, common), Polynomial([0, 2 * (2 * n - 1)])


def check_gould(nmax, kmax) -> Iterator[Check]:
    for n in range(nmax):
        lhs = Polynomial([1, 1]) * fam.q_poly(n + 1)
        rhs = fam.q_poly(n) + Polynomial([1, 2]).scale(comb(2 * n + 1, n + 1)) * Polynomial(
            [0, -1]
        ) ** (n + 1)
        yield {"n": n}, lhs, rhs


def check_gf_q(nmax, kmax) -> Iterator[Check]:
    N = nmax
    gf = q_generating(N)
    for n in range(N + 1):
        yield {"N": N, "n": n}, gf.coeff(n), fam.q_poly(n)
    # cleared denominators: numerator = denominator * sum Q_n t^n
    num, den = q_gf_parts(N)
    fam_series = TruncatedBiSeries([fam.q_poly(n) for n in range(N + 1)], N)
    prod = den * fam_series
    for n in range(N + 1):
        yield {"N": N, "n": n, "part": "cleared"}, prod.coeff(n), num.coeff(n)


def check_pell_n1(nmax, kmax) -> Iterator[Check]:
    P1, Q1 = fam.p_poly(1), fam.q_poly(1)
    for n in range(nmax + 1):
        y, z = fam.yz_pair(n)
        yield {"n": n}, P1 * y * y + Q1 * z * z, ONE


def check_yz_recurrence(nmax, kmax) -> Iterator[Check]:
    yield {"n": 0, "part": "Y0"}, fam.yz_pair(0)[0], X
    yield {"n": 0, "part": "Z0"}, fam.yz_pair(0)[1], Polynomial([1, 1])
    yield {"n": 1, "part": "Y1"}, fam.yz_pair(1)[0], Polynomial([-HALF, 1, 2])
    yield {"n": 1, "part": "Z1"}, fam.yz_pair(1)[1], Polynomial([HALF, 3, 2])
    a = Polynomial([1, 2])
    for n in range(1, nmax):
        (y0, z0), (y1, z1), (y2, z2) = fam.yz_pair(n - 1), fam.yz_pair(n), fam.yz_pair(n + 1)
        yield {"n": n, "part": "Y"}, y2, a * y1 - y0
        yield {"n": n, "part": "Z"}, z2, a * z1 - z0


def check_yz_closed_vs_pell(nmax, kmax) -> Iterator[Check]:
    for n in range(nmax + 1):
        (y, z), (y2, z2) = fam.yz_closed(n), fam.yz_pell(n)
        yield {"n": n, "part": "Y"}, y, y2
        yield {"n": n, "part": "Z"}, z, z2


def _cor32_constants(n: int) -> tuple[Fraction, Fraction]:
    r = n % 6
    if n % 3 == 0:
        y0 = Fraction(0)
        z0 = Fraction((-1) ** (n // 3))
    else:
        y0 = -HALF if r in (1, 2) else HALF
        z0 = -HALF if r in (2, 4) else HALF
    return y0, z0


def check_cor32(nmax, kmax) -> Iterator[Check]:
    from .polycore import is_integer_poly

    for n in range(nmax + 1):
        y, z = fam.yz_pair(n)
        y0, z0 = _cor32_constants(n)
        yield {"n": n, "at": "Y(0)"}, y(0), y0
        yield {"n": n, "at": "Z(0)"}, z(0), z0
        shift = 0 if n % 3 == 0 else HALF
        yield {"n": n, "part": "Y integral"}, is_integer_poly(y + shift), True
        yield {"n": n, "part": "Z integral"}, is_integer_poly(z + shift), True


def check_factor_3n(nmax, kmax) -> Iterator[Check]:
    for n in range(1, nmax + 1):
        y, z = fam.yz_pair(3 * n)
        (ya, yb), (za, zb) = fam.yz_factors(n)
        yield {"n": n, "part": "Y"}, y, ya * yb
        yield {"n": n, "part": "Z"}, z, za * zb
        yield {"n": n, "part": "nontrivial"}, min(ya.degree, yb.degree, za.degree, zb.degree) >= 1, True


def check_cheb_product(nmax, kmax) -> Iterator[Check]:
    T = lambda m: fam.chebyshev("T", m)  # noqa: E731
    U = lambda m: fam.chebyshev("U", m)  # noqa: E731
    for j in range(2, nmax + 1):
        for k in range(0, j - 1):
            yield {"j": j, "k": k}, (T(j) * U(k)).scale(2), U(j + k) - U(j - k - 2)
    for n in range(nmax + 1):
        # the Pell identity defining the Chebyshev pair
        yield {"n": n, "part": "pell"}, T(n) * T(n) - Polynomial([-1, 0, 1]) * U(n - 1) * U(n - 1), ONE


BEZOUT_CHAIN_CAP = 7


def check_bezout_chain(nmax, kmax) -> Iterator[Check]:
    Y, Z = X, Polynomial([1, 1])
    p0, q0 = Polynomial([-1]), ONE
    for n in range(1, nmax + 1):
        p, q = fam.bezout_chain(n, p0, q0, Y, Z)
        yield {"n": n}, p * Y ** (n + 1) + q * Z ** (n + 1), ONE
        yield {"n": n, "part": "deg p"}, p.degree, 2 ** (n + 1) - n - 2
        yield {"n": n, "part": "deg q"}, q.degree, 2 ** (n + 1) - n - 2
        if n == 1:
            yield {"n": 1, "part": "p1"}, p, fam.p_poly(1)
            yield {"n": 1, "part": "q1"}, q, fam.q_poly(1)
        if n == 2:
            yield {"n": 2, "part": "p2"}, p, Polynomial([-6, 5, 30, 28, 8])
            yield {"n": 2, "part": "q2"}, q, Polynomial([1, -3, 6, -4, -8])


def check_thue_family(nmax, kmax) -> Iterator[Check]:
    for m in range(2, nmax + 2):
        for r in range(1, (nmax + 1) // m + 1):
            n = r * m - 1
            P, Q = fam.p_poly(n), fam.q_poly(n)
            Y, Z = X ** r, Polynomial([1, 1]) ** r
            for zeta in fam.rational_roots_of_unity(m):
                for xi in fam.rational_roots_of_unity(m):
                    lhs = P * Y.scale(zeta) ** m + Q * Z.scale(xi) ** m
                    yield {"m": m, "r": r, "n": n, "zeta": zeta, "xi": xi}, lhs, ONE


def check_disc_closed(nmax, kmax) -> Iterator[Check]:
    for n in range(1, nmax + 1):
        for k in _k_range(n, kmax, n - 1):
            d = discriminant(fam.q_deriv_poly(n, k))
            yield {"n": n, "k": k}, d, disc_closed_form(k, n)
            r = sylvester_resultant(fam.q_deriv_poly(n, k), fam.q_deriv_poly(n, k + 1))
            yield {"n": n, "k": k, "part": "R(Q^(k),Q^(k+1))"}, r, consecutive_deriv_resultant(k, n)
        yield {"n": n, "k": 0, "part": "k=0 form"}, discriminant(fam.q_poly(n)), disc_q_closed(n)


def check_disc_pq_equal(nmax, kmax) -> Iterator[Check]:
    for n in range(1, nmax + 1):
        for k in _k_range(n, kmax, n - 1):
            yield {"n": n, "k": k}, discriminant(fam.p_deriv_poly(n, k)), discriminant(
                fam.q_deriv_poly(n, k)
            )


def check_square_classify(nmax, kmax) -> Iterator[Check]:
    for n in range(1, nmax + 1):
        for k in range(n):
            c = classify_disc_square(k, n)
            yield {"n": n, "k": k}, c.is_square, direct_square_check(k, n)
            if c.is_square:
                yield {"n": n, "k": k, "part": "root"}, Fraction(c.root) ** 2, disc_closed_form(k, n)


def check_resultant_consecutive(nmax, kmax) -> Iterator[Check]:
    for n in range(1, nmax + 1):
        lhs = sylvester_resultant(fam.q_poly(n), fam.q_poly(n - 1))
        yield {"n": n}, lhs, 2 ** n * Fraction(comb(2 * n, n)) ** (n - 2)


def check_resultant_delta(nmax, kmax) -> Iterator[Check]:
    for k in range(kmax + 1):
        for n in range(1, nmax + 1):
            d = sylvester_resultant(fam.q_deriv_poly(n + k, k), fam.q_deriv_poly(n - 1 + k, k))
            yield {"k": k, "n": n}, d, delta_closed_form(k, n)
            yield {"k": k, "n": n, "part": "sign"}, (-1) ** k * d > 0, True


def resultant_pq_evidence(nmax: int) -> tuple[list, int | None, int | None]:
    """Sylvester R(P_n, Q_n) next to both candidate closed forms.

    Returns rows (n, sylvester, short, full) and the first n at which the
    short form (exponent n+1) and the full form (exponent 2n+1) fail.
    """
    rows, first_printed, first_full = [], None, None
    for n in range(nmax + 1):
        s = sylvester_resultant(fam.p_poly(n), fam.q_poly(n))
        printed = comb(2 * n, n) ** (n + 1)
        full = comb(2 * n, n) ** (2 * n + 1)
        rows.append((n, s, printed, full))
        if s != printed and first_printed is None:
            first_printed = n
        if s != full and first_full is None:
            first_full = n
    return rows, first_printed, first_full


def check_resultant_pq(nmax, kmax, notes=None) -> Iterator[Check]:
    rows, first_printed, _ = resultant_pq_evidence(nmax)
    if notes is not None:
        if first_printed is None:
            notes.append(f"printed exponent n+1 matches Sylvester for all n <= {nmax}")
        else:
            n, s, printed, _ = rows[first_printed]
            notes.append(
                f"printed exponent n+1 fails at n={n}: Sylvester {s} vs C(2n,n)^(n+1) = {printed}"
            )
        notes.append("pass criterion: Sylvester R(P_n,Q_n) = C(2n,n)^(2n+1)")
    for n, s, _, full in rows:
        yield {"n": n, "form": "C(2n,n)^(2n+1)"}, s, full


def check_hankel_bridge(nmax, kmax) -> Iterator[Check]:
    for n in range(1, nmax + 1):
        lhs = fam.w_poly(n).scale(2 * (n + 1))
        rhs = (fam.v_poly(n) * Polynomial([1, -2]).shift(n)).scale(comb(2 * n, n))
        yield {"n": n}, lhs, rhs
    for n in range(3, nmax + 1):
        V = fam.v_poly
        lhs = Polynomial([-n, n]) * V(n)
        rhs = Polynomial([-n - 1, -2 * (2 * n - 3), 2 * (2 * n - 3)]) * V(n - 1) + Polynomial(
            [0, 2 * (2 * n - 1)]
        ) * V(n - 2)
        yield {"n": n, "part": "recurrence"}, lhs, rhs
    yield {"n": 1, "part": "V1"}, fam.v_poly(1), Polynomial([2])
    if nmax >= 2:
        yield {"n": 2, "part": "V2"}, fam.v_poly(2), Polynomial([3, 2])


def check_v_closed(nmax, kmax) -> Iterator[Check]:
    for n in range(1, nmax + 1):
        yield {"n": n, "via": "hankel"}, fam.v_poly(n), fam.v_poly_hankel(n)
        yield {"n": n, "via": "recurrence"}, fam.v_poly(n), fam.v_poly_recurrence(n)


def check_v_values(nmax, kmax) -> Iterator[Check]:
    from .polycore import is_integer_poly

    for n in range(1, nmax + 1):
        V = fam.v_poly_recurrence(n)
        yield {"n": n, "at": "V(0)"}, V(0), n + 1
        yield {"n": n, "at": "V(1/2)"}, V(HALF), 2 ** n
        yield {"n": n, "at": "V(1)"}, V(1), fam.catalan(n + 1)
        yield {"n": n, "part": "positive integer coeffs"}, is_integer_poly(V) and all(
            c > 0 for c in V.coeffs
        ), True
        yield {"n": n, "part": "a_k/(n+1-k) integral"}, all(
            (V.coeff(k) / (n + 1 - k)).denominator == 1 for k in range(n)
        ), True


def _strictly_unimodal(c) -> bool:
    m = len(c)
    if m <= 1:
        return True
    if m == 2:
        return True
    rising = all(c[i] < c[i + 1] for i in range(m - 2))
    return rising and c[m - 2] > c[m - 1]


def check_v_unimodal(nmax, kmax) -> Iterator[Check]:
    for n in range(1, nmax + 1):
        yield {"n": n}, _strictly_unimodal(fam.v_poly(n).coeffs), True


def check_gf_v(nmax, kmax) -> Iterator[Check]:
    N = nmax
    gf = v_generating(N)
    yield {"N": N, "n": 0}, gf.coeff(0), Polynomial()
    for n in range(1, N + 1):
        yield {"N": N, "n": n}, gf.coeff(n), fam.v_poly(n)
    num, den = v_gf_parts(N)
    fam_series = TruncatedBiSeries([Polynomial()] + [fam.v_poly(n) for n in range(1, N + 1)], N)
    prod = den * fam_series
    for n in range(N + 1):
        yield {"N": N, "n": n, "part": "cleared"}, prod.coeff(n), num.coeff(n)


def pde_sides(N: int, corrected: bool = False) -> tuple[TruncatedBiSeries, TruncatedBiSeries]:
    """Both sides of the V/Q partial-differential bridge, known through t^(N-2).

    ``corrected`` replaces the terms 2t R_tx and 2x R_x by -2xt R_tx and
    -2x R_x, the combination that actually holds.
    """
    V = v_generating(N)
    R = q_generating(N).map_x(-1, 0)
    Rx = R.partial("x")
    Rt = R.partial("t")
    Rxx, Rtx, Rtt = Rx.partial("x"), Rt.partial("x"), Rt.partial("t")
    M = N - 2
    cut = lambda s: s.truncate(M)  # noqa: E731
    if corrected:
        tx_term = Rtx.mul_t(1).scale(Polynomial([0, -2]))
        x_term = Rx.scale(Polynomial([0, -2]))
    else:
        tx_term = Rtx.mul_t(1).scale(2)
        x_term = Rx.scale(Polynomial([0, 2]))
    rhs = (
        cut(Rxx.scale(Polynomial([0, 0, 1])))
        + cut(tx_term)
        + cut(Rtt.mul_t(2))
        + cut(x_term)
        + cut(Rt.mul_t(1).scale(4))
        + cut(R.scale(2))
    )
    return cut(V.partial("t")), rhs


def check_pde_bridge(nmax, kmax, notes=None) -> Iterator[Check]:
    N = nmax
    lhs, rhs = pde_sides(N)
    if notes is not None:
        lc, rc = pde_sides(N, corrected=True)
        if lc == rc:
            notes.append(
                "as printed the identity fails; with -2xt*R_tx and -2x*R_x in place of "
                f"+2t*R_tx and +2x*R_x it holds through t^{N - 2}"
            )
    for n in range(N - 1):
        yield {"N": N, "n": n}, lhs.coeff(n), rhs.coeff(n)


def check_pde_bridge_corrected(nmax, kmax) -> Iterator[Check]:
    N = nmax
    lhs, rhs = pde_sides(N, corrected=True)
    for n in range(N - 1):
        yield {"N": N, "n": n}, lhs.coeff(n), rhs.coeff(n)


def check_w_coeffs(nmax, kmax) -> Iterator[Check]:
    for n in range(1, nmax + 1):
        W = fam.w_poly(n)
        C = fam.catalan
        yield {"n": n, "part": "low zeros"}, all(W.coeff(j) == 0 for j in range(n)), True
        yield {"n": n, "part": "w_nn"}, W.coeff(n), Fraction(comb(2 * n, n), 2)
        yield {"n": n, "part": "w_2n"}, W.coeff(2 * n), -2 * C(n - 1) * C(n)
        if n >= 2:
            yield {"n": n, "part": "w_2n-1"}, W.coeff(2 * n - 1), -2 * C(n - 1) * C(n)
        yield {"n": n, "part": "W(1/2)"}, W(HALF), 0
        for i in range(n):
            lhs = sum(W.coeff(n + j) * Fraction(2) ** (i - j) for j in range(i + 1, n + 1))
            rhs = -Fraction((n - i) * (n - i + 1), 2 * n * (n + 1)) * comb(2 * n, n) * comb(n - 1 + i, i)
            yield {"n": n, "i": i}, lhs, rhs


def check_eisenstein(nmax, kmax) -> Iterator[Check]:
    for n in range(1, nmax + 1):
        for k in range(n):
            if is_prime(n + k + 1):
                p = n + k + 1
                f = fam.q_deriv_poly(n, k)
                yield {"n": n, "k": k, "p": p, "form": "reversed Q_n^(k)"}, eisenstein_check(f, p, reverse=True), True
        if is_prime(2 * n + 1):
            p = 2 * n + 1
            for k in range(n):
                f = poly_affine_sub(fam.q_deriv_poly(n, k), -1, -1)
                yield {"n": n, "k": k, "p": p, "form": "Q_n^(k)(-x-1)"}, eisenstein_check(f, p), True
            if n < 2:
                continue  # V_1 = 2 is a unit; the criterion needs positive degree
            g = poly_affine_sub(fam.v_poly(n), 1, 1)
            yield {"n": n, "p": p, "form": "V_n(x+1)"}, eisenstein_check(g, p), True


LATTICE_CAP = 8


def check_lattice_paths(nmax, kmax) -> Iterator[Check]:
    for n in range(nmax + 1):
        q = _q_neg(n)
        for i in range(n + 1):
            yield {"n": n, "i": i}, abs(q.coeff(i)), count_lattice_paths(n, i)


# ---- registry -----------------------------------------------------------------

@dataclass(frozen=True)
class Entry:
    key: str
    check: Callable
    nmin: int = 0
    default_nmax: int = 12
    cap: int | None = None  # hard ceiling for super-exponential checks
    uses_k: bool = False
    default_kmax: int | None = None  # None: every admissible k
    notes: bool = False  # checker appends evidence notes


REGISTRY: dict[str, Entry] = {
    e.key: e
    for e in [
        Entry("defining", check_defining),
        Entry("bezout-oracle", check_bezout_oracle),
        Entry("symmetry", check_symmetry),
        Entry("special-values", check_special_values, uses_k=True),
        Entry("cn-identity", check_cn_identity),
        Entry("deriv-chain", check_deriv_chain, uses_k=True),
        Entry("ode", check_ode),
        Entry("recurrence-k", check_recurrence_k, nmin=2, uses_k=True, default_kmax=4),
        Entry("recurrence-0", check_recurrence_0, nmin=2),
        Entry("gould", check_gould, nmin=1),
        Entry("gf-q", check_gf_q),
        Entry("pell-n1", check_pell_n1),
        Entry("yz-recurrence", check_yz_recurrence, nmin=1),
        Entry("yz-closed-vs-pell", check_yz_closed_vs_pell),
        Entry("cor32", check_cor32),
        Entry("factor-3n", check_factor_3n, nmin=1, default_nmax=10),
        Entry("cheb-product", check_cheb_product, nmin=2),
        Entry("bezout-chain", check_bezout_chain, nmin=1, default_nmax=5, cap=BEZOUT_CHAIN_CAP),
        Entry("thue-family", check_thue_family, nmin=1, default_nmax=11),
        Entry("disc-closed", check_disc_closed, nmin=1, uses_k=True),
        Entry("disc-pq-equal", check_disc_pq_equal, nmin=1, uses_k=True),
        Entry("square-classify", check_square_classify, nmin=1, default_nmax=40),
        Entry("resultant-consecutive", check_resultant_consecutive, nmin=1),
        Entry("resultant-delta", check_resultant_delta, nmin=1, default_nmax=10, uses_k=True, default_kmax=4),
        Entry("resultant-pq", check_resultant_pq, nmin=1, default_nmax=8, notes=True),
        Entry("hankel-bridge", check_hankel_bridge, nmin=1, default_nmax=7),
        Entry("v-closed", check_v_closed, nmin=1),
        Entry("v-values", check_v_values, nmin=1),
        Entry("v-unimodal", check_v_unimodal, nmin=1, default_nmax=200),
        Entry("gf-v", check_gf_v, nmin=1, default_nmax=20),
        Entry("pde-bridge", check_pde_bridge, nmin=2, default_nmax=20, notes=True),
        Entry("pde-bridge-corrected", check_pde_bridge_corrected, nmin=2, default_nmax=20),
        Entry("w-coeffs", check_w_coeffs, nmin=1, default_nmax=20),
        Entry("eisenstein", check_eisenstein, nmin=1, default_nmax=99),
        Entry("lattice-paths", check_lattice_paths, default_nmax=8, cap=LATTICE_CAP),
    ]
}

IDENTITY_IDS = tuple(sorted(REGISTRY))


def effective_range(entry: Entry, nmax: int | None, kmax: int | None) -> tuple[int, int | None]:
    n = entry.default_nmax if nmax is None else nmax
    if entry.cap is not None:
        n = min(n, entry.cap)
    if n < entry.nmin:
        raise ValueError(f"{entry.key} needs nmax >= {entry.nmin}, got {n}")
    if not entry.uses_k:
        return n, None
    return n, entry.default_kmax if kmax is None else kmax


def verify(identity_id: str, nmax: int | None = None, kmax: int | None = None) -> VerificationReport:
    """Run one registry checker exactly over its range, stopping at the first mismatch."""
    try:
        entry = REGISTRY[identity_id]
    except KeyError:
        raise UnknownIdentity(identity_id) from None
    n, k = effective_range(entry, nmax, kmax)
    notes: list[str] = []
    start = time.perf_counter()
    checks = 0
    counter = None
    gen = entry.check(n, k, notes) if entry.notes else entry.check(n, k)
    for params, lhs, rhs in gen:
        checks += 1
        if lhs != rhs:
            counter = Counterexample(
                {key: _param(v) for key, v in params.items()},
                _as_poly(lhs).to_strings(),
                _as_poly(rhs).to_strings(),
            )
            break
    elapsed = time.perf_counter() - start
    if entry.cap is not None and nmax is not None and nmax > entry.cap:
        notes.append(f"range capped at nmax={entry.cap}")
    return VerificationReport(
        identity_id, {"nmax": n, "kmax": k}, counter is None, counter, elapsed, checks, notes
    )


def _param(v):
    return v if isinstance(v, (int, str)) else str(v)


def _run(args):
    return verify(*args)


def verify_all(nmax: int | None = None, kmax: int | None = None, jobs: int = 1, ids=None) -> list[VerificationReport]:
    """Every registry entry (or the selected ids), in key order."""
    if nmax is not None and nmax < 2:
        raise ValueError("verify_all needs nmax >= 2")
    keys = sorted(ids) if ids is not None else list(IDENTITY_IDS)
    for key in keys:
        if key not in REGISTRY:
            raise UnknownIdentity(key)
    tasks = [(key, nmax, kmax) for key in keys]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run, tasks))
    return [_run(t) for t in tasks]
