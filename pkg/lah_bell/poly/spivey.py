"""
Spivey-type recurrences, defining relations and Vandermonde identities,
all verified as exact polynomial identities.
"""

import logging
from fractions import Fraction
from math import comb

from ..exact import degenerate_factorial_poly, factorial, factorial_poly, rising_factorial
from ..report import CheckReport
from ..tables import lah, r_lah
from .dense import BiPoly, Poly
from .families import (
    degenerate_falling_basis_coeffs,
    falling_basis_coeffs,
    lambda_r_lah,
    lambda_r_lah_bell_poly,
    r_lah_bell_poly,
)

logger = logging.getLogger(__name__)

VARIANTS = ("classic", "r_shift", "lambda")


def spivey_rhs(n: int, m: int, r: int) -> Poly:
    """Σ_k Σ_l C(n,l)·L^r(m,k)·⟨m+k⟩_{n-l}·x^k·LB_l^(r)(x)."""
    total = Poly.zero()
    for k in range(m + 1):
        weight = r_lah(m, k, r)
        if not weight:
            continue
        x_power = Poly.monomial(k)
        for l in range(n + 1):
            c = comb(n, l) * weight * rising_factorial(m + k, n - l)
            if c:
                total = total + x_power * r_lah_bell_poly(l, r) * c
    return total


def spivey_rhs_lambda(n: int, m: int, r: int) -> BiPoly:
    """
    Σ_j Σ_k C(n,k)·L^r_λ(m,j)·⟨m+j⟩_{n-k}·t^j·λ^{n-k}·LB^(r)_{k,λ}(t).

    ⟨m+j⟩_{n-k} is the ordinary rising factorial of an integer; λ enters only
    through λ^{n-k}, L^r_λ and LB_λ. The outer variable is named x like the
    left-hand side it is compared with.
    """
    total = BiPoly.zero()
    for j in range(m + 1):
        weight = lambda_r_lah(m, j, r)
        if weight.is_zero():
            continue
        t_power = BiPoly.outer_monomial(j)
        for k in range(n + 1):
            c = comb(n, k) * rising_factorial(m + j, n - k)
            if not c:
                continue
            lam_power = Poly.monomial(n - k, c, "l")
            total = total + t_power * lambda_r_lah_bell_poly(k, r) * (weight * lam_power)
    return total


def spivey_check(n: int, m: int, r: int = 0) -> CheckReport:
    """LB^(r)_{n+m}(x) against the double sum, plus the x = 1 corollary."""
    report = CheckReport("spivey" if r == 0 else "spivey_r", {"n": n, "m": m, "r": r})
    lhs = r_lah_bell_poly(n + m, r)
    rhs = spivey_rhs(n, m, r)
    report.expect_equal(lhs, rhs, identity="polynomial")
    report.expect_equal(lhs.evaluate(1), rhs.evaluate(1), identity="x=1")
    if not report.passed:
        logger.warning(f"Spivey identity failed at n={n} m={m} r={r}")
    return report


def spivey_lambda_check(n: int, m: int, r: int) -> CheckReport:
    """LB^(r)_{n+m,λ}(t) against the double sum as bivariate polynomials, plus t = 1."""
    report = CheckReport("spivey_lambda", {"n": n, "m": m, "r": r})
    lhs = lambda_r_lah_bell_poly(n + m, r)
    rhs = spivey_rhs_lambda(n, m, r)
    report.expect_equal(lhs, rhs, identity="bivariate")
    report.expect_equal(lhs.substitute_outer(1), rhs.substitute_outer(1), identity="t=1")
    if not report.passed:
        logger.warning(f"λ-Spivey identity failed at n={n} m={m} r={r}")
    return report


def defining_relation_check(n: int, r: int, variant: str) -> CheckReport:
    """
    Expand the rising side, convert to the falling basis, compare with the closed forms.

    classic:  ⟨x⟩_n       = Σ L(n,k)(x)_k            (r ignored)
    r_shift:  ⟨x+r⟩_n     = Σ L^r(n,k)(x)_k
    lambda:   ⟨x+r⟩_{n,λ} = Σ L^r_λ(n,k)(x)_{k,λ}    (λ formal)
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant: {variant}")
    report = CheckReport("defining_relation", {"n": n, "r": r, "variant": variant})
    if variant == "lambda":
        coeffs = degenerate_falling_basis_coeffs(degenerate_factorial_poly(n, "rising", shift=r))
        expected = [lambda_r_lah(n, k, r) for k in range(n + 1)]
        coeffs = coeffs + [Poly.zero("l")] * (n + 1 - len(coeffs))
        report.details["coefficients"] = [str(c) for c in coeffs]
    else:
        shift = r if variant == "r_shift" else 0
        coeffs = falling_basis_coeffs(factorial_poly(n, "rising", shift=shift))
        if variant == "classic":
            expected = [Fraction(lah(n, k)) for k in range(n + 1)]
        else:
            expected = [Fraction(r_lah(n, k, r)) for k in range(n + 1)]
        coeffs = coeffs + [Fraction(0)] * (n + 1 - len(coeffs))
        report.details["coefficients"] = coeffs
    for k in range(n + 1):
        report.expect_equal(coeffs[k], expected[k], k=k)
    return report


def _xy_linear_product(offsets) -> BiPoly:
    """∏ (x + y + c) over c in offsets, as an element of ℚ[y][x]."""
    result = BiPoly.constant(1, "x", "y")
    for c in offsets:
        result = result * BiPoly.linear(Poly((c, 1), "y"), 1, "x", "y")
    return result


def vandermonde_check(n: int) -> CheckReport:
    """
    ⟨x+y⟩_n = Σ C(n,k)⟨x⟩_k⟨y⟩_{n-k} and
    C(x+y+n-1, n) = Σ C(x+k-1, k)·C(y+n-k-1, n-k), both in ℚ[x, y].
    """
    report = CheckReport("vandermonde", {"n": n})
    lhs = _xy_linear_product(range(n))
    rhs = BiPoly.zero("x", "y")
    for k in range(n + 1):
        rhs = rhs + (
            BiPoly.from_outer(factorial_poly(k, "rising"), "y")
            * factorial_poly(n - k, "rising", var="y")
            * comb(n, k)
        )
    report.expect_equal(lhs, rhs, identity="rising")

    # binomial side built from falling factorials: C(z+k-1, k) = (z+k-1)_k / k!
    lhs = _xy_linear_product(n - 1 - i for i in range(n)) / factorial(n)
    rhs = BiPoly.zero("x", "y")
    for k in range(n + 1):
        left = BiPoly.from_outer(factorial_poly(k, "falling", shift=k - 1), "y") / factorial(k)
        right = factorial_poly(n - k, "falling", shift=n - k - 1, var="y") / factorial(n - k)
        rhs = rhs + left * right
    report.expect_equal(lhs, rhs, identity="binomial")
    return report
