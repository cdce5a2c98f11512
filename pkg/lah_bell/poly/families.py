"""
Factorial-basis conversions and the Bell-type polynomial families.

Basis conversion is back-substitution on a triangular system: every basis
element (x)_k (or (x)_{k,λ}) is monic of degree k, so the top coefficient of
the remainder is the next basis coefficient.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import List, Sequence

from ..exact import degenerate_factorial_poly, factorial_poly
from ..tables import r_lah, stirling2
from .dense import BiPoly, Poly


def falling_basis_coeffs(p: Poly) -> List[Fraction]:
    """c_0..c_d with p = Σ c_k·(x)_k."""
    remainder = p
    coeffs = [Fraction(0)] * (p.degree + 1)
    for k in range(p.degree, -1, -1):
        c = remainder.coefficient(k)
        coeffs[k] = c
        if c:
            remainder = remainder - factorial_poly(k, "falling", var=p.var) * c
    return coeffs


def reconstruct_from_falling(coeffs: Sequence, var: str = "x") -> Poly:
    result = Poly.zero(var)
    for k, c in enumerate(coeffs):
        result = result + factorial_poly(k, "falling", var=var) * Fraction(c)
    return result


def degenerate_falling_basis_coeffs(p: BiPoly) -> List[Poly]:
    """Coefficients in ℚ[λ] of p in the basis (x)_{k,λ}."""
    remainder = p
    coeffs = [Poly.zero(p.inner)] * (p.degree + 1)
    for k in range(p.degree, -1, -1):
        c = remainder.coefficient(k)
        coeffs[k] = c
        if not c.is_zero():
            remainder = remainder - degenerate_factorial_poly(k, "falling") * c
    return coeffs


def reconstruct_from_degenerate_falling(coeffs: Sequence[Poly]) -> BiPoly:
    result = BiPoly.zero()
    for k, c in enumerate(coeffs):
        result = result + degenerate_factorial_poly(k, "falling") * c
    return result


@lru_cache(maxsize=None)
def r_lah_bell_poly(n: int, r: int) -> Poly:
    """LB_n^(r)(x) = Σ_k L^r(n,k)·x^k."""
    return Poly([r_lah(n, k, r) for k in range(n + 1)])


def lah_bell_poly(n: int) -> Poly:
    return r_lah_bell_poly(n, 0)


@lru_cache(maxsize=None)
def bell_poly(n: int) -> Poly:
    """Touchard polynomial φ_n(x) = Σ_k {n k}·x^k."""
    return Poly([stirling2(n, k) for k in range(n + 1)])


@lru_cache(maxsize=None)
def lambda_r_lah(n: int, k: int, r: int) -> Poly:
    """
    L^r_λ(n,k) as a polynomial in λ, from (n!/k!)·binom(r+λ(n-1), n-k)_λ.

    The degenerate falling factorial of r+λ(n-1) has factors r+λ(n-1-i),
    i < n-k, and n!/(k!(n-k)!) is an ordinary binomial.
    """
    if min(n, k, r) < 0:
        raise ValueError(f"indices must be >= 0, got ({n}, {k}, {r})")
    if k > n:
        return Poly.zero("l")
    result = Poly.constant(comb(n, k), "l")
    for i in range(n - k):
        result = result * Poly((r, n - 1 - i), "l")
    return result


@lru_cache(maxsize=None)
def lambda_r_lah_bell_poly(n: int, r: int) -> BiPoly:
    """LB^(r)_{n,λ}(x) = Σ_k L^r_λ(n,k)·x^k."""
    return BiPoly(tuple(lambda_r_lah(n, k, r) for k in range(n + 1)))


def clear_caches() -> None:
    """Drop memoized families (needed after tables.inject_fault toggles)."""
    for fn in (r_lah_bell_poly, bell_poly, lambda_r_lah, lambda_r_lah_bell_poly):
        fn.cache_clear()
