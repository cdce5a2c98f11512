"""
Dobinski-type series evaluated at high precision with a certified truncation bound.

    LB^(r)_n(x)      = e^{-x}   Σ_k ⟨k+r⟩_n / k! · x^k
    LB^(r)_{n,λ}(x)  = e^{-x/λ} Σ_k ⟨λk+r⟩_{n,λ} / k! · (x/λ)^k
    φ_n(x)           = e^{-x}   Σ_k k^n / k! · x^k

The partial sum is accumulated exactly; only the final multiplication by the
exponential happens in floating point, at the working precision. All terms are
positive for x > 0 and λ > 0, so once the term ratio is at most 1/2 the tail
after index K is below term_K.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

import mpmath

from .config import DOBINSKI_DEFAULT_EPS, DOBINSKI_PRECISION_BITS, MIN_PRECISION_BITS
from .errors import DomainError
from .exact import degenerate_rising, factorial, parse_rational, rising_factorial
from .poly.families import bell_poly, lambda_r_lah_bell_poly, r_lah_bell_poly
from .report import CheckReport

logger = logging.getLogger(__name__)

HPFloat = mpmath.mpf

# guard against a series that never meets the stopping rule
MAX_TERMS_FACTOR = 50


@dataclass
class DobinskiResult:
    approx: HPFloat
    tail_bound: HPFloat
    terms_used: int
    exact_reference: Fraction
    precision_bits: int

    @property
    def error(self) -> HPFloat:
        """|approx - exact_reference| at the working precision."""
        with mpmath.workprec(self.precision_bits):
            return abs(self.approx - to_hpfloat(self.exact_reference))


def to_hpfloat(value: Fraction) -> HPFloat:
    value = Fraction(value)
    return mpmath.mpf(value.numerator) / value.denominator


def _scaled(x: Fraction, r: int, lam: Optional[Fraction]):
    """(x', r') = (x/λ, r/λ), or (x, r) for the classical series."""
    if lam is None:
        return x, Fraction(r)
    return x / lam, Fraction(r) / lam


def _check_args(n: int, r: int, x: Fraction, lam: Optional[Fraction]) -> None:
    if n < 0 or r < 0:
        raise ValueError(f"n and r must be >= 0, got n={n} r={r}")
    if x <= 0:
        raise DomainError(f"x must be positive, got {x}")
    if lam is not None and lam <= 0:
        raise DomainError(f"λ must be positive in numeric mode, got {lam}")


def _precision(precision_bits: Optional[int]) -> int:
    bits = DOBINSKI_PRECISION_BITS if precision_bits is None else precision_bits
    if bits < MIN_PRECISION_BITS:
        raise ValueError(f"precision must be >= {MIN_PRECISION_BITS} bits, got {bits}")
    return bits


def dobinski_term(n: int, r: int, x: Fraction, lam: Optional[Fraction], k: int) -> Fraction:
    if lam is None:
        return rising_factorial(k + r, n) * x**k / factorial(k)
    return degenerate_rising(lam * k + r, n, lam) * (x / lam) ** k / factorial(k)


def term_ratio_bound(n: int, r: int, x, lam, k: int) -> Fraction:
    """
    Upper bound on term_{k+1}/term_k, decreasing to 0 in k (k >= 1).

    ⟨λk+r⟩_{n,λ} = λ^n·⟨k+r/λ⟩_n, so the ratio is x'/(k+1)·(k+n+r')/(k+r')
    with x' = x/λ and r' = r/λ; it is attained exactly.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    x = parse_rational(x)
    lam = None if lam is None else parse_rational(lam)
    xs, rs = _scaled(x, r, lam)
    return xs * (k + n + rs) / ((k + 1) * (k + rs))


def bell_term_ratio_bound(n: int, x, k: int) -> Fraction:
    """x/(k+1)·((k+1)/k)^n for the classical Dobinski series, k >= 1."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    x = parse_rational(x)
    return x / (k + 1) * Fraction(k + 1, k) ** n


def _certified_sum(
    term: Callable[[int], Fraction],
    ratio: Callable[[int], Fraction],
    start: int,
    exponent: Fraction,
    eps: HPFloat,
    max_terms: int,
):
    """Sum terms until k >= start, term_k < eps/4 and ratio(k) <= 1/2."""
    partial = Fraction(0)
    k = 0
    while True:
        value = term(k)
        partial += value
        if k >= max(start, 1) and to_hpfloat(value) < eps / 4 and ratio(k) <= Fraction(1, 2):
            break
        k += 1
        if k > max_terms:
            raise DomainError(f"series did not settle within {max_terms} terms")
    approx = mpmath.exp(-to_hpfloat(exponent)) * to_hpfloat(partial)
    return approx, 2 * to_hpfloat(value), k + 1


def dobinski_eval(
    n: int,
    r: int,
    x,
    lam=None,
    eps=None,
    precision_bits: Optional[int] = None,
) -> DobinskiResult:
    """Truncated Dobinski series for LB^(r)_n(x), or LB^(r)_{n,λ}(x) when λ is given."""
    x = parse_rational(x)
    lam = None if lam is None else parse_rational(lam)
    _check_args(n, r, x, lam)
    bits = _precision(precision_bits)
    with mpmath.workprec(bits):
        eps = mpmath.mpf(DOBINSKI_DEFAULT_EPS if eps is None else eps)
        if eps <= 0:
            raise ValueError(f"eps must be positive, got {eps}")
        xs, _ = _scaled(x, r, lam)
        reach = x / min(lam, 1) if lam is not None else x
        start = math.ceil(2 * (reach + n + r)) + 2
        approx, tail, used = _certified_sum(
            lambda k: dobinski_term(n, r, x, lam, k),
            lambda k: term_ratio_bound(n, r, x, lam, k),
            start,
            xs,
            eps,
            MAX_TERMS_FACTOR * (math.ceil(reach) + n + r + 10),
        )
    if lam is None:
        exact = r_lah_bell_poly(n, r).evaluate(x)
    else:
        exact = lambda_r_lah_bell_poly(n, r).evaluate(x, lam)
    logger.debug(f"Dobinski n={n} r={r} x={x} λ={lam}: {used} terms")
    return DobinskiResult(approx, tail, used, Fraction(exact), bits)


def bell_dobinski_eval(n: int, x, eps=None, precision_bits: Optional[int] = None) -> DobinskiResult:
    """φ_n(x) = e^{-x} Σ k^n x^k / k!, with 0^0 = 1."""
    x = parse_rational(x)
    _check_args(n, 0, x, None)
    bits = _precision(precision_bits)
    with mpmath.workprec(bits):
        eps = mpmath.mpf(DOBINSKI_DEFAULT_EPS if eps is None else eps)
        if eps <= 0:
            raise ValueError(f"eps must be positive, got {eps}")
        start = math.ceil(4 * (x + n)) + 2
        approx, tail, used = _certified_sum(
            lambda k: Fraction(k**n) * x**k / factorial(k),
            lambda k: bell_term_ratio_bound(n, x, k),
            start,
            x,
            eps,
            MAX_TERMS_FACTOR * (math.ceil(x) + n + 10),
        )
    return DobinskiResult(approx, tail, used, bell_poly(n).evaluate(x), bits)


def _record_result(report: CheckReport, result: DobinskiResult, eps) -> None:
    with mpmath.workprec(result.precision_bits):
        allowance = mpmath.mpf(2) ** (-result.precision_bits // 2)
        report.record(result.error <= result.tail_bound + allowance, identity="within_bound")
        report.record(result.tail_bound < mpmath.mpf(eps), identity="tail_below_eps")


def dobinski_check(n: int, r: int, x, lam=None, eps=None) -> CheckReport:
    """Series value within its tail bound of the exact polynomial value; the ratio bound holds."""
    eps = DOBINSKI_DEFAULT_EPS if eps is None else eps
    report = CheckReport("dobinski", {"n": n, "r": r, "x": str(x), "lambda": None if lam is None else str(lam)})
    result = dobinski_eval(n, r, x, lam, eps)
    _record_result(report, result, eps)
    x = parse_rational(x)
    lam = None if lam is None else parse_rational(lam)
    reach = x / min(lam, 1) if lam is not None else x
    report.record(
        result.terms_used <= MAX_TERMS_FACTOR * (reach + n + r + 10), identity="terms_used"
    )
    start = math.ceil(2 * (reach + n + r)) + 2
    terms = [dobinski_term(n, r, x, lam, k) for k in range(10 * start + 2)]
    previous = None
    for k in range(1, 10 * start + 1):
        bound = term_ratio_bound(n, r, x, lam, k)
        report.record(terms[k + 1] / terms[k] <= bound, identity="ratio_bound", k=k)
        if previous is not None:
            report.record(bound <= previous, identity="ratio_decreasing", k=k)
        previous = bound
    report.details["terms_used"] = result.terms_used
    return report


def bell_dobinski_check(n: int, x, eps=None) -> CheckReport:
    eps = DOBINSKI_DEFAULT_EPS if eps is None else eps
    report = CheckReport("bell_dobinski", {"n": n, "x": str(x)})
    result = bell_dobinski_eval(n, x, eps)
    _record_result(report, result, eps)
    report.details["terms_used"] = result.terms_used
    return report
