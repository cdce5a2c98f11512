"""
Exact arithmetic primitives.

Integers are Python ints and rationals are fractions.Fraction (always reduced,
denominator positive). Everything here is a pure function of its arguments.
"""

import math
from enum import Enum
from fractions import Fraction
from functools import lru_cache, reduce
from operator import mul
from typing import Union

from .config import FACTORIAL_CACHE_CAP
from .poly.dense import BiPoly, Poly

ExactInt = int
ExactRat = Fraction
Number = Union[int, Fraction]


class Direction(str, Enum):
    RISING = "rising"
    FALLING = "falling"

    @property
    def sign(self) -> int:
        return 1 if self is Direction.RISING else -1


def parse_rational(text) -> Fraction:
    """Parse "p/q", an integer or a terminating decimal into an exact rational."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"not a rational literal: {text!r}") from e


def _nonneg(name: str, value: int) -> None:
    if value < 0:
        raise ValueError(f"{name} must be >= 0, got {value}")


@lru_cache(maxsize=FACTORIAL_CACHE_CAP)
def factorial(n: int) -> int:
    _nonneg("n", n)
    return math.factorial(n)


def binomial(n: Number, k: int) -> Fraction:
    """Generalized binomial n(n-1)...(n-k+1)/k! for rational n."""
    _nonneg("k", k)
    n = Fraction(n)
    if n.denominator == 1 and n >= 0:
        return Fraction(math.comb(n.numerator, k))
    return reduce(mul, (n - i for i in range(k)), Fraction(1)) / factorial(k)


def rising_factorial(a: Number, n: int) -> Fraction:
    """⟨a⟩_n = a(a+1)...(a+n-1)."""
    _nonneg("n", n)
    return reduce(mul, (Fraction(a) + i for i in range(n)), Fraction(1))


def falling_factorial(a: Number, n: int) -> Fraction:
    """(a)_n = a(a-1)...(a-n+1)."""
    _nonneg("n", n)
    return reduce(mul, (Fraction(a) - i for i in range(n)), Fraction(1))


def degenerate_rising(a: Number, n: int, lam: Number) -> Fraction:
    """⟨a⟩_{n,λ} = a(a+λ)...(a+(n-1)λ)."""
    _nonneg("n", n)
    return reduce(mul, (Fraction(a) + i * Fraction(lam) for i in range(n)), Fraction(1))


def degenerate_falling(a: Number, n: int, lam: Number) -> Fraction:
    """(a)_{n,λ} = a(a-λ)...(a-(n-1)λ)."""
    _nonneg("n", n)
    return reduce(mul, (Fraction(a) - i * Fraction(lam) for i in range(n)), Fraction(1))


def degenerate_binomial(x: Number, n: int, lam: Number) -> Fraction:
    return degenerate_falling(x, n, lam) / factorial(n)


def factorial_poly(n: int, direction, shift: Number = 0, var: str = "x") -> Poly:
    """⟨x+shift⟩_n or (x+shift)_n as a polynomial in `var`."""
    _nonneg("n", n)
    sign = Direction(direction).sign
    result = Poly.constant(1, var)
    for i in range(n):
        result = result * Poly.linear(Fraction(shift) + sign * i, 1, var)
    return result


def degenerate_factorial_poly(n: int, direction, shift: Number = 0) -> BiPoly:
    """⟨x+shift⟩_{n,λ} or (x+shift)_{n,λ} as an element of ℚ[λ][x]."""
    _nonneg("n", n)
    sign = Direction(direction).sign
    result = BiPoly.constant(1)
    for i in range(n):
        step = Poly((Fraction(shift), sign * i), "l")
        result = result * BiPoly.linear(step, 1)
    return result
