"""
Dense polynomials with exact rational coefficients.

Poly is univariate, tagged with its variable ("x", "l" for λ, "y", "t").
BiPoly is a polynomial in an outer variable whose coefficients are Poly in an
inner variable; with the default tags it holds elements of ℚ[λ][x].
Both are immutable and canonical: trailing zero coefficients are stripped, so
the zero polynomial has an empty coefficient tuple and equality is tuple equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Tuple, Union

Scalar = Union[int, Fraction]


def format_scalar(value: Scalar) -> str:
    """Exact text form of a rational: "p" or "p/q"."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _is_scalar(value) -> bool:
    return isinstance(value, (int, Fraction))


def _strip(coeffs: Iterable[Scalar]) -> Tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _power_text(var: str, degree: int) -> str:
    return var if degree == 1 else f"{var}^{degree}"


def _join_terms(terms) -> str:
    """terms: [(negative, body), ...] in ascending degree."""
    if not terms:
        return "0"
    negative, body = terms[0]
    text = f"-{body}" if negative else body
    for negative, body in terms[1:]:
        text += f" - {body}" if negative else f" + {body}"
    return text


@dataclass(frozen=True)
class Poly:
    coeffs: Tuple[Fraction, ...] = ()
    var: str = "x"

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def zero(cls, var: str = "x") -> "Poly":
        return cls((), var)

    @classmethod
    def constant(cls, value: Scalar, var: str = "x") -> "Poly":
        return cls((value,), var)

    @classmethod
    def monomial(cls, degree: int, coeff: Scalar = 1, var: str = "x") -> "Poly":
        return cls((0,) * degree + (coeff,), var)

    @classmethod
    def linear(cls, const: Scalar, slope: Scalar = 1, var: str = "x") -> "Poly":
        """const + slope·var."""
        return cls((const, slope), var)

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def _same_var(self, other: "Poly") -> None:
        if other.var != self.var:
            raise ValueError(f"variable mismatch: {self.var} vs {other.var}")

    def __add__(self, other):
        if isinstance(other, Poly):
            self._same_var(other)
            size = max(len(self.coeffs), len(other.coeffs))
            return Poly(
                [self.coefficient(i) + other.coefficient(i) for i in range(size)], self.var
            )
        if _is_scalar(other):
            return self + Poly.constant(other, self.var)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        if isinstance(other, Poly) or _is_scalar(other):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if _is_scalar(other):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Poly):
            self._same_var(other)
            if self.is_zero() or other.is_zero():
                return Poly.zero(self.var)
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Poly(out, self.var)
        if _is_scalar(other):
            return Poly([c * other for c in self.coeffs], self.var)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            return Poly([c / other for c in self.coeffs], self.var)
        return NotImplemented

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.constant(1, self.var)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def evaluate(self, value):
        """Horner evaluation. `value` may be a rational or a Poly (composition)."""
        result = Fraction(0)
        for c in reversed(self.coeffs):
            result = result * value + c
        if isinstance(value, Poly) and not isinstance(result, Poly):
            return Poly.constant(result, value.var)
        return result

    __call__ = evaluate

    def shift(self, amount: Scalar) -> "Poly":
        """p(var + amount)."""
        return self.evaluate(Poly.linear(amount, 1, self.var))

    def __str__(self) -> str:
        terms = []
        for degree, c in enumerate(self.coeffs):
            if c == 0:
                continue
            magnitude = abs(c)
            if degree == 0:
                body = format_scalar(magnitude)
            elif magnitude == 1:
                body = _power_text(self.var, degree)
            else:
                body = f"{format_scalar(magnitude)}*{_power_text(self.var, degree)}"
            terms.append((c < 0, body))
        return _join_terms(terms)


def _as_inner(value, inner: str) -> Poly:
    if isinstance(value, Poly):
        if value.var != inner and not value.is_zero() and value.degree > 0:
            raise ValueError(f"coefficient in {value.var}, expected {inner}")
        return Poly(value.coeffs, inner)
    return Poly.constant(value, inner)


@dataclass(frozen=True)
class BiPoly:
    """Σ coeffs[k]·var^k with coeffs[k] a Poly in `inner`."""

    coeffs: Tuple[Poly, ...] = ()
    var: str = "x"
    inner: str = "l"

    def __post_init__(self):
        out = [_as_inner(c, self.inner) for c in self.coeffs]
        while out and out[-1].is_zero():
            out.pop()
        object.__setattr__(self, "coeffs", tuple(out))

    @classmethod
    def zero(cls, var: str = "x", inner: str = "l") -> "BiPoly":
        return cls((), var, inner)

    @classmethod
    def constant(cls, value, var: str = "x", inner: str = "l") -> "BiPoly":
        return cls((value,), var, inner)

    @classmethod
    def outer_monomial(cls, degree: int, coeff=1, var: str = "x", inner: str = "l") -> "BiPoly":
        return cls((0,) * degree + (coeff,), var, inner)

    @classmethod
    def linear(cls, const, slope=1, var: str = "x", inner: str = "l") -> "BiPoly":
        """const + slope·var, with const and slope scalars or Poly in `inner`."""
        return cls((const, slope), var, inner)

    @classmethod
    def from_outer(cls, p: Poly, inner: str = "l") -> "BiPoly":
        """Embed a Poly in the outer variable (constant inner coefficients)."""
        return cls(tuple(p.coeffs), p.var, inner)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Poly:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Poly.zero(self.inner)

    def _check(self, other: "BiPoly") -> None:
        if (other.var, other.inner) != (self.var, self.inner):
            raise ValueError(
                f"variable mismatch: ({self.var}, {self.inner}) vs ({other.var}, {other.inner})"
            )

    def _wrap(self, coeffs) -> "BiPoly":
        return BiPoly(tuple(coeffs), self.var, self.inner)

    def _coerce(self, other):
        if isinstance(other, BiPoly):
            self._check(other)
            return other
        if isinstance(other, Poly):
            if other.var == self.var and other.var != self.inner:
                return BiPoly.from_outer(other, self.inner)
            return BiPoly.constant(other, self.var, self.inner)
        if _is_scalar(other):
            return BiPoly.constant(other, self.var, self.inner)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        return self._wrap(self.coefficient(i) + other.coefficient(i) for i in range(size))

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return self._wrap(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return BiPoly.zero(self.var, self.inner)
        out = [Poly.zero(self.inner)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return self._wrap(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            return self._wrap(c / other for c in self.coeffs)
        return NotImplemented

    def substitute_inner(self, value: Scalar) -> Poly:
        """Fix the inner variable (e.g. λ = 1) and return a Poly in the outer variable."""
        return Poly([c.evaluate(Fraction(value)) for c in self.coeffs], self.var)

    def substitute_outer(self, value: Scalar) -> Poly:
        """Fix the outer variable (e.g. t = 1) and return a Poly in the inner variable."""
        result = Poly.zero(self.inner)
        power = Fraction(1)
        for c in self.coeffs:
            result = result + c * power
            power *= Fraction(value)
        return result

    def evaluate(self, outer_value: Scalar, inner_value: Scalar) -> Fraction:
        return self.substitute_inner(inner_value).evaluate(Fraction(outer_value))

    def monomials(self) -> Dict[Tuple[int, int], Fraction]:
        """{(outer degree, inner degree): coefficient}, nonzero entries only."""
        out = {}
        for i, c in enumerate(self.coeffs):
            for j, a in enumerate(c.coeffs):
                if a != 0:
                    out[(i, j)] = a
        return out

    def __str__(self) -> str:
        terms = []
        for degree, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            single = sum(1 for a in c.coeffs if a != 0) == 1
            text = str(c)
            negative = single and text.startswith("-")
            if negative:
                text = text[1:]
            if not single:
                text = f"({text})"
            if degree == 0:
                body = text
            elif text == "1":
                body = _power_text(self.var, degree)
            else:
                body = f"{text}*{_power_text(self.var, degree)}"
            terms.append((negative, body))
        return _join_terms(terms)
