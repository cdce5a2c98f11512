"""
Truncated formal power series over ℚ and generating-function checks.

A TruncSeries of order N keeps the coefficients of t^0..t^N; products and
exponentials never look past N. Generating functions are compared on
n!·[t^n] so integer targets stay integers.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .errors import DomainError
from .exact import (
    binomial,
    degenerate_rising,
    factorial,
    falling_factorial,
    rising_factorial,
)
from .poly.families import lambda_r_lah, lambda_r_lah_bell_poly, r_lah_bell_poly
from .report import CheckReport
from .tables import r_lah


@dataclass(frozen=True)
class TruncSeries:
    order: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"order must be >= 0, got {self.order}")
        padded = [Fraction(c) for c in self.coeffs[: self.order + 1]]
        padded += [Fraction(0)] * (self.order + 1 - len(padded))
        object.__setattr__(self, "coeffs", tuple(padded))

    @classmethod
    def constant(cls, value, order: int) -> "TruncSeries":
        return cls(order, (value,))

    @classmethod
    def monomial(cls, degree: int, order: int, coeff=1) -> "TruncSeries":
        return cls(order, (0,) * degree + (coeff,))

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def _common(self, other: "TruncSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other):
        if isinstance(other, TruncSeries):
            order = self._common(other)
            return TruncSeries(order, tuple(self[i] + other[i] for i in range(order + 1)))
        if isinstance(other, (int, Fraction)):
            return self + TruncSeries.constant(other, self.order)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return TruncSeries(self.order, tuple(c * other for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def egf_coeffs(self) -> Tuple[Fraction, ...]:
        """n!·[t^n] for n = 0..order."""
        return tuple(c * factorial(n) for n, c in enumerate(self.coeffs))


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Cauchy product truncated at the common order."""
    order = min(a.order, b.order)
    out = [Fraction(0)] * (order + 1)
    for i in range(order + 1):
        if a[i] == 0:
            continue
        for j in range(order + 1 - i):
            out[i + j] += a[i] * b[j]
    return TruncSeries(order, tuple(out))


def series_exp(a: TruncSeries) -> TruncSeries:
    """exp(a) for a(0) = 0, by n·b_n = Σ_{k=1}^n k·a_k·b_{n-k}."""
    if a[0] != 0:
        raise DomainError(f"exp needs a zero constant term, got {a[0]}")
    b = [Fraction(0)] * (a.order + 1)
    b[0] = Fraction(1)
    for n in range(1, a.order + 1):
        b[n] = sum((k * a[k] * b[n - k] for k in range(1, n + 1)), Fraction(0)) / n
    return TruncSeries(a.order, tuple(b))


def series_pow_int(a: TruncSeries, k: int) -> TruncSeries:
    if k < 0:
        raise ValueError(f"exponent must be >= 0, got {k}")
    result = TruncSeries.constant(1, a.order)
    base = a
    while k:
        if k & 1:
            result = series_mul(result, base)
        base = series_mul(base, base)
        k >>= 1
    return result


def binomial_series(exponent, scale, order: int) -> TruncSeries:
    """(1 - scale·t)^(-exponent): coefficient of t^n is C(exponent+n-1, n)·scale^n."""
    exponent, scale = Fraction(exponent), Fraction(scale)
    return TruncSeries(
        order, tuple(binomial(exponent + n - 1, n) * scale**n for n in range(order + 1))
    )


def _t(order: int) -> TruncSeries:
    return TruncSeries.monomial(1, order)


def _nonzero_lambda(lam) -> Fraction:
    lam = Fraction(lam)
    if lam == 0:
        raise DomainError("λ = 0: the exponent r/λ is undefined")
    return lam


def gf_check_lah(k: int, order: int, r: int = 0) -> CheckReport:
    """
    (1/k!)(1-t)^{-r}((1-t)^{-1} - 1)^k and (t^k/k!)(1-t)^{-(k+r)} both have
    EGF coefficients L^r(n,k), zero below n = k.
    """
    if k > order:
        raise ValueError(f"k must be <= order, got k={k} order={order}")
    report = CheckReport("gf_lah", {"k": k, "order": order, "r": r})
    geometric = binomial_series(1, 1, order)
    product_form = (
        binomial_series(r, 1, order) * series_pow_int(geometric - 1, k) * Fraction(1, factorial(k))
    )
    closed_form = (
        series_pow_int(_t(order), k) * binomial_series(k + r, 1, order) * Fraction(1, factorial(k))
    )
    for label, series in (("product", product_form), ("closed", closed_form)):
        coeffs = series.egf_coeffs()
        for n in range(order + 1):
            report.expect_equal(coeffs[n], r_lah(n, k, r), n=n, form=label)
    return report


def gf_check_bell(r: int, order: int, x) -> CheckReport:
    """(1-t)^{-r}·exp(x((1-t)^{-1} - 1)) has EGF coefficients LB_n^(r)(x)."""
    x = Fraction(x)
    report = CheckReport("gf_bell", {"r": r, "order": order, "x": x})
    inner = (binomial_series(1, 1, order) - 1) * x
    series = binomial_series(r, 1, order) * series_exp(inner)
    coeffs = series.egf_coeffs()
    for n in range(order + 1):
        report.expect_equal(coeffs[n], r_lah_bell_poly(n, r).evaluate(x), n=n)
    return report


def gf_check_lambda(
    r: int, lam, order: int, k: Optional[int] = None, x=None
) -> CheckReport:
    """
    Number variant (k given): (1/k!)(t/(1-λt))^k (1-λt)^{-r/λ} ↔ L^r_λ(n,k).
    Polynomial variant (x given): exp((x/λ)((1-λt)^{-1} - 1))(1-λt)^{-r/λ} ↔ LB^(r)_{n,λ}(x).
    """
    lam = _nonzero_lambda(lam)
    if (k is None) == (x is None):
        raise ValueError("give exactly one of k or x")
    params = {"r": r, "lambda": lam, "order": order}
    shift = binomial_series(Fraction(r) / lam, lam, order)
    geometric = binomial_series(1, lam, order)
    if k is not None:
        params["k"] = k
        report = CheckReport("gf_lambda_number", params)
        series = series_pow_int(_t(order) * geometric, k) * shift * Fraction(1, factorial(k))
        coeffs = series.egf_coeffs()
        for n in range(order + 1):
            report.expect_equal(coeffs[n], lambda_r_lah(n, k, r).evaluate(lam), n=n)
        return report
    x = Fraction(x)
    params["x"] = x
    report = CheckReport("gf_lambda_poly", params)
    series = series_exp((geometric - 1) * (x / lam)) * shift
    coeffs = series.egf_coeffs()
    for n in range(order + 1):
        report.expect_equal(coeffs[n], lambda_r_lah_bell_poly(n, r).evaluate(x, lam), n=n)
    return report


def gf_check_rising(x, order: int) -> CheckReport:
    """(1-t)^{-x} = Σ ⟨x⟩_n t^n/n! = Σ_k (x)_k/k!·(t/(1-t))^k."""
    x = Fraction(x)
    report = CheckReport("gf_rising", {"x": x, "order": order})
    power = binomial_series(x, 1, order)
    coeffs = power.egf_coeffs()
    for n in range(order + 1):
        report.expect_equal(coeffs[n], rising_factorial(x, n), n=n, form="egf")
    ratio = _t(order) * binomial_series(1, 1, order)
    expansion = TruncSeries.constant(0, order)
    for k in range(order + 1):
        expansion = expansion + series_pow_int(ratio, k) * (falling_factorial(x, k) / factorial(k))
    report.expect_equal(expansion, power, form="binomial_expansion")
    return report


def gf_check_degenerate_rising(x, r: int, lam, order: int) -> CheckReport:
    """(1-λt)^{-(x+r)/λ} has EGF coefficients ⟨x+r⟩_{n,λ}."""
    lam, x = _nonzero_lambda(lam), Fraction(x)
    report = CheckReport("gf_degenerate_rising", {"x": x, "r": r, "lambda": lam, "order": order})
    coeffs = binomial_series((x + r) / lam, lam, order).egf_coeffs()
    for n in range(order + 1):
        report.expect_equal(coeffs[n], degenerate_rising(x + r, n, lam), n=n)
    return report


@dataclass(frozen=True)
class TruncSeries2:
    """Bivariate series Σ c[i][j] x^i y^j truncated at i ≤ nx, j ≤ ny."""

    nx: int
    ny: int
    coeffs: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = [list(row[: self.ny + 1]) for row in self.coeffs[: self.nx + 1]]
        rows += [[] for _ in range(self.nx + 1 - len(rows))]
        fixed = tuple(
            tuple(Fraction(c) for c in row) + (Fraction(0),) * (self.ny + 1 - len(row))
            for row in rows
        )
        object.__setattr__(self, "coeffs", fixed)

    @classmethod
    def constant(cls, value, nx: int, ny: int) -> "TruncSeries2":
        return cls(nx, ny, ((value,),))

    @classmethod
    def from_x(cls, series: TruncSeries, ny: int) -> "TruncSeries2":
        return cls(series.order, ny, tuple((c,) for c in series.coeffs))

    @classmethod
    def from_y(cls, series: TruncSeries, nx: int) -> "TruncSeries2":
        return cls(nx, series.order, (series.coeffs,))

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.coeffs[i][j]

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncSeries2.constant(other, self.nx, self.ny)
        return TruncSeries2(
            self.nx,
            self.ny,
            tuple(
                tuple(self[i, j] + other[i, j] for j in range(self.ny + 1))
                for i in range(self.nx + 1)
            ),
        )

    def __neg__(self) -> "TruncSeries2":
        return TruncSeries2(self.nx, self.ny, tuple(tuple(-c for c in row) for row in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncSeries2(
                self.nx, self.ny, tuple(tuple(c * other for c in row) for row in self.coeffs)
            )
        out = [[Fraction(0)] * (self.ny + 1) for _ in range(self.nx + 1)]
        for i1 in range(self.nx + 1):
            for j1 in range(self.ny + 1):
                a = self[i1, j1]
                if a == 0:
                    continue
                for i2 in range(self.nx + 1 - i1):
                    for j2 in range(self.ny + 1 - j1):
                        out[i1 + i2][j1 + j2] += a * other[i2, j2]
        return TruncSeries2(self.nx, self.ny, tuple(tuple(row) for row in out))

    __rmul__ = __mul__

    def _nilpotent_sum(self, weights) -> "TruncSeries2":
        """Σ_k weights(k)·self^k; self(0,0) must be 0 so the sum stops at nx+ny."""
        if self[0, 0] != 0:
            raise DomainError("series substitution needs a zero constant term")
        result = TruncSeries2.constant(weights(0), self.nx, self.ny)
        power = TruncSeries2.constant(1, self.nx, self.ny)
        for k in range(1, self.nx + self.ny + 1):
            power = power * self
            result = result + power * weights(k)
        return result

    def exp(self) -> "TruncSeries2":
        return self._nilpotent_sum(lambda k: Fraction(1, factorial(k)))

    def inverse_one_minus(self, exponent=1) -> "TruncSeries2":
        """(1 - self)^(-exponent)."""
        exponent = Fraction(exponent)
        return self._nilpotent_sum(lambda k: binomial(exponent + k - 1, k))


def two_variable_spivey_spot_check(n: int, m: int, r: int, lam, t_val) -> CheckReport:
    """
    The bivariate generating function (1-λ(x+y))^{-r/λ} exp((t/λ)((1-λ(x+y))^{-1} - 1))
    expanded in one shot and through the factorization that splits off the
    x-only part; the x^n y^m coefficients must agree with each other and with
    LB^(r)_{n+m,λ}(t)/(n!·m!).
    """
    lam, t_val = _nonzero_lambda(lam), Fraction(t_val)
    report = CheckReport(
        "two_variable_spivey", {"n": n, "m": m, "r": r, "lambda": lam, "t": t_val}
    )
    exponent = Fraction(r) / lam
    scale = t_val / lam

    x_part = TruncSeries2.from_x(TruncSeries.monomial(1, n, lam), m)
    y_part = TruncSeries2.from_y(TruncSeries.monomial(1, m, lam), n)
    z = x_part + y_part
    one_shot = z.inverse_one_minus(exponent) * ((z.inverse_one_minus() - 1) * scale).exp()

    v = x_part.inverse_one_minus()
    w = y_part * v
    w_inv = w.inverse_one_minus()
    factored = (
        x_part.inverse_one_minus(exponent)
        * ((v - 1) * scale).exp()
        * (v * (w_inv - 1) * scale).exp()
        * w.inverse_one_minus(exponent)
    )
    expected = lambda_r_lah_bell_poly(n + m, r).evaluate(t_val, lam) / (factorial(n) * factorial(m))
    report.expect_equal(one_shot[n, m], factored[n, m], form="factorization")
    report.expect_equal(one_shot[n, m], expected, form="shift")
    report.details["coefficient"] = one_shot[n, m]
    return report
