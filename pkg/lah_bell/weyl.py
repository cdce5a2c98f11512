"""
Normally ordered Weyl algebra: Σ c_{i,j} X^i D^j with DX - XD = 1.

X is multiplication by x and D = d/dx. Every element is stored in normal order
(all X left of all D); that form is unique, so equality is term-map equality.
Products use the reordering D^j X^i = Σ_s s!·C(i,s)·C(j,s)·X^{i-s} D^{j-s},
which reordering_check validates against step-by-step DX -> XD + 1 rewriting.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict, Mapping, Tuple

from .errors import DomainError
from .exact import factorial, falling_factorial, rising_factorial
from .poly.dense import Poly
from .poly.families import r_lah_bell_poly
from .report import CheckReport
from .tables import r_lah

logger = logging.getLogger(__name__)

Term = Tuple[int, int]


@dataclass(frozen=True, eq=False)
class WeylOp:
    terms: Mapping[Term, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {key: Fraction(c) for key, c in self.terms.items() if c != 0}
        object.__setattr__(self, "terms", clean)

    @classmethod
    def identity(cls) -> "WeylOp":
        return cls({(0, 0): 1})

    @classmethod
    def x(cls, power: int = 1) -> "WeylOp":
        return cls({(power, 0): 1})

    @classmethod
    def d(cls, power: int = 1) -> "WeylOp":
        return cls({(0, power): 1})

    @classmethod
    def xd_plus(cls, c) -> "WeylOp":
        """XD + c."""
        return cls({(1, 1): 1, (0, 0): c})

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeylOp):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "WeylOp") -> "WeylOp":
        out = defaultdict(Fraction, self.terms)
        for key, c in other.terms.items():
            out[key] += c
        return WeylOp(out)

    def __neg__(self) -> "WeylOp":
        return WeylOp({key: -c for key, c in self.terms.items()})

    def __sub__(self, other: "WeylOp") -> "WeylOp":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, WeylOp):
            return normal_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return WeylOp({key: c * other for key, c in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items()):
            word = "*".join(
                p for p in (
                    "" if i == 0 else ("X" if i == 1 else f"X^{i}"),
                    "" if j == 0 else ("D" if j == 1 else f"D^{j}"),
                ) if p
            )
            if not word:
                parts.append(str(c))
            elif c == 1:
                parts.append(word)
            else:
                parts.append(f"{c}*{word}")
        return " + ".join(parts)


def normal_mul(a: WeylOp, b: WeylOp) -> WeylOp:
    """Canonical product: X^i1 D^j1 · X^i2 D^j2 reordered in closed form."""
    out: Dict[Term, Fraction] = defaultdict(Fraction)
    for (i1, j1), c1 in a.terms.items():
        for (i2, j2), c2 in b.terms.items():
            for s in range(min(j1, i2) + 1):
                weight = factorial(s) * comb(i2, s) * comb(j1, s)
                out[(i1 + i2 - s, j1 + j2 - s)] += c1 * c2 * weight
    return WeylOp(out)


def _to_words(op: WeylOp) -> Dict[str, Fraction]:
    return {"X" * i + "D" * j: c for (i, j), c in op.terms.items()}


def naive_mul(a: WeylOp, b: WeylOp) -> WeylOp:
    """Product by repeated single-step rewriting DX -> XD + 1 on words."""
    pending: Dict[str, Fraction] = defaultdict(Fraction)
    for w1, c1 in _to_words(a).items():
        for w2, c2 in _to_words(b).items():
            pending[w1 + w2] += c1 * c2
    done: Dict[Term, Fraction] = defaultdict(Fraction)
    while pending:
        step: Dict[str, Fraction] = defaultdict(Fraction)
        for word, c in pending.items():
            pos = word.find("DX")
            if pos < 0:
                done[(word.count("X"), word.count("D"))] += c
                continue
            step[word[:pos] + "XD" + word[pos + 2:]] += c
            step[word[:pos] + word[pos + 2:]] += c
        pending = {w: c for w, c in step.items() if c != 0}
    return WeylOp(done)


def op_rising(c: int, n: int) -> WeylOp:
    """⟨XD+c⟩_n = (XD+c)(XD+c+1)...(XD+c+n-1); identity for n = 0."""
    if n < 0 or c < 0:
        raise ValueError(f"c and n must be >= 0, got c={c} n={n}")
    result = WeylOp.identity()
    for i in range(n):
        result = result * WeylOp.xd_plus(c + i)
    return result


def apply_to_poly(op: WeylOp, p: Poly) -> Poly:
    """X^i D^j x^m = (m)_j·x^{m-j+i}, zero when j > m."""
    out = [Fraction(0)] * (max(p.degree, 0) + 1 + max((i for i, _ in op.terms), default=0))
    for (i, j), c in op.terms.items():
        for m, a in enumerate(p.coeffs):
            if a == 0 or j > m:
                continue
            out[m - j + i] += c * a * falling_factorial(m, j)
    return Poly(out, p.var)


def apply_to_exp(op: WeylOp) -> Poly:
    """q(x) with op(e^x) = q(x)·e^x; X^i D^j e^x = x^i e^x."""
    out: Dict[int, Fraction] = defaultdict(Fraction)
    for (i, _), c in op.terms.items():
        out[i] += c
    size = max(out, default=-1) + 1
    return Poly([out.get(i, 0) for i in range(size)])


def reordering_check(max_power: int = 5) -> CheckReport:
    """Closed-form D^j X^i against axiomatic rewriting, for all i, j ≤ max_power."""
    report = CheckReport("weyl_reordering", {"max_power": max_power})
    for i in range(max_power + 1):
        for j in range(max_power + 1):
            closed = normal_mul(WeylOp.d(j), WeylOp.x(i))
            naive = naive_mul(WeylOp.d(j), WeylOp.x(i))
            report.expect_equal(closed, naive, i=i, j=j)
    return report


def commutation_check(k: int) -> CheckReport:
    """DX^k - X^kD = kX^{k-1} and (XD)X^k = X^k(XD+k)."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    report = CheckReport("weyl_commutation", {"k": k})
    d, xk = WeylOp.d(), WeylOp.x(k)
    report.expect_equal(d * xk - xk * d, WeylOp.x(k - 1) * k, identity="commutator")
    xd = WeylOp.xd_plus(0)
    report.expect_equal(xd * xk, xk * WeylOp.xd_plus(k), identity="xd_shift")
    return report


def expansion_check(n: int, r: int) -> CheckReport:
    """⟨XD+r⟩_n = Σ_k L^r(n,k) X^k D^k, exactly (no other terms)."""
    report = CheckReport("weyl_expansion", {"n": n, "r": r})
    expected = WeylOp({(k, k): r_lah(n, k, r) for k in range(n + 1)})
    report.expect_equal(op_rising(r, n), expected)
    return report


def monomial_action_check(n: int, m: int, r: int) -> CheckReport:
    """⟨XD+r⟩_n x^m = ⟨m+r⟩_n x^m."""
    report = CheckReport("weyl_monomial_action", {"n": n, "m": m, "r": r})
    lhs = apply_to_poly(op_rising(r, n), Poly.monomial(m))
    report.expect_equal(lhs, Poly.monomial(m, rising_factorial(m + r, n)))
    return report


def exp_action_check(n: int, r: int) -> CheckReport:
    """e^{-x}⟨XD+r⟩_n e^x = LB_n^(r)(x)."""
    report = CheckReport("weyl_exp_action", {"n": n, "r": r})
    report.expect_equal(apply_to_exp(op_rising(r, n)), r_lah_bell_poly(n, r))
    return report


def shift_identity_check(n: int, m: int, r: int, k: int) -> CheckReport:
    """⟨XD+r+m⟩_n X^k = X^k⟨XD+r+m+k⟩_n = X^k Σ_l C(n,l)⟨XD+r⟩_l⟨m+k⟩_{n-l}, k ≥ 1."""
    if k < 1:
        raise DomainError(f"shift identity needs k >= 1, got {k}")
    report = CheckReport("weyl_shift", {"n": n, "m": m, "r": r, "k": k})
    xk = WeylOp.x(k)
    lhs = op_rising(r + m, n) * xk
    middle = xk * op_rising(r + m + k, n)
    total = WeylOp()
    for l in range(n + 1):
        total = total + op_rising(r, l) * (comb(n, l) * rising_factorial(m + k, n - l))
    rhs = xk * total
    report.expect_equal(lhs, middle, identity="commute")
    report.expect_equal(lhs, rhs, identity="expanded")
    return report


def operator_spivey_check(n: int, m: int, r: int) -> CheckReport:
    """
    ⟨XD+r⟩_{n+m} = Σ_k Σ_l C(n,l)·L^r(m,k)·⟨m+k⟩_{n-l}·X^k⟨XD+r⟩_l D^k,
    together with ⟨XD+r⟩_{n+m} = ⟨XD+r⟩_m⟨XD+r+m⟩_n = ⟨XD+r+m⟩_n⟨XD+r⟩_m.
    """
    report = CheckReport("weyl_spivey", {"n": n, "m": m, "r": r})
    lhs = op_rising(r, n + m)
    head, tail = op_rising(r, m), op_rising(r + m, n)
    report.expect_equal(lhs, head * tail, identity="factor_left")
    report.expect_equal(lhs, tail * head, identity="factor_right")
    rhs = WeylOp()
    for k in range(m + 1):
        weight = r_lah(m, k, r)
        if not weight:
            continue
        for l in range(n + 1):
            c = comb(n, l) * weight * rising_factorial(m + k, n - l)
            if c:
                rhs = rhs + WeylOp.x(k) * op_rising(r, l) * WeylOp.d(k) * c
    report.expect_equal(lhs, rhs, identity="expansion")
    if not report.passed:
        logger.warning(f"Operator Spivey identity failed at n={n} m={m} r={r}")
    return report
