"""
Integer number triangles: Lah, r-Lah, Stirling numbers of the second kind, Bell numbers.

Lah and r-Lah entries come from their closed forms; the recurrence in
r_lah_recurrence_check is only a cross-check, kept independent on purpose.
Entries with k > n (or k < 0) are 0 so double sums can run over full ranges.
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

from .exact import factorial
from .report import CheckReport

logger = logging.getLogger(__name__)

TRIANGLE_KINDS = ("lah", "r_lah", "stirling2")

# Hidden fault used by `verify --inject-fault`: L(3,2) is reported off by one.
FAULT_ENTRY = (3, 2)
_fault_injected = False


def inject_fault(enabled: bool = True) -> None:
    global _fault_injected
    _fault_injected = enabled
    if enabled:
        logger.warning(f"Fault injection enabled: L{FAULT_ENTRY} is corrupted")


@dataclass(frozen=True)
class Triangle:
    kind: str
    rows: Tuple[Tuple[int, ...], ...]
    r: Optional[int] = None

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def entry(self, n: int, k: int) -> int:
        if k < 0 or k > n:
            return 0
        return self.rows[n][k]

    def row_sums(self) -> Tuple[int, ...]:
        return tuple(sum(row) for row in self.rows)


def lah(n: int, k: int) -> int:
    """L(n,k) = (n!/k!)·C(n-1, k-1)."""
    if n < 0 or k < 0:
        raise ValueError(f"indices must be >= 0, got ({n}, {k})")
    if k > n:
        return 0
    if k == 0:
        return 1 if n == 0 else 0
    value = factorial(n) // factorial(k) * math.comb(n - 1, k - 1)
    if _fault_injected and (n, k) == FAULT_ENTRY:
        value += 1
    return value


def r_lah(n: int, k: int, r: int) -> int:
    """L^r(n,k) = (n!/k!)·C(n+r-1, k+r-1); r = 0 gives L(n,k)."""
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    if r == 0:
        return lah(n, k)
    if n < 0 or k < 0:
        raise ValueError(f"indices must be >= 0, got ({n}, {k})")
    if k > n:
        return 0
    return factorial(n) // factorial(k) * math.comb(n + r - 1, k + r - 1)


def _r_lah_or_zero(n: int, k: int, r: int) -> int:
    return r_lah(n, k, r) if k >= 0 else 0


def r_lah_recurrence_check(n_max: int, r: int) -> CheckReport:
    """
    L^r(n+1,k) = L^r(n,k-1) + (n+k+r)·L^r(n,k).

    From the generating function F_k = t^k(1-t)^{-(k+r)}/k! differentiated in t:
    (1-t)·F_k' = F_{k-1} + (k+r)·F_k, and moving t·F_k' right supplies the n.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    report = CheckReport("r_lah_recurrence", {"n_max": n_max, "r": r})
    for n in range(n_max):
        for k in range(n + 2):
            lhs = r_lah(n + 1, k, r)
            rhs = _r_lah_or_zero(n, k - 1, r) + (n + k + r) * r_lah(n, k, r)
            report.expect_equal(lhs, rhs, n=n + 1, k=k)
    return report


@lru_cache(maxsize=None)
def _stirling2_row(n: int) -> Tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _stirling2_row(n - 1)
    return tuple(
        (k * prev[k] if k < len(prev) else 0) + (prev[k - 1] if k >= 1 else 0)
        for k in range(n + 1)
    )


def stirling2(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError(f"indices must be >= 0, got ({n}, {k})")
    if k > n:
        return 0
    return _stirling2_row(n)[k]


def bell(n: int) -> int:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return sum(_stirling2_row(n))


def spivey_bell_check(n: int, m: int) -> CheckReport:
    """φ_{n+m} = Σ_j Σ_k C(n,k)·{m j}·j^{n-k}·φ_k, with 0^0 = 1."""
    report = CheckReport("spivey_bell", {"n": n, "m": m})
    lhs = bell(n + m)
    rhs = sum(
        math.comb(n, k) * stirling2(m, j) * j ** (n - k) * bell(k)
        for j in range(m + 1)
        for k in range(n + 1)
    )
    report.expect_equal(lhs, rhs)
    report.details["value"] = lhs
    return report


def lah_bell_number(n: int) -> int:
    return sum(lah(n, k) for k in range(n + 1))


def r_lah_bell_number(n: int, r: int) -> int:
    return sum(r_lah(n, k, r) for k in range(n + 1))


def triangle(kind: str, n_max: int, r: Optional[int] = None) -> Triangle:
    """Rows 0..n_max of the requested triangle."""
    if kind not in TRIANGLE_KINDS:
        raise ValueError(f"unknown triangle kind: {kind}")
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    if kind == "lah":
        entry = lah
    elif kind == "stirling2":
        entry = stirling2
    else:
        if r is None:
            raise ValueError("r_lah triangle needs r")

        def entry(n, k):
            return r_lah(n, k, r)

    rows = tuple(tuple(entry(n, k) for k in range(n + 1)) for n in range(n_max + 1))
    return Triangle(kind, rows, r if kind == "r_lah" else None)
