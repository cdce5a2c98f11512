"""
Brute-force ground truth for Lah and Lah-Bell numbers.

Set partitions of [n] are generated as restricted growth strings; each block
of size b admits b! linear orders, so the number of partitions into linearly
ordered blocks is Σ over set partitions of ∏ |block|!.
"""

import itertools
import logging
from dataclasses import dataclass
from math import prod
from typing import Dict, Iterator, List, Tuple

from .config import ORACLE_MAX_N
from .errors import DomainError
from .exact import factorial
from .poly.families import bell_poly, lah_bell_poly
from .report import CheckReport
from .tables import bell, lah, lah_bell_number

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrderedPartition:
    """Unordered collection of blocks; order inside each block matters."""

    blocks: Tuple[Tuple[int, ...], ...]

    def is_partition_of(self, n: int) -> bool:
        elements = [e for block in self.blocks for e in block]
        return all(self.blocks) and sorted(elements) == list(range(1, n + 1))


def _check_cap(n: int, cap: int) -> None:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n > cap:
        raise DomainError(f"n={n} exceeds the enumeration cap {cap}")


def restricted_growth_strings(n: int) -> Iterator[Tuple[int, ...]]:
    """a_1 = 0 and a_{i+1} <= 1 + max(a_1..a_i)."""
    if n == 0:
        yield ()
        return
    prefix = [0]

    def extend(top: int):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for value in range(top + 2):
            prefix.append(value)
            yield from extend(max(top, value))
            prefix.pop()

    yield from extend(0)


def set_partitions(n: int) -> Iterator[List[List[int]]]:
    """All set partitions of {1..n}, blocks ordered by their smallest element."""
    for rgs in restricted_growth_strings(n):
        blocks: List[List[int]] = [[] for _ in range(max(rgs, default=-1) + 1)]
        for element, block in enumerate(rgs, start=1):
            blocks[block].append(element)
        yield blocks


def ordered_partitions(n: int, cap: int = 6) -> Iterator[OrderedPartition]:
    """Every partition into linearly ordered blocks, each linear order spelled out."""
    _check_cap(n, cap)
    for blocks in set_partitions(n):
        for orders in itertools.product(*(itertools.permutations(b) for b in blocks)):
            yield OrderedPartition(tuple(orders))


def distribution_by_block_count(n: int, cap: int = ORACLE_MAX_N) -> Dict[int, int]:
    """{k: number of partitions of [n] into k linearly ordered blocks}."""
    _check_cap(n, cap)
    counts: Dict[int, int] = {}
    for blocks in set_partitions(n):
        k = len(blocks)
        counts[k] = counts.get(k, 0) + prod(factorial(len(b)) for b in blocks)
    logger.debug(f"Enumerated ordered partitions of [{n}]: {counts}")
    return dict(sorted(counts.items()))


def count_ordered_partitions(n: int, k: int, cap: int = ORACLE_MAX_N) -> int:
    return distribution_by_block_count(n, cap).get(k, 0)


def count_all_ordered_partitions(n: int, cap: int = ORACLE_MAX_N) -> int:
    return sum(distribution_by_block_count(n, cap).values())


def count_set_partitions(n: int, cap: int = ORACLE_MAX_N) -> int:
    _check_cap(n, cap)
    return sum(1 for _ in restricted_growth_strings(n))


def oracle_check(n: int, explicit_max: int = 5) -> CheckReport:
    """Enumerated counts against L(n,k), LB_n(1) and, for small n, explicitly listed orders."""
    report = CheckReport("oracle", {"n": n})
    row = distribution_by_block_count(n)
    for k in range(n + 1):
        report.expect_equal(row.get(k, 0), lah(n, k), k=k)
    total = sum(row.values())
    report.expect_equal(total, lah_bell_number(n), identity="row_sum")
    report.expect_equal(total, lah_bell_poly(n).evaluate(1), identity="lb_at_1")
    if n <= explicit_max:
        listed = list(ordered_partitions(n, cap=explicit_max))
        report.expect_equal(len(listed), total, identity="explicit")
        report.record(all(p.is_partition_of(n) for p in listed), identity="well_formed")
    report.details["distribution"] = row
    return report


def set_partition_check(n: int) -> CheckReport:
    """Unordered blocks: enumeration gives the Bell number φ_n(1)."""
    report = CheckReport("set_partitions", {"n": n})
    count = count_set_partitions(n)
    report.expect_equal(count, bell(n), identity="bell")
    report.expect_equal(count, bell_poly(n).evaluate(1), identity="phi_at_1")
    return report
