"""
Brute-force partition enumeration: the ground truth the generating functions
are checked against. Nothing here uses q-series.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

from tools.bivariate_stats import LaurentPoly, StatTable

logger = logging.getLogger(__name__)

DEFAULT_ORACLE_BOUND = 40


class OracleBoundError(ValueError):
    """Raised when an enumeration above the configured bound is requested."""


@dataclass(frozen=True)
class Partition:
    parts: Tuple[int, ...]

    def __post_init__(self):
        if any(p <= 0 for p in self.parts):
            raise ValueError(f"parts must be positive: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    @property
    def smallest(self) -> int:
        return self.parts[-1] if self.parts else 0

    def __len__(self) -> int:
        return len(self.parts)

    def multiplicity(self, part: int) -> int:
        return self.parts.count(part)


def _check_bound(n: int, bound: int) -> None:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > bound:
        raise OracleBoundError(
            f"n = {n} exceeds the oracle bound {bound}; raise SPTLAB_ORACLE_BOUND to enumerate further"
        )


def _descending(n: int, largest: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _descending(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions(n: int) -> Tuple[Partition, ...]:
    return tuple(Partition(parts) for parts in _descending(n, n))


def enumerate_partitions(n: int, bound: int = DEFAULT_ORACLE_BOUND) -> Iterator[Partition]:
    """Every partition of n exactly once, lexicographically descending."""
    _check_bound(n, bound)
    return iter(_partitions(n))


def partition_count(n: int, bound: int = DEFAULT_ORACLE_BOUND) -> int:
    _check_bound(n, bound)
    return len(_partitions(n))


def rank_of(partition: Partition) -> int:
    """Largest part minus number of parts; 0 for the empty partition."""
    return partition.largest - len(partition)


def crank_of(partition: Partition) -> int:
    """Combinatorial crank: the largest part when there are no ones,
    otherwise (number of parts larger than the number of ones) minus the number of ones."""
    if not partition.parts:
        raise ValueError("crank is undefined for the empty partition")
    ones = partition.multiplicity(1)
    if ones == 0:
        return partition.largest
    return sum(1 for p in partition.parts if p > ones) - ones


def oracle_stat_tables(upto: int, bound: int = DEFAULT_ORACLE_BOUND) -> Tuple[StatTable, StatTable]:
    """(rank, crank) tables by direct count; row 0 is {0: 1} for both."""
    _check_bound(upto, bound)
    rank_rows: List[LaurentPoly] = [LaurentPoly.monomial(0)]
    crank_rows: List[LaurentPoly] = [LaurentPoly.monomial(0)]
    for n in range(1, upto + 1):
        partitions = _partitions(n)
        rank_rows.append(LaurentPoly.from_dict(Counter(rank_of(p) for p in partitions)))
        crank_rows.append(LaurentPoly.from_dict(Counter(crank_of(p) for p in partitions)))
    return (StatTable("rank", tuple(rank_rows), source="oracle"),
            StatTable("crank", tuple(crank_rows), source="oracle"))


@lru_cache(maxsize=None)
def _smallest_part_profile(n: int) -> Tuple[Dict[int, int], Tuple[int, ...]]:
    """spt_j(n) keyed by j, and spt_j*(n) for j = 0..n in one pass."""
    by_smallest: Dict[int, int] = {}
    gaps = [0] * (n + 1)
    for partition in _partitions(n):
        s = partition.smallest
        weight = partition.multiplicity(s)
        by_smallest[s] = by_smallest.get(s, 0) + weight
        gaps[partition.largest - s] += weight
    star = []
    running = 0
    for gap_count in gaps:
        running += gap_count
        star.append(running)
    return by_smallest, tuple(star)


def oracle_spt_j(j: int, n: int, bound: int = DEFAULT_ORACLE_BOUND) -> int:
    """Appearances of the smallest part over partitions of n whose smallest part is j."""
    if j < 1:
        raise ValueError("j must be at least 1")
    _check_bound(n, bound)
    if n == 0:
        return 0
    return _smallest_part_profile(n)[0].get(j, 0)


def oracle_spt_j_star(j: int, n: int, bound: int = DEFAULT_ORACLE_BOUND) -> int:
    """Appearances of the smallest part s over partitions of n with every part <= s + j."""
    if j < 1:
        raise ValueError("j must be at least 1")
    _check_bound(n, bound)
    if n == 0:
        return 0
    star = _smallest_part_profile(n)[1]
    return star[min(j, n)]


def oracle_spt(n: int, bound: int = DEFAULT_ORACLE_BOUND) -> int:
    """Total appearances of the smallest part over all partitions of n."""
    _check_bound(n, bound)
    return sum(p.multiplicity(p.smallest) for p in _partitions(n)) if n else 0


def oracle_spt_plus(n: int, bound: int = DEFAULT_ORACLE_BOUND) -> int:
    """sum_j sum_k spt_j*(k) spt_j(n - k), all factors counted by enumeration."""
    _check_bound(n, bound)
    total = 0
    for j in range(1, n + 1):
        for k in range(1, n - j + 1):
            total += oracle_spt_j_star(j, k, bound) * oracle_spt_j(j, n - k, bound)
    return total
