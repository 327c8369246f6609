"""
Generating functions for the smallest-part statistics.

    spt_j   : q^j / ((1 - q^j)^2 (q^(j+1); q)_inf)
    spt_j*  : sum_{s>=1} q^s/(1 - q^s)^2 * prod_{i=1..j} 1/(1 - q^(s+i))
    spt_j+  : spt_j * spt_j*
    SPT+    : sum_j spt_j+

Every builder that sums over an index takes an optional cutoff for that index.
The default cutoff is the last index whose term can reach q^order; larger
values must leave all retained coefficients unchanged.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional

from tools.series_core import (
    TruncatedSeries,
    div_one_minus_inplace,
    euler_P,
    finite_pochhammer,
    reciprocal_pochhammers,
    smallest_part_weight,
)

logger = logging.getLogger(__name__)


class SptKind(Enum):
    SPT_J = "spt_j"
    SPT_J_STAR = "spt_j_star"
    SPT_J_PLUS = "spt_j_plus"


def _check_j(j: int) -> None:
    if j < 1:
        raise ValueError("j must be at least 1")


def spt_j_series(j: int, order: int, cutoff: Optional[int] = None) -> TruncatedSeries:
    _check_j(j)
    series = TruncatedSeries.monomial(j, order).div_one_minus(j).div_one_minus(j)
    last = order - j if cutoff is None else cutoff
    for i in range(j + 1, last + 1):
        series = series.div_one_minus(i)
    return series


def spt_j_star_series(j: int, order: int, cutoff: Optional[int] = None) -> TruncatedSeries:
    _check_j(j)
    total = TruncatedSeries.zero(order)
    last = order if cutoff is None else cutoff
    for s in range(1, last + 1):
        term = smallest_part_weight(s, order)
        for i in range(1, j + 1):
            term = term.div_one_minus(s + i)
        total = total + term
    return total


def spt_j_plus_series(j: int, order: int) -> TruncatedSeries:
    return spt_j_series(j, order) * spt_j_star_series(j, order)


_BUILDERS = {
    SptKind.SPT_J: spt_j_series,
    SptKind.SPT_J_STAR: spt_j_star_series,
    SptKind.SPT_J_PLUS: spt_j_plus_series,
}


@dataclass(frozen=True)
class SptFamily:
    j: int
    order: int
    series: TruncatedSeries
    kind: SptKind

    @classmethod
    def build(cls, kind: SptKind, j: int, order: int) -> "SptFamily":
        return cls(j, order, _BUILDERS[kind](j, order), kind)

    @property
    def first_exponent(self) -> int:
        """Lowest exponent that can be non-zero for this kind."""
        return {SptKind.SPT_J: self.j, SptKind.SPT_J_STAR: 1,
                SptKind.SPT_J_PLUS: self.j + 1}[self.kind]


# ----------------------------------------------------------------------
# Batch builders: all j at once
# ----------------------------------------------------------------------
def spt_j_batch(order: int, j_max: int) -> Dict[int, TruncatedSeries]:
    """spt_j for j = 1..j_max sharing the tail product prod_{i>j} 1/(1 - q^i)."""
    tail = [0] * (order + 1)
    tail[0] = 1
    for i in range(order, j_max, -1):
        div_one_minus_inplace(tail, i, i)
    result: Dict[int, TruncatedSeries] = {}
    for j in range(j_max, 0, -1):
        column = [0] * (order + 1)
        if j <= order:
            column[j:] = tail[:order + 1 - j]
            div_one_minus_inplace(column, j, 2 * j)
            div_one_minus_inplace(column, j, 2 * j)
            div_one_minus_inplace(tail, j, j)
        result[j] = TruncatedSeries(column, order)
    return result


def spt_j_star_batch(order: int, j_max: int) -> Dict[int, TruncatedSeries]:
    """spt_j* for j = 1..j_max; each step divides every live s-term by (1 - q^(s+j))."""
    star = [0] * (order + 1)
    terms: Dict[int, List[int]] = {}
    for s in range(1, order + 1):
        for multiple in range(1, order // s + 1):
            star[s * multiple] += multiple
        if 2 * s + 1 <= order:
            terms[s] = list(smallest_part_weight(s, order).coeffs)
    result: Dict[int, TruncatedSeries] = {}
    for j in range(1, j_max + 1):
        live = [s for s in terms if 2 * s + j <= order]
        for s in live:
            values = terms[s]
            m = s + j
            for k in range(s + m, order + 1):
                increment = values[k - m]
                if increment:
                    values[k] += increment
                    star[k] += increment
        for s in list(terms):
            if 2 * s + j > order:
                del terms[s]
        result[j] = TruncatedSeries(star, order)
    return result


def SPT_plus_series(order: int, cutoff: Optional[int] = None) -> TruncatedSeries:
    """sum_j spt_j+; spt_j+ starts at q^(j+1), so j <= order - 1 by default."""
    started = time.perf_counter()
    j_max = min(order - 1 if cutoff is None else cutoff, order)
    total = TruncatedSeries.zero(order)
    if j_max >= 1:
        spt = spt_j_batch(order, j_max)
        stars = spt_j_star_batch(order, j_max)
        for j in range(1, j_max + 1):
            total = total + spt[j] * stars[j]
    logger.debug(f"SPT+ to q^{order} built in {time.perf_counter() - started:.2f}s")
    return total


def spt_series(order: int) -> TruncatedSeries:
    """sum_j spt_j, the generating function of spt(n)."""
    total = TruncatedSeries.zero(order)
    if order >= 1:
        for series in spt_j_batch(order, order).values():
            total = total + series
    return total


def theorem1_lhs_rearranged(order: int, cutoff: Optional[int] = None) -> TruncatedSeries:
    """(1/(q)_inf) sum_{n1,n2>=1} A(n1) A(n2) q^(n1+n2) / (q)_{n1+n2}, A(n) = (q)_{n-1}/(1 - q^n).

    Terms are grouped by s = n1 + n2 and only computed to order - s before shifting.
    """
    last = order if cutoff is None else cutoff
    reciprocals = reciprocal_pochhammers(max(last, 0), order)
    weights = [None] + [finite_pochhammer(1, n - 1, order).div_one_minus(n) for n in range(1, last)]
    inner = TruncatedSeries.zero(order)
    for s in range(2, last + 1):
        remaining = order - s
        if remaining < 0:
            break
        grouped = TruncatedSeries.zero(remaining)
        for n1 in range(1, s):
            grouped = grouped + weights[n1].truncate(remaining) * weights[s - n1].truncate(remaining)
        inner = inner + (grouped * reciprocals[s].truncate(remaining)).shift(s)
    return euler_P(order) * inner
