"""
Rank and crank tables N(m, n), M(m, n) from bivariate generating functions.

Bivariate series are TruncatedSeries whose coefficients are LaurentPoly values
in z; the power of z carries the statistic m. Moments and symmetrized moments
are read off the table rows.

Crank rows follow the generating-function convention, so row 1 is z - 1 + 1/z
rather than the single combinatorial crank -1 of the partition (1).
"""

from __future__ import annotations

import logging
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Any, Dict, Iterator, List, Mapping, Sequence, Tuple

from tools.reports import Variant
from tools.series_core import (
    NonUnitError,
    TruncatedSeries,
    euler_P,
    infinite_pochhammer,
)

logger = logging.getLogger(__name__)


class TableRangeError(IndexError):
    """Raised when a row beyond a table's upto is requested."""


class LaurentPoly:
    """Integer Laurent polynomial sum_m c_m z^m stored densely from z^lo."""

    __slots__ = ("lo", "coeffs")

    def __init__(self, lo: int = 0, coeffs: Sequence[int] = ()):
        start, end = 0, len(coeffs)
        while start < end and not coeffs[start]:
            start += 1
        while end > start and not coeffs[end - 1]:
            end -= 1
        self.lo = lo + start if end > start else 0
        self.coeffs = tuple(coeffs[start:end])

    @classmethod
    def _raw(cls, lo: int, coeffs: Tuple[int, ...]) -> "LaurentPoly":
        # caller guarantees coeffs is trimmed and non-empty (or empty with lo 0)
        poly = cls.__new__(cls)
        poly.lo = lo
        poly.coeffs = coeffs
        return poly

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls(exponent, (coeff,))

    @classmethod
    def from_dict(cls, counts: Mapping[int, int]) -> "LaurentPoly":
        nonzero = {m: c for m, c in counts.items() if c}
        if not nonzero:
            return cls()
        lo, hi = min(nonzero), max(nonzero)
        return cls(lo, [nonzero.get(m, 0) for m in range(lo, hi + 1)])

    # -- inspection ---------------------------------------------------
    @property
    def hi(self) -> int:
        return self.lo + len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, m: int) -> int:
        i = m - self.lo
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def items(self) -> Iterator[Tuple[int, int]]:
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.lo + i, c

    def to_dict(self) -> Dict[int, int]:
        return dict(self.items())

    def at_one(self) -> int:
        """Substitute z = 1 (the total count)."""
        return sum(self.coeffs)

    def moment(self, k: int) -> int:
        return sum(m ** k * c for m, c in self.items())

    def is_symmetric(self) -> bool:
        return not self.coeffs or (self.lo == -self.hi and self.coeffs == self.coeffs[::-1])

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self.lo == other.lo and self.coeffs == other.coeffs
        if isinstance(other, Rational):
            if not other:
                return not self.coeffs
            return self.lo == 0 and self.coeffs == (other,)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.lo, self.coeffs))

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_dict()})"

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other: Any) -> "LaurentPoly":
        if isinstance(other, Rational):
            if not other:
                return self
            other = LaurentPoly(0, (other,))
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        values = [0] * (hi - lo + 1)
        off = self.lo - lo
        values[off:off + len(self.coeffs)] = self.coeffs
        off = other.lo - lo
        for i, c in enumerate(other.coeffs):
            values[off + i] += c
        return LaurentPoly(lo, values)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self.lo, tuple(-c for c in self.coeffs))

    def __sub__(self, other: Any) -> "LaurentPoly":
        if isinstance(other, (LaurentPoly, Rational)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other: Any) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: Any) -> "LaurentPoly":
        if isinstance(other, Rational):
            if not other or not self.coeffs:
                return LaurentPoly()
            if other == 1:
                return self
            return LaurentPoly(self.lo, [other * c for c in self.coeffs])
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return LaurentPoly()
        if len(other.coeffs) == 1:
            return self._times_monomial(other.lo, other.coeffs[0])
        if len(self.coeffs) == 1:
            return other._times_monomial(self.lo, self.coeffs[0])
        values = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    values[i + j] += a * b
        return LaurentPoly(self.lo + other.lo, values)

    def __rmul__(self, other: Any) -> "LaurentPoly":
        if isinstance(other, Rational):
            return self * other
        return NotImplemented

    def _times_monomial(self, exponent: int, coeff: int) -> "LaurentPoly":
        if coeff == 1:
            return LaurentPoly._raw(self.lo + exponent, self.coeffs)
        return LaurentPoly(self.lo + exponent, [coeff * c for c in self.coeffs])

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by z^k."""
        if not self.coeffs:
            return self
        return LaurentPoly._raw(self.lo + k, self.coeffs)


class LaurentRing:
    """Coefficient ring Z[z, 1/z]; only +-z^e are units."""

    name = "Z[z,1/z]"
    zero = LaurentPoly()
    one = LaurentPoly(0, (1,))

    @staticmethod
    def is_unit(value: LaurentPoly) -> bool:
        return len(value.coeffs) == 1 and value.coeffs[0] in (1, -1)

    @staticmethod
    def inverse(value: LaurentPoly) -> LaurentPoly:
        if not LaurentRing.is_unit(value):
            raise NonUnitError(f"{value!r} is not a unit of Z[z, 1/z]")
        return LaurentPoly(-value.lo, (value.coeffs[0],))


LAURENT = LaurentRing()
Z = LaurentPoly.monomial(1)
Z_INV = LaurentPoly.monomial(-1)


@dataclass(frozen=True)
class StatTable:
    """rows[n] is the LaurentPoly sum_m count(m, n) z^m."""

    statistic: str
    rows: Tuple[LaurentPoly, ...]
    source: str = "generating-function"

    @property
    def upto(self) -> int:
        return len(self.rows) - 1

    def row(self, n: int) -> LaurentPoly:
        if not 0 <= n <= self.upto:
            raise TableRangeError(f"{self.statistic} table covers n = 0..{self.upto}, not n = {n}")
        return self.rows[n]

    def count(self, m: int, n: int) -> int:
        return self.row(n)[m]

    def truncate(self, upto: int) -> "StatTable":
        if upto > self.upto:
            raise TableRangeError(f"{self.statistic} table covers n = 0..{self.upto}, not n = {upto}")
        return StatTable(self.statistic, self.rows[:upto + 1], self.source)

    def to_rows(self) -> Iterator[Tuple[int, int, int]]:
        """(n, m, count) for every non-zero count, n then m ascending."""
        for n, row in enumerate(self.rows):
            for m, c in row.items():
                yield n, m, c


# ----------------------------------------------------------------------
# Table builders
# ----------------------------------------------------------------------
def rank_gf_series(upto: int) -> TruncatedSeries:
    """sum_{n>=0} q^(n^2) / ((zq; q)_n (q/z; q)_n) with Laurent coefficients."""
    total = TruncatedSeries.one(upto, LAURENT)
    term = total
    n = 1
    while n * n <= upto:
        # term_n = term_{n-1} * q^(2n-1) / ((1 - z q^n)(1 - q^n / z))
        term = term.shift(2 * n - 1, order=upto).div_one_minus(n, Z).div_one_minus(n, Z_INV)
        total = total + term
        n += 1
    return total


def rank_table(upto: int) -> StatTable:
    if upto < 0:
        raise ValueError("upto must be non-negative")
    started = time.perf_counter()
    table = StatTable("rank", rank_gf_series(upto).coeffs)
    logger.debug(f"Rank table to n={upto} built in {time.perf_counter() - started:.2f}s")
    return table


def crank_lambert_columns(upto: int) -> Dict[int, List[int]]:
    """z^m coefficients of sum_n (-1)^n q^(n(n+1)/2) (1 - z) / (1 - z q^n), as q-lists."""
    columns: Dict[int, List[int]] = {0: [0] * (upto + 1)}
    columns[0][0] = 1

    def bump(m: int, e: int, value: int) -> None:
        column = columns.get(m)
        if column is None:
            column = columns[m] = [0] * (upto + 1)
        column[e] += value

    n = 1
    while n * (n + 1) // 2 <= upto:
        sign = -1 if n % 2 else 1
        base = n * (n + 1) // 2
        j = 0
        while base + n * j <= upto:
            e = base + n * j
            # the n > 0 term feeds z^j and z^(j+1); its mirror n -> -n feeds z^-j and z^-(j+1)
            bump(j, e, sign)
            bump(j + 1, e, -sign)
            bump(-j, e, sign)
            bump(-j - 1, e, -sign)
            j += 1
        n += 1
    return columns


def crank_table(upto: int) -> StatTable:
    if upto < 0:
        raise ValueError("upto must be non-negative")
    started = time.perf_counter()
    p = euler_P(upto)
    columns = {m: TruncatedSeries(values, upto) * p
               for m, values in crank_lambert_columns(upto).items() if any(values)}
    rows = tuple(
        LaurentPoly.from_dict({m: series[n] for m, series in columns.items()})
        for n in range(upto + 1)
    )
    logger.debug(f"Crank table to n={upto} built in {time.perf_counter() - started:.2f}s")
    return StatTable("crank", rows)


def crank_product_gf(order: int) -> TruncatedSeries:
    """(q; q)_inf / ((zq; q)_inf (q/z; q)_inf) expanded directly; cubic cost, small orders only."""
    series = TruncatedSeries.one(order, LAURENT)
    for k in range(1, order + 1):
        series = series.div_one_minus(k, Z).div_one_minus(k, Z_INV)
    return series * infinite_pochhammer(1, order)


# ----------------------------------------------------------------------
# Moments
# ----------------------------------------------------------------------
def rank_moment(k: int, n: int, table: StatTable) -> Fraction:
    """N_k(n) = sum_m m^k N(m, n)."""
    if k < 0:
        raise ValueError("moment order must be non-negative")
    return Fraction(table.row(n).moment(k))


def crank_moment(k: int, n: int, table: StatTable) -> Fraction:
    """M_k(n) = sum_m m^k M(m, n)."""
    if k < 0:
        raise ValueError("moment order must be non-negative")
    return Fraction(table.row(n).moment(k))


def generalized_binomial(x: int, k: int) -> int:
    """x(x-1)...(x-k+1)/k! for any integer x."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if x >= 0:
        return math.comb(x, k)
    return (-1) ** k * math.comb(k - x - 1, k)


def _symmetrized(k: int, row: LaurentPoly) -> Fraction:
    if k < 1:
        raise ValueError("k must be at least 1")
    offset = (k - 1) // 2
    return Fraction(sum(generalized_binomial(m + offset, k) * c for m, c in row.items()))


def eta_k(k: int, n: int, table: StatTable) -> Fraction:
    """Symmetrized rank moment over a rank table."""
    return _symmetrized(k, table.row(n))


def mu_k(k: int, n: int, table: StatTable) -> Fraction:
    """Symmetrized crank moment over a crank table."""
    return _symmetrized(k, table.row(n))


def eta2k_gf(k: int, order: int, variant: Variant = Variant.CORRECTED) -> TruncatedSeries:
    """(1/(q)_inf) sum_{n != 0} eps(n) q^(n(3n+1)/2 + kn) / (1 - q^n)^(2k).

    eps(n) = (-1)^n for the printed sign and (-1)^(n-1) for the corrected one.
    A term n = -m is rewritten as eps(m) q^(m(3m-1)/2 + km) / (1 - q^m)^(2k).
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if variant is Variant.NOT_APPLICABLE:
        raise ValueError("eta2k_gf needs the printed or corrected sign")
    inner = TruncatedSeries.zero(order)
    n = 1
    while n * (3 * n - 1) // 2 + k * n <= order:
        sign = -1 if n % 2 else 1
        if variant is Variant.CORRECTED:
            sign = -sign
        for exponent in (n * (3 * n + 1) // 2 + k * n, n * (3 * n - 1) // 2 + k * n):
            if exponent > order:
                continue
            term = TruncatedSeries.monomial(exponent, order, sign)
            for _ in range(2 * k):
                term = term.div_one_minus(n)
            inner = inner + term
        n += 1
    return euler_P(order) * inner
