"""
Truncated formal power series in q over an exact coefficient ring.

A TruncatedSeries stores the coefficients of q^0 .. q^order densely. Arithmetic
between two series is exact up to the smaller of the two orders, so the order of
a result is always the order up to which every retained coefficient is known.

The default coefficient ring is the rationals: coefficients are Python ints
whenever the denominator is 1 and fractions.Fraction otherwise, which keeps the
integer-valued series (partition counts, divisor sums, rank tables) on the fast
int path. The bivariate statistics module plugs LaurentPoly coefficients into the
same engine through the ring protocol below.

Conventions:
    (X; q)_n  = (1 - X)(1 - Xq) ... (1 - Xq^(n-1)),   (X; q)_0 = 1
    delta_q   = q * d/dq, so that delta_q(P) = P * Phi_1 for P = 1/(q; q)_inf
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Any, Iterable, Iterator, List, MutableSequence, Optional, Tuple


class NonUnitError(ArithmeticError):
    """Raised when a series (or scalar) without an inverse is inverted."""


def normalize(value: Any) -> Any:
    """Collapse a Fraction with denominator 1 to a plain int."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def to_rational(value: Any) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a Fraction."""
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, Rational):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def rational_to_str(value: Any) -> str:
    """Serialize an exact rational as "p" or "p/q" (lowest terms, q > 1)."""
    return str(Fraction(value))


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q"; anything Fraction accepts as exact text is allowed."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


class RationalRing:
    """Coefficient ring Q with ints standing in for integral values."""

    name = "QQ"
    zero = 0
    one = 1

    @staticmethod
    def is_unit(value: Any) -> bool:
        return value != 0

    @staticmethod
    def inverse(value: Any) -> Any:
        if value == 0:
            raise NonUnitError("0 has no multiplicative inverse")
        if value == 1 or value == -1:
            return int(value)
        return normalize(Fraction(1) / value)

    def __repr__(self) -> str:
        return "RationalRing()"


QQ = RationalRing()


def div_one_minus_inplace(values: MutableSequence, m: int, start: int = 0) -> None:
    """Divide a coefficient list by (1 - q^m) in place, touching indices >= start.

    Only valid for m >= 1. Callers pass start = valuation + m to skip the
    leading stretch that cannot change.
    """
    for k in range(max(start, m), len(values)):
        prev = values[k - m]
        if prev:
            values[k] = values[k] + prev


class TruncatedSeries:
    """Power series in q known exactly up to and including q^order."""

    __slots__ = ("coeffs", "order", "ring")

    def __init__(self, coeffs: Iterable = (), order: Optional[int] = None, ring: Any = QQ):
        values = list(coeffs)
        if order is None:
            order = len(values) - 1
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        if len(values) > order + 1:
            del values[order + 1:]
        elif len(values) < order + 1:
            values.extend([ring.zero] * (order + 1 - len(values)))
        self.coeffs: Tuple = tuple(values)
        self.order: int = order
        self.ring = ring

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def zero(cls, order: int, ring: Any = QQ) -> "TruncatedSeries":
        return cls((), order, ring)

    @classmethod
    def one(cls, order: int, ring: Any = QQ) -> "TruncatedSeries":
        return cls((ring.one,), order, ring)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff: Any = None,
                 ring: Any = QQ) -> "TruncatedSeries":
        """coeff * q^exponent; the zero series when exponent exceeds order."""
        if exponent < 0:
            raise ValueError("power series have no negative exponents")
        if exponent > order:
            return cls.zero(order, ring)
        values = [ring.zero] * (order + 1)
        values[exponent] = ring.one if coeff is None else coeff
        return cls(values, order, ring)

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------
    def __getitem__(self, n: int) -> Any:
        if n < 0:
            return self.ring.zero
        if n > self.order:
            raise IndexError(f"q^{n} lies beyond the truncation order {self.order}")
        return self.coeffs[n]

    def __iter__(self) -> Iterator:
        return iter(self.coeffs)

    def __len__(self) -> int:
        return self.order + 1

    def valuation(self) -> Optional[int]:
        """Smallest exponent with a non-zero coefficient, None for zero."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def is_zero(self) -> bool:
        return self.valuation() is None

    def is_unit(self) -> bool:
        return self.ring.is_unit(self.coeffs[0])

    def first_mismatch(self, other: "TruncatedSeries", start: int = 0) -> Optional[int]:
        """First exponent >= start where the two series differ (common order)."""
        order = min(self.order, other.order)
        for n in range(start, order + 1):
            if self.coeffs[n] != other.coeffs[n]:
                return n
        return None

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TruncatedSeries):
            return self.first_mismatch(other) is None
        if isinstance(other, Rational):
            return self == TruncatedSeries((other,), self.order, self.ring)
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"TruncatedSeries({self}, order={self.order})"

    def __str__(self) -> str:
        terms: List[str] = []
        for n, c in enumerate(self.coeffs):
            if not c:
                continue
            if len(terms) == 12:
                terms.append("...")
                break
            power = "" if n == 0 else ("q" if n == 1 else f"q^{n}")
            if n == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(power)
            else:
                terms.append(f"({c})*{power}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(q^{self.order + 1})"

    # ------------------------------------------------------------------
    # Structural operations
    # ------------------------------------------------------------------
    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series known to q^{self.order} up to q^{order}")
        if order == self.order:
            return self
        return TruncatedSeries(self.coeffs[:order + 1], order, self.ring)

    def shift(self, k: int, order: Optional[int] = None) -> "TruncatedSeries":
        """Multiply by q^k. The product is known to self.order + k (or to order, if smaller)."""
        if k < 0:
            raise ValueError("shift must be non-negative")
        target = self.order + k if order is None else min(order, self.order + k)
        if k == 0:
            return self.truncate(target)
        return TruncatedSeries((self.ring.zero,) * k + self.coeffs, target, self.ring)

    def scale(self, c: Any) -> "TruncatedSeries":
        if not c:
            return TruncatedSeries.zero(self.order, self.ring)
        if c == 1:
            return self
        return TruncatedSeries([c * a for a in self.coeffs], self.order, self.ring)

    # ------------------------------------------------------------------
    # Ring arithmetic
    # ------------------------------------------------------------------
    def _result_ring(self, other: "TruncatedSeries") -> Any:
        return other.ring if self.ring is QQ else self.ring

    def __add__(self, other: Any) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            order = min(self.order, other.order)
            values = [a + b for a, b in zip(self.coeffs[:order + 1], other.coeffs[:order + 1])]
            return TruncatedSeries(values, order, self._result_ring(other))
        values = list(self.coeffs)
        values[0] = values[0] + other
        return TruncatedSeries(values, self.order, self.ring)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-a for a in self.coeffs], self.order, self.ring)

    def __sub__(self, other: Any) -> "TruncatedSeries":
        return self + (-other)

    def __rsub__(self, other: Any) -> "TruncatedSeries":
        return (-self) + other

    def __mul__(self, other: Any) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        order = min(self.order, other.order)
        ring = self._result_ring(other)
        out = [ring.zero] * (order + 1)
        vb = other.valuation()
        if vb is None:
            return TruncatedSeries(out, order, ring)
        a, b = self.coeffs, other.coeffs
        # schoolbook product, skipping zero coefficients of the left factor
        for i in range(0, order - vb + 1):
            ai = a[i]
            if not ai:
                continue
            lo = i + vb
            out[lo:] = [o + ai * bj for o, bj in zip(out[lo:], b[vb:order - i + 1])]
        return TruncatedSeries(out, order, ring)

    def __rmul__(self, other: Any) -> "TruncatedSeries":
        return self.scale(other)

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if exponent < 0:
            return self.invert() ** (-exponent)
        result = TruncatedSeries.one(self.order, self.ring)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires an invertible constant term."""
        a = self.coeffs
        if not self.ring.is_unit(a[0]):
            raise NonUnitError(f"constant term {a[0]!r} is not invertible; series is not a unit")
        inv0 = self.ring.inverse(a[0])
        unit_leading = inv0 == 1
        terms = [(i, c) for i, c in enumerate(a) if i and c]
        out = [inv0]
        for k in range(1, self.order + 1):
            acc = self.ring.zero
            for i, c in terms:
                if i > k:
                    break
                acc = acc + c * out[k - i]
            out.append(-acc if unit_leading else -(inv0 * acc))
        return TruncatedSeries(out, self.order, self.ring)

    def delta_q(self) -> "TruncatedSeries":
        return TruncatedSeries([n * c for n, c in enumerate(self.coeffs)], self.order, self.ring)

    def mul_one_minus(self, m: int, c: Any = None) -> "TruncatedSeries":
        """Multiply by (1 - c q^m) in O(order); c defaults to the ring's one."""
        if m < 0:
            raise ValueError("exponent must be non-negative")
        if m == 0:
            return self.scale(self.ring.one - (self.ring.one if c is None else c))
        src = self.coeffs
        out = list(src)
        for k in range(m, self.order + 1):
            prev = src[k - m]
            if prev:
                out[k] = out[k] - (prev if c is None else c * prev)
        return TruncatedSeries(out, self.order, self.ring)

    def div_one_minus(self, m: int, c: Any = None) -> "TruncatedSeries":
        """Divide by (1 - c q^m) in O(order); c defaults to the ring's one."""
        if m < 0:
            raise ValueError("exponent must be non-negative")
        if m == 0:
            d = self.ring.one - (self.ring.one if c is None else c)
            if not self.ring.is_unit(d):
                raise NonUnitError(f"1 - {c!r} is not invertible")
            return self.scale(self.ring.inverse(d))
        v = self.valuation()
        if v is None or v + m > self.order:
            return self
        out = list(self.coeffs)
        if c is None:
            div_one_minus_inplace(out, m, v + m)
        else:
            for k in range(v + m, self.order + 1):
                prev = out[k - m]
                if prev:
                    out[k] = out[k] + c * prev
        return TruncatedSeries(out, self.order, self.ring)


# ----------------------------------------------------------------------
# Operation-level entry points
# ----------------------------------------------------------------------
def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def series_invert(a: TruncatedSeries) -> TruncatedSeries:
    return a.invert()


def delta_q(a: TruncatedSeries) -> TruncatedSeries:
    """q * d/dq: the coefficient of q^n is multiplied by n."""
    return a.delta_q()


def aqprod(c: Any, m: int, n: Optional[int], order: int) -> TruncatedSeries:
    """(c q^m; q)_n truncated at q^order; n=None gives the infinite product.

    Factors 1 - c q^e with e > order are congruent to 1 and are skipped.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    if n is not None and n < 0:
        raise ValueError("n must be non-negative")
    coeff = None if c == 1 else c
    result = TruncatedSeries.one(order)
    k = 0
    while n is None or k < n:
        exponent = m + k
        if exponent > order:
            break
        result = result.mul_one_minus(exponent, coeff)
        k += 1
    return result


@lru_cache(maxsize=4096)
def finite_pochhammer(m: int, n: int, order: int) -> TruncatedSeries:
    """(q^m; q)_n = (1 - q^m)(1 - q^(m+1)) ... (1 - q^(m+n-1))."""
    if m < 1:
        raise ValueError("m must be at least 1")
    return aqprod(1, m, n, order)


@lru_cache(maxsize=256)
def infinite_pochhammer(m: int, order: int) -> TruncatedSeries:
    """(q^m; q)_inf truncated at q^order."""
    if m < 1:
        raise ValueError("m must be at least 1")
    return aqprod(1, m, None, order)


@lru_cache(maxsize=64)
def euler_P(order: int) -> TruncatedSeries:
    """P = 1/(q; q)_inf, whose coefficient of q^n is p(n)."""
    if order < 0:
        raise ValueError("order must be non-negative")
    return infinite_pochhammer(1, order).invert()


@lru_cache(maxsize=64)
def lambert_phi(i: int, order: int) -> TruncatedSeries:
    """Phi_i = sum_{n>=1} n^i q^n / (1 - q^n); coefficient of q^N is sum_{d|N} d^i."""
    if i < 1:
        raise ValueError("i must be at least 1")
    values = [0] * (order + 1)
    for n in range(1, order + 1):
        weight = n ** i
        for multiple in range(n, order + 1, n):
            values[multiple] += weight
    return TruncatedSeries(values, order)


def smallest_part_weight(j: int, order: int) -> TruncatedSeries:
    """q^j / (1 - q^j)^2 = q^j + 2q^(2j) + 3q^(3j) + ..."""
    if j < 1:
        raise ValueError("j must be at least 1")
    values = [0] * (order + 1)
    for multiple in range(1, order // j + 1):
        values[j * multiple] = multiple
    return TruncatedSeries(values, order)


@lru_cache(maxsize=1024)
def reciprocal_pochhammers(n_max: int, order: int) -> Tuple[TruncatedSeries, ...]:
    """(1/(q)_0, 1/(q)_1, ..., 1/(q)_{n_max}) truncated at q^order."""
    current = TruncatedSeries.one(order)
    table = [current]
    for k in range(1, n_max + 1):
        current = current.div_one_minus(k)
        table.append(current)
    return tuple(table)
