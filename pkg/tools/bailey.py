"""
Two-fold Bailey pairs relative to a1 = a2 = 1.

(alpha, beta) is a pair when for all n1, n2 >= 0

    beta(n1, n2) = sum_{r1<=n1, r2<=n2} alpha(r1, r2) / ((q)_{n1+r1} (q)_{n1-r1} (q)_{n2+r2} (q)_{n2-r2})

The module ships the diagonal pair alpha(n, n) = (-1)^n q^(n(3n-1)/2) (1 + q^n),
alpha(0, 0) = 1, beta(n1, n2) = 1/((q)_n1 (q)_n2 (q)_{n1+n2}) and checks the
pair relation, the two-fold lemma at constant rational parameters, its
differentiated form and the spt identity that follows from it.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

from tools.reports import (
    VerificationReport,
    compare_series,
    earliest,
    failing,
    passing,
    timed,
)
from tools.series_core import (
    TruncatedSeries,
    aqprod,
    euler_P,
    finite_pochhammer,
    infinite_pochhammer,
    lambert_phi,
    reciprocal_pochhammers,
    to_rational,
)
from tools.spt_series import SPT_plus_series, theorem1_lhs_rearranged

logger = logging.getLogger(__name__)

SeriesTerm = Callable[[int, int, int], TruncatedSeries]


class DegenerateParameterError(ValueError):
    """Raised when lemma parameters make a Pochhammer factor vanish or undefined."""


def _check_indices(n1: int, n2: int) -> None:
    if n1 < 0 or n2 < 0:
        raise ValueError(f"Bailey pair indices must be non-negative, got ({n1}, {n2})")


def jv_alpha(n1: int, n2: int, order: int) -> TruncatedSeries:
    _check_indices(n1, n2)
    if n1 != n2:
        return TruncatedSeries.zero(order)
    n = n1
    if n == 0:
        return TruncatedSeries.one(order)
    sign = -1 if n % 2 else 1
    exponent = n * (3 * n - 1) // 2
    return (TruncatedSeries.monomial(exponent, order, sign)
            + TruncatedSeries.monomial(exponent + n, order, sign))


def jv_beta(n1: int, n2: int, order: int) -> TruncatedSeries:
    _check_indices(n1, n2)
    reciprocals = reciprocal_pochhammers(n1 + n2, order)
    return reciprocals[n1] * reciprocals[n2] * reciprocals[n1 + n2]


@dataclass(frozen=True)
class TwoFoldPair:
    name: str
    alpha: SeriesTerm
    beta: SeriesTerm
    diagonal: bool = False

    def alpha_support(self, n1: int, n2: int) -> Iterable[Tuple[int, int]]:
        """Index pairs (r1, r2) that can carry a non-zero alpha below (n1, n2)."""
        if self.diagonal:
            return ((r, r) for r in range(min(n1, n2) + 1))
        return product(range(n1 + 1), range(n2 + 1))


JOSHI_VYAS = TwoFoldPair("joshi-vyas", jv_alpha, jv_beta, diagonal=True)


@timed
def verify_pair(bound: int, order: int, pair: TwoFoldPair = JOSHI_VYAS) -> VerificationReport:
    """Check the pair relation on every cell n1, n2 <= bound."""
    if bound < 0 or order < 0:
        raise ValueError("bound and order must be non-negative")
    identity = "eq1_pair"
    reciprocals = reciprocal_pochhammers(2 * bound, order)
    kernel: Dict[Tuple[int, int], TruncatedSeries] = {
        (n, r): reciprocals[n + r] * reciprocals[n - r]
        for n in range(bound + 1) for r in range(n + 1)
    }
    for n1 in range(bound + 1):
        for n2 in range(bound + 1):
            lhs = pair.beta(n1, n2, order)
            rhs = TruncatedSeries.zero(order)
            for r1, r2 in pair.alpha_support(n1, n2):
                alpha = pair.alpha(r1, r2, order)
                if alpha.is_zero():
                    continue
                rhs = rhs + alpha * kernel[n1, r1] * kernel[n2, r2]
            n = lhs.first_mismatch(rhs)
            if n is not None:
                return failing(identity, order, n, lhs[n], rhs[n],
                               detail=f"cell (n1, n2) = ({n1}, {n2})")
    logger.debug(f"{pair.name}: pair relation holds on {(bound + 1) ** 2} cells to q^{order}")
    return passing(identity, order, detail=f"{(bound + 1) ** 2} cells")


# ----------------------------------------------------------------------
# Two-fold lemma at constant parameters
# ----------------------------------------------------------------------
def _check_lemma_parameters(x: Fraction, y: Fraction, z: Fraction, w: Fraction) -> None:
    for name, value in (("x", x), ("y", y), ("z", z), ("w", w)):
        if value == 0:
            raise DegenerateParameterError(f"{name} = 0 leaves q/{name} undefined")
        if value == 1:
            raise DegenerateParameterError(f"{name} = 1 makes ({name}; q)_n vanish for n >= 1")
    if x * y == 1:
        raise DegenerateParameterError("xy = 1 degenerates the (q/xy; q)_inf factor")
    if z * w == 1:
        raise DegenerateParameterError("zw = 1 degenerates the (q/zw; q)_inf factor")


def _lemma_weights(u: Fraction, v: Fraction, order: int) -> List[TruncatedSeries]:
    """(u)_n (v)_n (1/uv)^n for n = 0..order; the q^n of (q/uv)^n is applied by shifting."""
    ratio = 1 / (u * v)
    weight = TruncatedSeries.one(order)
    weights = [weight]
    for n in range(1, order + 1):
        weight = weight.mul_one_minus(n - 1, u).mul_one_minus(n - 1, v).scale(ratio)
        weights.append(weight)
    return weights


def lemma_sums(x: Any, y: Any, z: Any, w: Any, order: int, pair: TwoFoldPair = JOSHI_VYAS,
               cutoff: Optional[int] = None) -> Tuple[TruncatedSeries, TruncatedSeries]:
    """The beta-side sum of the lemma and the alpha sum on its right-hand side.

    (n1, n2) runs over n1 + n2 <= cutoff (default order); every term carries
    q^(n1+n2), so a cutoff above order changes nothing.
    """
    x, y, z, w = (to_rational(v) for v in (x, y, z, w))
    _check_lemma_parameters(x, y, z, w)
    last = order if cutoff is None else cutoff
    left = _lemma_weights(x, y, order)
    right = _lemma_weights(z, w, order)

    lhs = TruncatedSeries.zero(order)
    alpha_sum = TruncatedSeries.zero(order)
    for n1 in range(last + 1):
        for n2 in range(last + 1 - n1):
            remaining = order - n1 - n2
            if remaining < 0:
                break
            weight = left[n1].truncate(remaining) * right[n2].truncate(remaining)
            lhs = lhs + (weight * pair.beta(n1, n2, remaining)).shift(n1 + n2)
            if pair.diagonal and n1 != n2:
                continue
            alpha = pair.alpha(n1, n2, remaining)
            if alpha.is_zero():
                continue
            term = weight * alpha
            for k in range(n1):
                term = term.div_one_minus(1 + k, 1 / x).div_one_minus(1 + k, 1 / y)
            for k in range(n2):
                term = term.div_one_minus(1 + k, 1 / z).div_one_minus(1 + k, 1 / w)
            alpha_sum = alpha_sum + term.shift(n1 + n2)
    return lhs, alpha_sum


@timed
def verify_eq2_specialized(x: Any, y: Any, z: Any, w: Any, order: int,
                           pair: TwoFoldPair = JOSHI_VYAS,
                           cutoff: Optional[int] = None) -> VerificationReport:
    """Two-fold lemma with a = a1 = a2 = 1 and constant x, y, z, w.

    sum (x)_n1 (y)_n1 (z)_n2 (w)_n2 (q/xy)^n1 (q/zw)^n2 beta(n1, n2)
      = (q/x)_inf (q/y)_inf (q/z)_inf (q/w)_inf / ((q)_inf^2 (q/xy)_inf (q/zw)_inf)
        * sum (x)_n1 (y)_n1 (z)_n2 (w)_n2 (q/xy)^n1 (q/zw)^n2 alpha(n1, n2)
          / ((q/x)_n1 (q/y)_n1 (q/z)_n2 (q/w)_n2)
    """
    x, y, z, w = (to_rational(v) for v in (x, y, z, w))
    lhs, alpha_sum = lemma_sums(x, y, z, w, order, pair, cutoff)

    numerator = TruncatedSeries.one(order)
    for c in (x, y, z, w):
        numerator = numerator * aqprod(1 / c, 1, None, order)
    denominator = (infinite_pochhammer(1, order) ** 2
                   * aqprod(1 / (x * y), 1, None, order)
                   * aqprod(1 / (z * w), 1, None, order))
    rhs = numerator * denominator.invert() * alpha_sum
    return compare_series("eq2_specialized", lhs, rhs, detail=f"(x, y, z, w) = ({x}, {y}, {z}, {w})")


def eq5_sums(order: int, pair: TwoFoldPair = JOSHI_VYAS,
             cutoff: Optional[int] = None) -> Tuple[TruncatedSeries, TruncatedSeries]:
    """Beta side and alpha side of the differentiated lemma, n1, n2 >= 1 and n1 + n2 <= cutoff."""
    last = order if cutoff is None else cutoff
    squares = [None] + [finite_pochhammer(1, n - 1, order) ** 2 for n in range(1, order + 1)]
    lhs = TruncatedSeries.zero(order)
    alpha_sum = TruncatedSeries.zero(order)
    for n1 in range(1, last):
        for n2 in range(1, last - n1 + 1):
            remaining = order - n1 - n2
            if remaining < 0:
                break
            weight = squares[n1].truncate(remaining) * squares[n2].truncate(remaining)
            lhs = lhs + (weight * pair.beta(n1, n2, remaining)).shift(n1 + n2)
            if pair.diagonal and n1 != n2:
                continue
            alpha = pair.alpha(n1, n2, remaining)
            if alpha.is_zero():
                continue
            term = alpha.div_one_minus(n1).div_one_minus(n1).div_one_minus(n2).div_one_minus(n2)
            alpha_sum = alpha_sum + term.shift(n1 + n2)
    return lhs, alpha_sum


@timed
def verify_eq5(order: int, pair: TwoFoldPair = JOSHI_VYAS,
               cutoff: Optional[int] = None) -> VerificationReport:
    """sum_{n1,n2>=1} (q)_{n1-1}^2 (q)_{n2-1}^2 beta(n1, n2) q^(n1+n2)
         = Phi_1^2 + sum_{n1,n2>=1} alpha(n1, n2) q^(n1+n2) / ((1-q^n1)^2 (1-q^n2)^2)."""
    lhs, alpha_sum = eq5_sums(order, pair, cutoff)
    phi1 = lambert_phi(1, order)
    return compare_series("eq5", lhs, phi1 * phi1 + alpha_sum)


def _tail_terms_needed(order: int) -> int:
    m = 0
    while 3 * (m + 1) * (m + 2) // 2 <= order:
        m += 1
    return m


def theorem1_tail(order: int, cutoff: Optional[int] = None) -> TruncatedSeries:
    """P * sum_{n != 0} (-1)^n q^(3n(n+1)/2) / (1 - q^n)^4, with |n| <= cutoff.

    The term n = -m is (-1)^m q^(3m(m-1)/2 + 4m) / (1 - q^m)^4. By default the
    sum stops at the last m whose lowest exponent 3m(m+1)/2 is within order.
    """
    last = _tail_terms_needed(order) if cutoff is None else cutoff
    inner = TruncatedSeries.zero(order)
    for m in range(1, last + 1):
        sign = -1 if m % 2 else 1
        for exponent in (3 * m * (m + 1) // 2, 3 * m * (m - 1) // 2 + 4 * m):
            if exponent > order:
                continue
            term = TruncatedSeries.monomial(exponent, order, sign)
            for _ in range(4):
                term = term.div_one_minus(m)
            inner = inner + term
    return euler_P(order) * inner


def theorem1_rhs(order: int) -> TruncatedSeries:
    phi1 = lambert_phi(1, order)
    return euler_P(order) * phi1 * phi1 + theorem1_tail(order)


@timed
def verify_theorem1(order: int) -> VerificationReport:
    """SPT+ and its rearranged double sum both equal P Phi_1^2 plus the alternating tail."""
    if order < 2:
        raise ValueError("order must be at least 2")
    rhs = theorem1_rhs(order)
    return earliest(
        [compare_series("thm1", SPT_plus_series(order), rhs, detail="SPT+ series"),
         compare_series("thm1", theorem1_lhs_rearranged(order), rhs, detail="rearranged double sum")],
        identity_id="thm1",
    )
