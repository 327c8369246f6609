"""
Series engine tests: ring arithmetic, Pochhammer products, P, Phi_i and delta_q.
"""

import random
import sys
import unittest
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from tools.partition_oracle import partition_count
from tools.series_core import (
    NonUnitError,
    TruncatedSeries,
    aqprod,
    delta_q,
    euler_P,
    finite_pochhammer,
    infinite_pochhammer,
    lambert_phi,
    parse_rational,
    rational_to_str,
    reciprocal_pochhammers,
    series_add,
    series_invert,
    series_mul,
    smallest_part_weight,
)


def random_series(rng, order, unit=False):
    coeffs = [rng.randint(-5, 5) for _ in range(order + 1)]
    if unit:
        coeffs[0] = rng.choice([-3, -1, 1, 2])
    return TruncatedSeries(coeffs, order)


class TestTruncatedSeries(unittest.TestCase):
    """Construction, indexing and the structural helpers."""

    def test_padding_and_truncation(self):
        """Short coefficient lists are zero padded, long ones cut at the order."""
        s = TruncatedSeries([1, 2], 4)
        self.assertEqual(s.coeffs, (1, 2, 0, 0, 0))
        self.assertEqual(TruncatedSeries(range(10), 3).coeffs, (0, 1, 2, 3))

    def test_index_beyond_order_raises(self):
        """Coefficients past the truncation order are unknown."""
        with self.assertRaises(IndexError):
            TruncatedSeries([1], 3)[4]

    def test_binary_result_has_smaller_order(self):
        """Sum and product are known only to the smaller order."""
        a, b = TruncatedSeries([1, 1], 5), TruncatedSeries([1, 1], 8)
        self.assertEqual((a + b).order, 5)
        self.assertEqual((a * b).order, 5)

    def test_shift_raises_order(self):
        """q^k * s is known k orders further."""
        s = TruncatedSeries([1, 2, 3], 2).shift(2)
        self.assertEqual(s.order, 4)
        self.assertEqual(s.coeffs, (0, 0, 1, 2, 3))

    def test_valuation(self):
        self.assertEqual(TruncatedSeries([0, 0, 5], 4).valuation(), 2)
        self.assertIsNone(TruncatedSeries.zero(4).valuation())

    def test_monomial_beyond_order_is_zero(self):
        self.assertTrue(TruncatedSeries.monomial(7, 5).is_zero())

    def test_div_one_minus_matches_inverse(self):
        """Dividing by (1 - c q^m) equals multiplying by its inverse."""
        rng = random.Random(7)
        s = random_series(rng, 15)
        for m, c in ((1, None), (3, None), (2, Fraction(1, 3)), (4, -2)):
            factor = TruncatedSeries.one(15) - TruncatedSeries.monomial(m, 15, 1 if c is None else c)
            self.assertEqual(s.div_one_minus(m, c), s * factor.invert())
            self.assertEqual(s.mul_one_minus(m, c), s * factor)


class TestRingOperations(unittest.TestCase):
    """series_add, series_mul and series_invert."""

    def setUp(self):
        self.rng = random.Random(2024)

    def test_add_cancellation(self):
        """(1+q) + (1-q) = 2"""
        self.assertEqual(series_add(TruncatedSeries([1, 1], 6), TruncatedSeries([1, -1], 6)), 2)

    def test_add_zero_identity(self):
        s = random_series(self.rng, 10)
        self.assertEqual(series_add(s, TruncatedSeries.zero(10)), s)

    def test_phi1_doubled(self):
        """Phi_1 + Phi_1 has coefficient 2 sigma(n)."""
        doubled = series_add(lambert_phi(1, 6), lambert_phi(1, 6))
        self.assertEqual(doubled.coeffs, (0, 2, 6, 8, 14, 12, 24))

    def test_geometric_product(self):
        """(1-q)(1+q+q^2+...) = 1"""
        geometric = TruncatedSeries([1] * 21, 20)
        self.assertEqual(series_mul(TruncatedSeries([1, -1], 20), geometric), 1)

    def test_euler_product_times_p(self):
        """P * (q;q)_inf = 1 to order 50"""
        self.assertEqual(series_mul(euler_P(50), infinite_pochhammer(1, 50)), 1)

    def test_phi1_squared(self):
        """Phi_1^2 at q^4 is 17"""
        phi1 = lambert_phi(1, 10)
        self.assertEqual(series_mul(phi1, phi1)[4], 17)

    def test_invert_geometric(self):
        inverse = series_invert(TruncatedSeries([1, -1], 12))
        self.assertEqual(inverse.coeffs, (1,) * 13)

    def test_invert_euler_product(self):
        """1/(q;q)_inf gives p(0..5)"""
        self.assertEqual(series_invert(infinite_pochhammer(1, 5)).coeffs, (1, 1, 2, 3, 5, 7))

    def test_invert_non_unit_raises(self):
        with self.assertRaises(NonUnitError):
            series_invert(TruncatedSeries([0, 1, 1], 5))

    def test_invert_rational_constant(self):
        """A constant term 2 inverts over the rationals."""
        s = TruncatedSeries([2, 1, 3], 8)
        inverse = series_invert(s)
        self.assertEqual(inverse[0], Fraction(1, 2))
        self.assertEqual(s * inverse, 1)

    def test_ring_axioms_on_random_series(self):
        """Associativity, commutativity and distributivity spot checks."""
        for _ in range(20):
            order = self.rng.randint(0, 20)
            a, b, c = (random_series(self.rng, order) for _ in range(3))
            self.assertEqual(a + b, b + a)
            self.assertEqual(a * b, b * a)
            self.assertEqual((a + b) + c, a + (b + c))
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a * (b + c), a * b + a * c)

    def test_inverse_of_random_units(self):
        for _ in range(20):
            a = random_series(self.rng, self.rng.randint(0, 20), unit=True)
            self.assertEqual(series_mul(a, series_invert(a)), 1)

    def test_power(self):
        s = TruncatedSeries([1, 1], 6)
        self.assertEqual((s ** 3).coeffs, (1, 3, 3, 1, 0, 0, 0))
        self.assertEqual(s ** -1, s.invert())


class TestPochhammer(unittest.TestCase):
    """Finite, infinite and constant-parameter Pochhammer products."""

    def test_two_factors(self):
        """(q;q)_2 = 1 - q - q^2 + q^3"""
        self.assertEqual(finite_pochhammer(1, 2, 6).coeffs, (1, -1, -1, 1, 0, 0, 0))

    def test_empty_product(self):
        self.assertEqual(finite_pochhammer(1, 0, 5), 1)

    def test_shifted_three_factors(self):
        """(q^2;q)_3 = 1 - q^2 - q^3 - q^4 + q^5 + q^6 + q^7 - q^9"""
        self.assertEqual(finite_pochhammer(2, 3, 10).coeffs,
                         (1, 0, -1, -1, -1, 1, 1, 1, 0, -1, 0))

    def test_recursion(self):
        """(q^m;q)_{n+1} = (q^m;q)_n (1 - q^(m+n))"""
        order = 30
        for m in range(1, 6):
            for n in range(0, 21):
                factor = TruncatedSeries.one(order) - TruncatedSeries.monomial(m + n, order)
                self.assertEqual(finite_pochhammer(m, n + 1, order),
                                 series_mul(finite_pochhammer(m, n, order), factor))

    def test_pentagonal(self):
        """(q;q)_inf = 1 - q - q^2 + q^5 + q^7 + ..."""
        self.assertEqual(infinite_pochhammer(1, 7).coeffs, (1, -1, -1, 0, 0, 1, 0, 1))

    def test_factors_beyond_order(self):
        self.assertEqual(infinite_pochhammer(11, 10), 1)

    def test_shifted_infinite_has_no_linear_term(self):
        self.assertEqual(infinite_pochhammer(2, 10)[1], 0)

    def test_infinite_agrees_with_finite(self):
        for order in (5, 17, 40):
            self.assertEqual(infinite_pochhammer(1, order), finite_pochhammer(1, order, order))

    def test_invalid_arguments(self):
        with self.assertRaises(ValueError):
            finite_pochhammer(0, 3, 5)
        with self.assertRaises(ValueError):
            infinite_pochhammer(0, 5)

    def test_rational_constant(self):
        """(q/2; q)_2 = (1 - q/2)(1 - q^2/2)"""
        half = Fraction(1, 2)
        self.assertEqual(aqprod(half, 1, 2, 5).coeffs,
                         (1, -half, -half, Fraction(1, 4), 0, 0))

    def test_reciprocal_table(self):
        table = reciprocal_pochhammers(4, 12)
        self.assertEqual(len(table), 5)
        for k, series in enumerate(table):
            self.assertEqual(series, finite_pochhammer(1, k, 12).invert())


class TestConstructors(unittest.TestCase):
    """P, Phi_i, delta_q and the smallest-part weight."""

    def test_partition_numbers(self):
        p = euler_P(10)
        self.assertEqual(p.coeffs[:6], (1, 1, 2, 3, 5, 7))
        self.assertEqual(p[10], 42)

    def test_partition_numbers_match_enumeration(self):
        p = euler_P(40)
        for n in range(41):
            self.assertEqual(p[n], partition_count(n))

    def test_phi_small_values(self):
        self.assertEqual(lambert_phi(1, 4).coeffs[1:], (1, 3, 4, 7))
        self.assertEqual(lambert_phi(3, 4)[2], 9)
        for i in range(1, 6):
            self.assertEqual(lambert_phi(i, 3)[1], 1)

    def test_phi_against_divisor_sums(self):
        for i in (1, 3):
            phi = lambert_phi(i, 200)
            for n in range(1, 201):
                expected = sum(d ** i for d in range(1, n + 1) if n % d == 0)
                self.assertEqual(phi[n], expected, f"Phi_{i} at q^{n}")

    def test_delta_q_of_p(self):
        """delta_q(P) = P Phi_1 to order 50"""
        p = euler_P(50)
        self.assertEqual(delta_q(p), p * lambert_phi(1, 50))

    def test_delta_q_constant(self):
        self.assertTrue(delta_q(TruncatedSeries.one(5)).is_zero())

    def test_second_derivative_of_p(self):
        """delta_q^2 P has coefficients n^2 p(n)"""
        self.assertEqual(delta_q(delta_q(euler_P(5))).coeffs[1:4], (1, 8, 27))

    def test_leibniz_rule(self):
        rng = random.Random(11)
        for _ in range(15):
            order = rng.randint(0, 20)
            a, b = random_series(rng, order), random_series(rng, order)
            self.assertEqual(delta_q(a * b), delta_q(a) * b + a * delta_q(b))

    def test_smallest_part_weight(self):
        self.assertEqual(smallest_part_weight(2, 8).coeffs, (0, 0, 1, 0, 2, 0, 3, 0, 4))
        geometric = TruncatedSeries([1, -1], 12).invert()
        self.assertEqual(smallest_part_weight(1, 12), delta_q(geometric))
        self.assertTrue(smallest_part_weight(9, 8).is_zero())

    def test_integer_constructors_stay_integral(self):
        """Integer constructors never produce a non-trivial denominator."""
        for series in (euler_P(60), lambert_phi(3, 60), finite_pochhammer(2, 7, 60),
                       reciprocal_pochhammers(6, 60)[6]):
            self.assertTrue(all(Fraction(c).denominator == 1 for c in series))


class TestRationalSerialisation(unittest.TestCase):

    def test_to_str(self):
        self.assertEqual(rational_to_str(Fraction(-3, 6)), "-1/2")
        self.assertEqual(rational_to_str(4), "4")
        self.assertEqual(rational_to_str(Fraction(10, 5)), "2")

    def test_parse(self):
        self.assertEqual(parse_rational("6/4"), Fraction(3, 2))
        self.assertEqual(parse_rational(" -7 "), -7)
        with self.assertRaises(ValueError):
            parse_rational("seven")
        with self.assertRaises(ValueError):
            parse_rational("1/0")


if __name__ == '__main__':
    unittest.main()
