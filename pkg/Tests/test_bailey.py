"""
Two-fold Bailey pair: the pair relation, the lemma at constant parameters,
its differentiated form and the SPT+ identity built on it.
"""

import sys
import unittest
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from tools.bailey import (
    JOSHI_VYAS,
    DegenerateParameterError,
    TwoFoldPair,
    eq5_sums,
    jv_alpha,
    jv_beta,
    lemma_sums,
    theorem1_rhs,
    theorem1_tail,
    verify_eq2_specialized,
    verify_eq5,
    verify_pair,
    verify_theorem1,
)
from tools.bivariate_stats import eta2k_gf
from tools.reports import Status, Variant
from tools.series_core import TruncatedSeries, finite_pochhammer
from tools.spt_series import SPT_plus_series


def _alpha_zero_only(n1, n2, order):
    if n1 == n2 == 0:
        return TruncatedSeries.one(order)
    return TruncatedSeries.zero(order)


class TestDiagonalPair(unittest.TestCase):

    def test_alpha_values(self):
        self.assertEqual(jv_alpha(0, 0, 10), 1)
        self.assertEqual(jv_alpha(1, 1, 10).coeffs[:3], (0, -1, -1))
        self.assertTrue(jv_alpha(1, 2, 10).is_zero())
        two = jv_alpha(2, 2, 10)
        self.assertEqual({n: c for n, c in enumerate(two) if c}, {5: 1, 7: 1})

    def test_beta_values(self):
        self.assertEqual(jv_beta(0, 0, 8), 1)
        self.assertEqual(jv_beta(1, 0, 8).coeffs, tuple(range(1, 10)))
        self.assertEqual(jv_beta(1, 1, 8).coeffs[:4], (1, 3, 7, 13))

    def test_negative_indices(self):
        with self.assertRaises(ValueError):
            jv_alpha(-1, 0, 5)
        with self.assertRaises(ValueError):
            jv_beta(0, -2, 5)

    def test_pair_relation_small(self):
        self.assertTrue(verify_pair(1, 10).passed)
        report = verify_pair(6, 30)
        self.assertEqual(report.status, Status.PASS)
        self.assertEqual(report.identity_id, "eq1_pair")
        self.assertGreaterEqual(report.runtime_ms, 0)

    def test_broken_pair_reports_first_cell(self):
        """Dropping every alpha except alpha(0, 0) first breaks cell (1, 1) at q^1."""
        broken = TwoFoldPair("alpha-00-only", _alpha_zero_only, jv_beta, diagonal=True)
        report = verify_pair(3, 10, broken)
        self.assertEqual(report.status, Status.FAIL)
        self.assertEqual(report.first_failure.n, 1)
        self.assertEqual(report.first_failure.lhs, 3)
        self.assertEqual(report.first_failure.rhs, 4)
        self.assertEqual(report.first_failure.difference, -1)
        self.assertIn("(1, 1)", report.detail)

    def test_zero_cell_uses_empty_pochhammer(self):
        self.assertEqual(finite_pochhammer(1, 0, 8), 1)
        self.assertEqual(jv_beta(0, 0, 8), jv_alpha(0, 0, 8))

    def test_n_plus_one_factor_reading_breaks_zero_cell(self):
        """Reading (q)_n with n + 1 factors makes beta(0, 0) = 1/(1 - q)^3, which fails at q^1."""
        def longer_beta(n1, n2, order):
            product = (finite_pochhammer(1, n1 + 1, order) * finite_pochhammer(1, n2 + 1, order)
                       * finite_pochhammer(1, n1 + n2 + 1, order))
            return product.invert()

        longer = TwoFoldPair("n-plus-one-factors", jv_alpha, longer_beta, diagonal=True)
        report = verify_pair(2, 6, longer)
        self.assertEqual(report.status, Status.FAIL)
        self.assertIn("(0, 0)", report.detail)
        self.assertEqual((report.first_failure.n, report.first_failure.lhs, report.first_failure.rhs),
                         (1, 3, 0))

    def test_alpha_support(self):
        self.assertEqual(list(JOSHI_VYAS.alpha_support(2, 3)), [(0, 0), (1, 1), (2, 2)])
        dense = TwoFoldPair("dense", jv_alpha, jv_beta)
        self.assertEqual(len(list(dense.alpha_support(1, 2))), 6)


class TestLemma(unittest.TestCase):
    """The two-fold lemma with constant rational parameters."""

    def test_integer_parameters(self):
        report = verify_eq2_specialized(2, 3, 5, 7, 12)
        self.assertTrue(report.passed, report.summary())

    def test_reciprocal_parameters(self):
        half, third, fifth, seventh = (Fraction(1, d) for d in (2, 3, 5, 7))
        self.assertTrue(verify_eq2_specialized(half, third, fifth, seventh, 12).passed)

    def test_string_parameters(self):
        self.assertTrue(verify_eq2_specialized("2", "-1/3", "4", "3/2", 8).passed)

    def test_degenerate_parameters(self):
        for params in ((0, 3, 5, 7), (1, 3, 5, 7), (2, Fraction(1, 2), 5, 7), (2, 3, 5, Fraction(1, 5))):
            with self.assertRaises(DegenerateParameterError):
                verify_eq2_specialized(*params, 6)

    def test_differentiated_lemma(self):
        report = verify_eq5(20)
        self.assertTrue(report.passed, report.summary())
        self.assertEqual(report.identity_id, "eq5")


class TestSummationCutoffs(unittest.TestCase):
    """Raising a cutoff past the minimum-degree bound leaves every retained coefficient alone."""

    def test_lemma_sums(self):
        lhs, alpha_sum = lemma_sums(2, 3, 5, 7, 10)
        wider_lhs, wider_alpha = lemma_sums(2, 3, 5, 7, 10, cutoff=16)
        self.assertEqual(wider_lhs, lhs)
        self.assertEqual(wider_alpha, alpha_sum)

    def test_lemma_cutoff_passes_through_verify(self):
        self.assertTrue(verify_eq2_specialized(2, 3, 5, 7, 8, cutoff=14).passed)

    def test_lemma_short_cutoff_drops_terms(self):
        lhs, _ = lemma_sums(2, 3, 5, 7, 10)
        short, _ = lemma_sums(2, 3, 5, 7, 10, cutoff=2)
        self.assertNotEqual(short, lhs)

    def test_eq5_sums(self):
        lhs, alpha_sum = eq5_sums(18)
        wider_lhs, wider_alpha = eq5_sums(18, cutoff=30)
        self.assertEqual(wider_lhs, lhs)
        self.assertEqual(wider_alpha, alpha_sum)
        self.assertTrue(verify_eq5(18, cutoff=30).passed)

    def test_tail(self):
        tail = theorem1_tail(30)
        self.assertEqual(theorem1_tail(30, cutoff=12), tail)
        self.assertEqual(theorem1_tail(30, cutoff=40), tail)

    def test_tail_short_cutoff_drops_terms(self):
        # m = 2 contributes from q^9 on
        self.assertNotEqual(theorem1_tail(10, cutoff=1), theorem1_tail(10))
        self.assertEqual(theorem1_tail(8, cutoff=1), theorem1_tail(8))


class TestTheorem1(unittest.TestCase):

    def test_tail_coefficients(self):
        tail = theorem1_tail(10)
        self.assertEqual((tail[0], tail[1], tail[2]), (0, 0, 0))
        self.assertEqual(tail[3], -1)
        self.assertEqual(tail[4], -6)

    def test_tail_is_minus_eta4_generating_function(self):
        tail = theorem1_tail(40)
        self.assertEqual(tail, eta2k_gf(2, 40, Variant.PRINTED))
        self.assertEqual(tail, -eta2k_gf(2, 40))

    def test_rhs_coefficients(self):
        self.assertEqual(theorem1_rhs(10).coeffs[2:5], (1, 6, 19))

    def test_rhs_equals_spt_plus(self):
        self.assertEqual(theorem1_rhs(50), SPT_plus_series(50))

    def test_verify(self):
        report = verify_theorem1(30)
        self.assertTrue(report.passed, report.summary())
        self.assertEqual(report.identity_id, "thm1")
        self.assertEqual(report.order, 30)

    def test_order_too_small(self):
        with self.assertRaises(ValueError):
            verify_theorem1(1)


if __name__ == '__main__':
    unittest.main()
