"""
Verification reports, their JSON shape, and LabConfig loading from the environment.
"""

import json
import os
import sys
import tempfile
import unittest
from fractions import Fraction
from pathlib import Path
from unittest import mock

sys.path.insert(0, str(Path(__file__).parent.parent))

from tools.config import ConfigError, LabConfig, load_env_files
from tools.reports import (
    FirstFailure,
    Status,
    Variant,
    VerificationReport,
    compare_series,
    compare_values,
    earliest,
    failing,
    passing,
    timed,
)
from tools.series_core import TruncatedSeries


class TestVerificationReport(unittest.TestCase):

    def test_failing_report_needs_a_failure(self):
        with self.assertRaises(ValueError):
            VerificationReport("eq8", Variant.NOT_APPLICABLE, 10, Status.FAIL)
        with self.assertRaises(ValueError):
            VerificationReport("eq8", Variant.NOT_APPLICABLE, 10, Status.PASS,
                               FirstFailure(1, Fraction(1), Fraction(0)))

    def test_json_shape(self):
        report = failing("thm2", 40, 1, 0, Fraction(-1, 6), Variant.PRINTED)
        payload = json.loads(report.to_json())
        self.assertEqual(payload, {
            "identity": "thm2",
            "variant": "printed",
            "order": 40,
            "status": "fail",
            "first_failure": {"n": 1, "lhs": "0", "rhs": "-1/6", "diff": "1/6"},
            "runtime_ms": 0,
        })

    def test_passing_json(self):
        payload = passing("eq8", 200).to_dict()
        self.assertIsNone(payload["first_failure"])
        self.assertEqual(payload["variant"], "n/a")
        self.assertEqual(payload["status"], "pass")

    def test_summary(self):
        self.assertIn("pass to q^12", passing("eq9", 12).summary())
        self.assertIn("diff=1", failing("eq10", 40, 1, 1, 0, Variant.PRINTED).summary())

    def test_runtime_not_compared(self):
        @timed
        def check():
            return passing("eq8", 5)
        self.assertEqual(check(), passing("eq8", 5))

    def test_variant_parse(self):
        self.assertIs(Variant.parse("n/a"), Variant.NOT_APPLICABLE)
        with self.assertRaises(ValueError):
            Variant.parse("fixed")


class TestComparisons(unittest.TestCase):

    def test_compare_values_stops_at_first_mismatch(self):
        report = compare_values("x", [(0, 1, 1), (1, 2, 3), (2, 5, 0)], 2)
        self.assertEqual(report.first_failure.n, 1)
        self.assertEqual(report.first_failure.difference, -1)

    def test_compare_series_with_start(self):
        a = TruncatedSeries([1, 2, 3, 4], 3)
        b = TruncatedSeries([9, 2, 3, 5], 5)
        self.assertEqual(compare_series("x", a, b).first_failure.n, 0)
        report = compare_series("x", a, b, start=1)
        self.assertEqual(report.order, 3)
        self.assertEqual((report.first_failure.n, report.first_failure.lhs), (3, 4))

    def test_earliest(self):
        merged = earliest([failing("a", 30, 9, 1, 0), passing("b", 20), failing("c", 40, 4, 2, 0)],
                          identity_id="merged")
        self.assertEqual(merged.identity_id, "merged")
        self.assertEqual(merged.order, 20)
        self.assertEqual(merged.first_failure.n, 4)
        self.assertTrue(earliest([passing("a", 5), passing("a", 7)]).passed)
        with self.assertRaises(ValueError):
            earliest([])


class TestLabConfig(unittest.TestCase):

    def test_defaults(self):
        config = LabConfig.from_env({})
        self.assertEqual(config, LabConfig())
        self.assertEqual((config.oracle_bound, config.congruence_order, config.pair_bound),
                         (40, 490, 25))

    def test_environment_overrides(self):
        config = LabConfig.from_env({
            "SPTLAB_ORACLE_BOUND": "30",
            "SPTLAB_MOMENT_ORDER": " 120 ",
            "SPTLAB_LOG_LEVEL": "debug",
            "SPTLAB_NO_COLOR": "yes",
        })
        self.assertEqual(config.oracle_bound, 30)
        self.assertEqual(config.moment_order, 120)
        self.assertEqual(config.log_level, "DEBUG")
        self.assertTrue(config.no_color)

    def test_malformed_values(self):
        with self.assertRaises(ConfigError):
            LabConfig.from_env({"SPTLAB_ORACLE_BOUND": "forty"})
        with self.assertRaises(ConfigError):
            LabConfig.from_env({"SPTLAB_PAIR_BOUND": "0"})
        with self.assertRaises(ConfigError):
            LabConfig.from_env({"SPTLAB_LOG_LEVEL": "LOUD"})

    def test_large_oracle_bound_warns(self):
        with self.assertLogs("tools.config", level="WARNING"):
            LabConfig.from_env({"SPTLAB_ORACLE_BOUND": "60"})
        with self.assertLogs("tools.config", level="WARNING"):
            LabConfig().with_overrides(oracle_bound=75)

    def test_with_overrides_ignores_none(self):
        config = LabConfig()
        self.assertIs(config.with_overrides(oracle_bound=None), config)
        self.assertEqual(config.with_overrides(pair_bound=3).pair_bound, 3)

    def test_dotenv_file(self):
        name = "SPTLAB_TEST_DOTENV_MARKER"
        os.environ.pop(name, None)
        with tempfile.TemporaryDirectory() as tmp:
            env_file = Path(tmp) / ".env"
            env_file.write_text(f"{name}=42\n", encoding="utf-8")
            try:
                load_env_files(env_file)
                self.assertEqual(os.environ.get(name), "42")
            finally:
                os.environ.pop(name, None)

    def test_dotenv_does_not_override_environment(self):
        name = "SPTLAB_TEST_DOTENV_PRIORITY"
        os.environ[name] = "from-env"
        with tempfile.TemporaryDirectory() as tmp:
            env_file = Path(tmp) / ".env"
            env_file.write_text(f"{name}=from-file\n", encoding="utf-8")
            try:
                load_env_files(env_file)
                self.assertEqual(os.environ[name], "from-env")
            finally:
                os.environ.pop(name, None)

    def test_missing_dotenv_package_skips_files(self):
        name = "SPTLAB_TEST_DOTENV_ABSENT"
        os.environ.pop(name, None)
        with tempfile.TemporaryDirectory() as tmp:
            env_file = Path(tmp) / ".env"
            env_file.write_text(f"{name}=1\n", encoding="utf-8")
            with mock.patch.dict(sys.modules, {"dotenv": None}):
                with self.assertLogs("tools.config", level="WARNING") as logs:
                    loaded = load_env_files(env_file)
        self.assertEqual(loaded, [])
        self.assertNotIn(name, os.environ)
        self.assertIn("python-dotenv is not installed", logs.output[0])

    def test_loaded_files_are_returned(self):
        with tempfile.TemporaryDirectory() as tmp:
            env_file = Path(tmp) / ".env"
            env_file.write_text("# comment only\n", encoding="utf-8")
            missing = Path(tmp) / "absent.env"
            self.assertEqual(load_env_files(env_file, missing), [env_file])


if __name__ == '__main__':
    unittest.main()
