#!/usr/bin/env python3
"""
sptlab main entrypoint

Exact q-series laboratory for smallest-part statistics: computes partition
statistics from generating functions and by enumeration, and verifies the
SPT+ identities and congruences to a chosen truncation order.

Usage:
    python sptlab.py compute --stat p --upto 20         # statistic table as CSV
    python sptlab.py verify --identity thm2 --variant printed
    python sptlab.py verify-all --order 60
    python sptlab.py congruence --stat SPT_plus --mod 7 --stride 7 --upto 490
"""

import argparse
import logging
import sys
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from tools.bivariate_stats import crank_moment, crank_table, eta_k, mu_k, rank_moment, rank_table
from tools.command_helpers import (
    EXIT_EXPECTATION, EXIT_OK, EXIT_USAGE, CommandContext, handle_common_errors,
    reports_payload, write_csv, write_json,
)
from tools.config import ConfigError, LabConfig, load_env_files
from tools.partition_oracle import enumerate_partitions, oracle_stat_tables
from tools.reports import Variant
from tools.series_core import euler_P, lambert_phi, rational_to_str
from tools.spt_series import SPT_plus_series, spt_j_series, spt_j_star_series, spt_series
from tools.ui_helpers import UI, Color, ErrorHelper, Icon, Table
from tools.verifier import REGISTRY, IdentityId, Laboratory, StatKind, resolve_identity

__version__ = "1.0.0"

STATS = ("p", "spt", "spt_j", "spt_j_star", "SPT_plus", "N_k", "M_k", "eta_k", "mu_k")


def setup_logging(level: str = "INFO"):
    logging.basicConfig(
        level=getattr(logging, level, logging.INFO),
        format='[%(asctime)s] %(levelname)s: %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S',
        force=True,
    )


def _config(args) -> LabConfig:
    config = getattr(args, "config", None) or LabConfig()
    return config.with_overrides(oracle_bound=getattr(args, "oracle_bound", None))


def _require(value: Optional[int], flag: str, stat: str) -> int:
    if value is None:
        raise ValueError(f"--stat {stat} needs {flag}")
    return value


# ----------------------------------------------------------------------
# compute
# ----------------------------------------------------------------------
def statistic_values(stat: str, upto: int, j: Optional[int] = None,
                     k: Optional[int] = None) -> List[Fraction]:
    """stat(n) for n = 0..upto from the generating functions."""
    if upto < 0:
        raise ValueError("--upto must be non-negative")
    if stat == "p":
        return [Fraction(c) for c in euler_P(upto)]
    if stat == "spt":
        return [Fraction(c) for c in spt_series(upto)]
    if stat == "spt_j":
        return [Fraction(c) for c in spt_j_series(_require(j, "--j", stat), upto)]
    if stat == "spt_j_star":
        return [Fraction(c) for c in spt_j_star_series(_require(j, "--j", stat), upto)]
    if stat == "SPT_plus":
        series = SPT_plus_series(max(upto, 2))
        return [Fraction(c) for c in series.coeffs[:upto + 1]]
    k = _require(k, "--k", stat)
    if stat == "N_k":
        table = rank_table(upto)
        return [rank_moment(k, n, table) for n in range(upto + 1)]
    if stat == "eta_k":
        table = rank_table(upto)
        return [eta_k(k, n, table) for n in range(upto + 1)]
    table = crank_table(upto)
    if stat == "M_k":
        return [crank_moment(k, n, table) for n in range(upto + 1)]
    return [mu_k(k, n, table) for n in range(upto + 1)]


@handle_common_errors
def compute_command(args) -> int:
    values = statistic_values(args.stat, args.upto, args.j, args.k)
    if args.format == "json":
        write_json({
            "stat": args.stat,
            "upto": args.upto,
            "values": [{"n": n, "value": rational_to_str(v)} for n, v in enumerate(values)],
        })
    else:
        write_csv(["n", "value"], ((n, rational_to_str(v)) for n, v in enumerate(values)))
    return EXIT_OK


# ----------------------------------------------------------------------
# verify / verify-all
# ----------------------------------------------------------------------
def _render_reports(reports, lab: Laboratory):
    table = Table(["identity", "variant", "order", "status", "first failure", "expected", "ms"])
    for report in reports:
        met = lab.expectation_met(report)
        expected = REGISTRY[IdentityId(report.identity_id)].expected[report.variant]
        ff = report.first_failure
        failure = (f"n={ff.n} lhs={rational_to_str(ff.lhs)} rhs={rational_to_str(ff.rhs)} "
                   f"diff={rational_to_str(ff.difference)}" if ff else "")
        mark = Icon.CHECK if met else Icon.CROSS
        table.add_row([report.identity_id, report.variant.value, report.order,
                       f"{mark} {report.status.value}", failure, expected.describe(),
                       report.runtime_ms])
    table.render()


@handle_common_errors
def verify_command(args) -> int:
    identity = resolve_identity(args.identity)
    variant = Variant.parse(args.variant) if args.variant else None
    lab = Laboratory(_config(args))
    report = lab.run_identity(identity, args.order, variant)
    met = lab.expectation_met(report)
    if args.format == "json":
        write_json(report.to_dict())
    else:
        _render_reports([report], lab)
        if met and not report.passed:
            UI.info("Failure matches the documented misprint")
    return EXIT_OK if met else EXIT_EXPECTATION


@handle_common_errors
def verify_all_command(args) -> int:
    lab = Laboratory(_config(args))
    quiet = args.format == "json"
    with CommandContext("sptlab verify-all", quiet=quiet) as ctx:
        reports = lab.run_all(args.order)
        all_met = all(lab.expectation_met(r) for r in reports)
        if quiet:
            write_json(reports_payload(reports))
        else:
            _render_reports(reports, lab)
        ctx.set_success(all_met)
    return EXIT_OK if all_met else EXIT_EXPECTATION


# ----------------------------------------------------------------------
# congruence / table / list / doctor
# ----------------------------------------------------------------------
@handle_common_errors
def congruence_command(args) -> int:
    stat = StatKind(args.stat)
    lab = Laboratory(_config(args))
    report = lab.check_congruence(stat, args.mod, args.stride, args.upto)
    if args.format == "json":
        write_json(report.to_dict())
    elif report.passed:
        UI.success(f"{stat.value}({args.stride}n) = 0 (mod {args.mod}) for all {args.stride}n <= {args.upto}")
    else:
        ff = report.first_failure
        UI.warning(f"{stat.value}({ff.n}) = {rational_to_str(ff.lhs)} (mod {args.mod}), not 0")
    if stat is StatKind.SPT2 and args.format != "json":
        UI.info("spt2 is an observation-only probe")
    return EXIT_OK if report.passed else EXIT_EXPECTATION


@handle_common_errors
def table_command(args) -> int:
    if args.source == "oracle":
        rank, crank = oracle_stat_tables(args.upto, _config(args).oracle_bound)
        table = rank if args.stat == "rank" else crank
    else:
        table = rank_table(args.upto) if args.stat == "rank" else crank_table(args.upto)
    write_csv(["n", "m", "count"], table.to_rows())
    return EXIT_OK


def list_command(args) -> int:
    UI.header(f"{Icon.BOOK} Registered identities")
    table = Table(["identity", "variants", "expected", "default order", "description"])
    for identity, spec in REGISTRY.items():
        expected = "; ".join(f"{v.value}: {e.describe()}" for v, e in spec.expected.items())
        table.add_row([identity.value, ", ".join(v.value for v in spec.variants), expected,
                       spec.order_kind.value, spec.description])
    table.render()
    return EXIT_OK


@handle_common_errors
def doctor_command(args) -> int:
    """Check environment, configuration and a small end-to-end computation."""
    UI.header(f"{Icon.SEARCH} sptlab Environment Diagnostics")
    issues = []

    py_version = f"{sys.version_info.major}.{sys.version_info.minor}.{sys.version_info.micro}"
    UI.detail("Python", py_version)
    if sys.version_info < (3, 9):
        issues.append("Python 3.9+ required")

    for module, package, purpose in (("dotenv", "python-dotenv", ".env configuration"),
                                     ("sympy", "sympy", "constant derivation")):
        try:
            __import__(module)
            UI.success(f"{module} available ({purpose})")
        except ImportError:
            issues.append(f"{module} missing ({purpose})")
            ErrorHelper.dependency_missing(package, f"pip install {package}")

    config = _config(args)
    UI.section("Configuration")
    for name, value in vars(config).items():
        UI.detail(name, str(value), indent=1)

    UI.section("Smoke check")
    upto = min(10, config.oracle_bound)
    p = euler_P(upto)
    counted = [sum(1 for _ in enumerate_partitions(n, config.oracle_bound)) for n in range(upto + 1)]
    if list(p) == counted:
        UI.success(f"p(0..{upto}) agrees between the Euler product and enumeration")
    else:
        issues.append("partition counts disagree")
        UI.error(f"p(0..{upto}) mismatch: {list(p)} vs {counted}")
    phi1 = lambert_phi(1, upto)
    if (p * phi1) == p.delta_q():
        UI.success("delta_q(P) = P * Phi_1")
    else:
        issues.append("delta_q(P) != P * Phi_1")

    if issues:
        UI.section("Issues")
        for issue in issues:
            UI.bullet(issue)
        return EXIT_EXPECTATION
    UI.success("Environment looks healthy")
    return EXIT_OK


# ----------------------------------------------------------------------
# argument parsing
# ----------------------------------------------------------------------
COMMANDS: Dict[str, Callable] = {
    "compute": compute_command,
    "verify": verify_command,
    "verify-all": verify_all_command,
    "congruence": congruence_command,
    "table": table_command,
    "list": list_command,
    "doctor": doctor_command,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="sptlab: exact q-series verification laboratory",
        prog="sptlab",
        epilog="Examples:\n"
               "  sptlab compute --stat SPT_plus --upto 30\n"
               "  sptlab verify --identity eq10 --variant printed\n"
               "  sptlab verify-all --order 60 --format json\n"
               "  sptlab congruence --stat eta4 --mod 7 --stride 7 --upto 280\n"
               "  sptlab doctor",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument('--version', action='version', version=f'sptlab v{__version__}')
    parser.add_argument('--verbose', action='store_true', help='Enable debug logging')
    parser.add_argument('--no-color', action='store_true', help='Disable colored output')
    parser.add_argument('--oracle-bound', type=int, default=None,
                        help='Largest n the enumeration oracle may touch')

    subparsers = parser.add_subparsers(dest='command', help='Available commands')

    compute_parser = subparsers.add_parser('compute', help='Tabulate a statistic for n = 0..upto')
    compute_parser.add_argument('--stat', required=True, choices=STATS)
    compute_parser.add_argument('--j', type=int, default=None, help='j for spt_j and spt_j_star')
    compute_parser.add_argument('--k', type=int, default=None, help='k for N_k, M_k, eta_k, mu_k')
    compute_parser.add_argument('--upto', type=int, required=True)
    compute_parser.add_argument('--format', choices=['csv', 'json'], default='csv')

    verify_parser = subparsers.add_parser('verify', help='Check one registered identity')
    verify_parser.add_argument('--identity', required=True)
    verify_parser.add_argument('--variant', choices=['printed', 'corrected', 'n/a'], default=None)
    verify_parser.add_argument('--order', type=int, default=None)
    verify_parser.add_argument('--format', choices=['text', 'json'], default='text')

    all_parser = subparsers.add_parser('verify-all', help='Check every registered identity')
    all_parser.add_argument('--order', type=int, default=None)
    all_parser.add_argument('--format', choices=['text', 'json'], default='text')

    congruence_parser = subparsers.add_parser('congruence', help='Scan stat(stride*n) mod M')
    congruence_parser.add_argument('--stat', required=True, choices=[s.value for s in StatKind])
    congruence_parser.add_argument('--mod', type=int, required=True)
    congruence_parser.add_argument('--stride', type=int, required=True)
    congruence_parser.add_argument('--upto', type=int, required=True)
    congruence_parser.add_argument('--format', choices=['text', 'json'], default='text')

    table_parser = subparsers.add_parser('table', help='Export a rank or crank table as CSV')
    table_parser.add_argument('--stat', required=True, choices=['rank', 'crank'])
    table_parser.add_argument('--upto', type=int, required=True)
    table_parser.add_argument('--source', choices=['gf', 'oracle'], default='gf')

    subparsers.add_parser('list', help='List registered identities and expected outcomes')
    subparsers.add_parser('doctor', help='Check environment health and configuration')
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for sptlab."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 for --help/--version
        return int(exc.code or 0)

    load_env_files()
    try:
        args.config = LabConfig.from_env(load_dotenv_files=False)
    except ConfigError as e:
        setup_logging()
        UI.error(f"Configuration error: {e}")
        return EXIT_USAGE
    setup_logging("DEBUG" if args.verbose else args.config.log_level)
    if args.no_color or args.config.no_color:
        Color.disable()

    if not args.command:
        parser.print_help()
        return EXIT_OK
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main() or 0)
