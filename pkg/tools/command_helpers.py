"""
sptlab command helpers: run context, error-to-exit-code mapping and the
CSV/JSON writers shared by the command handlers.
"""

import csv
import functools
import json
import logging
import sys
import time
from typing import Any, Callable, Iterable, List, Sequence, TextIO

from tools.bailey import DegenerateParameterError
from tools.bivariate_stats import TableRangeError
from tools.config import ConfigError
from tools.partition_oracle import OracleBoundError
from tools.reports import VerificationReport
from tools.series_core import NonUnitError
from tools.ui_helpers import UI, Icon, ErrorHelper, format_duration
from tools.verifier import ModularInverseError, UnknownIdentityError, UnsupportedVariantError

EXIT_OK = 0
EXIT_EXPECTATION = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3
EXIT_INTERRUPTED = 130

logger = logging.getLogger(__name__)


class CommandContext:
    """Header on entry and a timed summary on exit (text output only)"""

    def __init__(self, command_name: str, quiet: bool = False):
        self.command_name = command_name
        self.quiet = quiet
        self.start_time = time.time()
        self.success = False

    def __enter__(self):
        if not self.quiet:
            UI.header(f"{Icon.TEST} {self.command_name}")
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        if self.quiet:
            return False
        duration = time.time() - self.start_time
        if exc_type is None and self.success:
            UI.success(f"All expectations met in {format_duration(duration)}")
        elif exc_type:
            UI.error(f"Failed after {format_duration(duration)}")
        else:
            UI.warning(f"Expectations violated ({format_duration(duration)})")
        return False

    def set_success(self, success: bool = True):
        self.success = success


def handle_common_errors(func: Callable) -> Callable:
    """Map library errors to exit codes: usage/configuration errors return 2"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except UnknownIdentityError as e:
            ErrorHelper.unknown_identity(e.name, e.suggestions)
            return EXIT_USAGE
        except ConfigError as e:
            ErrorHelper.bad_setting(str(e))
            return EXIT_USAGE
        except (UnsupportedVariantError, OracleBoundError, TableRangeError,
                DegenerateParameterError, ModularInverseError, NonUnitError, ValueError) as e:
            UI.error(str(e))
            return EXIT_USAGE
        except KeyboardInterrupt:
            print()
            UI.warning("Operation cancelled by user")
            return EXIT_INTERRUPTED
        except Exception as e:
            logger.debug("Unhandled error", exc_info=True)
            UI.error(f"Unexpected error: {e}")
            UI.tip("Run with --verbose for more details")
            return EXIT_INTERNAL

    return wrapper


def write_csv(header: Sequence[str], rows: Iterable[Sequence[Any]], stream: TextIO = None):
    writer = csv.writer(stream or sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def write_json(payload: Any, stream: TextIO = None):
    out = stream or sys.stdout
    json.dump(payload, out, indent=2)
    out.write("\n")


def reports_payload(reports: List[VerificationReport]) -> List[dict]:
    return [r.to_dict() for r in reports]
