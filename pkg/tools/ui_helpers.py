"""
sptlab console output helpers.

Human-facing messages go through UI; CSV and JSON output is written by the
command handlers directly so it stays pipeable.
"""

import difflib
import os
import sys
from typing import List, Optional, Sequence, TextIO

_TRUTHY = ('1', 'true', 'yes', 'on')


def _sgr(code: int) -> str:
    return f'\033[{code}m'


class Color:
    """ANSI escape sequences; blanked by disable()."""
    RED = _sgr(31)
    GREEN = _sgr(32)
    YELLOW = _sgr(33)
    BLUE = _sgr(34)
    CYAN = _sgr(36)
    BRIGHT_WHITE = _sgr(97)
    BOLD = _sgr(1)
    DIM = _sgr(2)
    RESET = _sgr(0)

    @staticmethod
    def enabled() -> bool:
        if os.getenv('SPTLAB_NO_COLOR', '').strip().lower() in _TRUTHY:
            return False
        if os.getenv('NO_COLOR'):
            return False
        if sys.platform != 'win32':
            return True
        try:
            import colorama
        except ImportError:
            return False
        colorama.init()
        return True

    @staticmethod
    def disable():
        """Blank every escape sequence (CI, pipes, --no-color)."""
        for name in [n for n in vars(Color) if n.isupper()]:
            setattr(Color, name, '')


if not Color.enabled():
    Color.disable()


class Icon:
    SUCCESS = "✅"
    ERROR = "❌"
    WARNING = "⚠️"
    INFO = "ℹ️"
    BULLET = "•"
    CHECK = "✓"
    CROSS = "✗"
    SEARCH = "🔍"
    BOOK = "📚"
    LIGHT = "💡"
    TEST = "🧪"


def _emit(text: str, stream: Optional[TextIO] = None):
    print(text, file=stream or sys.stdout)


def _tagged(color: str, icon: str, message: str, prefix: str, stream: Optional[TextIO] = None):
    mark = prefix or icon
    _emit(f"{color}{mark} {message}{Color.RESET}", stream)


class UI:
    """Status lines, headings and key/value details for the human-readable commands."""

    @staticmethod
    def success(message: str, prefix: str = ""):
        _tagged(Color.GREEN, Icon.SUCCESS, message, prefix)

    @staticmethod
    def error(message: str, prefix: str = ""):
        """Errors always go to stderr."""
        _tagged(Color.RED, Icon.ERROR, message, prefix, sys.stderr)

    @staticmethod
    def warning(message: str, prefix: str = ""):
        _tagged(Color.YELLOW, Icon.WARNING, message, prefix)

    @staticmethod
    def info(message: str, prefix: str = ""):
        _tagged(Color.CYAN, Icon.INFO, message, prefix)

    @staticmethod
    def header(title: str):
        rule = '=' * min(len(title), 60)
        _emit(f"\n{Color.BOLD}{Color.CYAN}{title}{Color.RESET}\n{Color.DIM}{rule}{Color.RESET}")

    @staticmethod
    def section(title: str):
        _emit(f"\n{Color.BOLD}{title}{Color.RESET}")

    @staticmethod
    def bullet(message: str, indent: int = 0):
        _emit(f"{'  ' * indent}{Icon.BULLET} {message}")

    @staticmethod
    def detail(key: str, value: str, indent: int = 0):
        pad = '  ' * indent
        _emit(f"{pad}{Color.DIM}{key}:{Color.RESET} {Color.BOLD}{value}{Color.RESET}")

    @staticmethod
    def command(cmd: str, stream: Optional[TextIO] = None):
        _emit(f"{Color.DIM}$ {Color.RESET}{Color.BRIGHT_WHITE}{cmd}{Color.RESET}", stream)

    @staticmethod
    def tip(message: str):
        _emit(f"{Color.YELLOW}{Icon.LIGHT} Tip:{Color.RESET} {message}")


class Table:
    """Box-drawn table of report rows; cells are stringified on insertion."""

    def __init__(self, headers: List[str]):
        self.headers = list(headers)
        self.rows: List[List[str]] = []

    def add_row(self, row: Sequence):
        self.rows.append([str(cell) for cell in row])

    def column_widths(self) -> List[int]:
        return [max(len(cell) for cell in column)
                for column in zip(self.headers, *self.rows)]

    def lines(self) -> List[str]:
        if not self.rows:
            return []
        widths = self.column_widths()

        def join(cells, style=""):
            body = " │ ".join(f"{style}{c:<{w}}{Color.RESET if style else ''}"
                               for c, w in zip(cells, widths))
            return f"│ {body} │"

        rule = "─┼─".join("─" * w for w in widths)
        return [join(self.headers, Color.BOLD), f"├─{rule}─┤"] + [join(r) for r in self.rows]

    def render(self):
        for line in self.lines():
            _emit(line)


class ErrorHelper:
    """Error messages paired with the command that usually fixes them."""

    @staticmethod
    def unknown_identity(name: str, similar: Optional[List[str]] = None):
        UI.error(f"Unknown identity '{name}'")
        if similar:
            _emit(f"\n{Icon.LIGHT} Did you mean:", sys.stderr)
            for candidate in similar[:3]:
                _emit(f"  {Color.CYAN}sptlab verify --identity {candidate}{Color.RESET}", sys.stderr)
        _emit(f"\n{Icon.INFO} Run {Color.CYAN}sptlab list{Color.RESET} to see every identity", sys.stderr)

    @staticmethod
    def bad_setting(message: str):
        UI.error(f"Configuration error: {message}")
        _emit(f"{Icon.LIGHT} Check the SPTLAB_* variables in your environment or .env file", sys.stderr)

    @staticmethod
    def dependency_missing(package: str, install_cmd: Optional[str] = None):
        UI.error(f"Missing dependency: {package}")
        if install_cmd:
            _emit(f"{Icon.LIGHT} Install it with:", sys.stderr)
            UI.command(install_cmd, sys.stderr)


def fuzzy_match(needle: str, haystack: List[str], threshold: float = 0.6) -> List[str]:
    """Candidates from haystack closest to needle, best first (case-insensitive)."""
    by_lower = {item.lower(): item for item in haystack}
    close = difflib.get_close_matches(needle.lower(), list(by_lower), n=len(by_lower) or 1,
                                      cutoff=threshold)
    return [by_lower[c] for c in close]


def format_duration(seconds: float) -> str:
    if seconds < 1:
        return f"{int(seconds * 1000)}ms"
    if seconds < 60:
        return f"{seconds:.1f}s"
    minutes, secs = divmod(int(seconds), 60)
    return f"{minutes}m {secs}s"
