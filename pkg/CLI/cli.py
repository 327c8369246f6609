"""sptlab CLI compatibility wrapper.

Usage:
	python -m CLI.cli verify --identity thm1
	python -m CLI.cli compute --stat p --upto 20

Delegates to sptlab.main so the module form and the console script behave
identically.
"""

from __future__ import annotations

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
	sys.path.insert(0, str(ROOT))

import sptlab  # noqa: E402


def main(argv=None) -> int:
	return sptlab.main(argv)


if __name__ == '__main__':  # pragma: no cover
	sys.exit(main())
