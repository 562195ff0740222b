"""Run every worked-example reproduction and print a per-check table."""

import sys

from framespec import reproduce
from framespec.cli import format_report


def main() -> int:
    reports = reproduce.reproduce("all")
    for rep in reports:
        print(format_report(rep))
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
