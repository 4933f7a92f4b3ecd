#!/usr/bin/env python3
"""Run identity suites and write one JSON report per suite."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from qnc.verify import EXTRA_SUITES, SUITES, run_suite


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("suites", nargs="*", default=list(SUITES),
                    help=f"suite names (default: all of {', '.join(SUITES)})")
    ap.add_argument("--out", type=Path, default=Path("reports"))
    ap.add_argument("--fail-fast", action="store_true")
    args = ap.parse_args(argv)

    unknown = [s for s in args.suites if s not in SUITES + EXTRA_SUITES]
    if unknown:
        ap.error(f"unknown suites: {', '.join(unknown)}")
    args.out.mkdir(parents=True, exist_ok=True)
    failed = 0
    for name in args.suites:
        rep = run_suite(name, fail_fast=args.fail_fast)
        (args.out / f"{name}.json").write_text(rep.to_json() + "\n", encoding="utf-8")
        print(rep.to_text(), flush=True)
        failed += rep.failed
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
