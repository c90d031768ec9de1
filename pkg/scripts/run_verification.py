#!/usr/bin/env python3
"""Run every verification suite and write one JSON report per suite.

Usage:
    python scripts/run_verification.py [--seed SEED] [--out-dir reports]
                                       [--trials N]

Exit code 0 when every trial of every suite passed, 2 otherwise.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from parkdet.suites import SUITES


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out-dir", default="reports")
    parser.add_argument("--trials", type=int, default=None,
                        help="override the per-suite default trial count")
    args = parser.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    failures = 0
    for name, fn in SUITES.items():
        kwargs = {}
        if "seed" in fn.__code__.co_varnames:
            kwargs["seed"] = args.seed
        if args.trials is not None and "trials" in fn.__code__.co_varnames:
            kwargs["trials"] = args.trials
        report = fn(**kwargs)
        path = out_dir / f"{name}.json"
        path.write_text(report.to_json() + "\n", encoding="utf-8")
        failures += len(report.failed)
        print(f"{name:12s} trials={len(report.trials):4d} failed={len(report.failed):3d} "
              f"elapsed={report.elapsed_ms:5d}ms -> {path}")
    print("all suites passed" if failures == 0 else f"{failures} failing trials")
    return 0 if failures == 0 else 2


if __name__ == "__main__":
    sys.exit(main())
