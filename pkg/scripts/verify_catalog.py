#!/usr/bin/env python3
"""Verify every named series instance: rigidity, solvability, and its full
reduction chain.  Exits nonzero when anything fails."""

from __future__ import annotations

import argparse
import sys
import time
from collections import defaultdict

from dspkit import ChainMismatchError, all_series_ids, decide, defect, series, verify_chain


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=60)
    args = parser.parse_args()

    start = time.perf_counter()
    per_family: dict[str, int] = defaultdict(int)
    failures: list[str] = []
    for sid in all_series_ids(args.max_n):
        t = series(sid)
        if defect(t) != 2:
            failures.append(f"{sid}: defect {defect(t)}")
            continue
        if not decide(t).solvable:
            failures.append(f"{sid}: not solvable")
            continue
        try:
            verify_chain(sid)
        except ChainMismatchError as exc:
            failures.append(str(exc))
            continue
        per_family[sid.name] += 1

    for name in sorted(per_family):
        print(f"{name:8s} {per_family[name]:3d} instances OK")
    total = sum(per_family.values())
    print(f"\n{total} instances verified in {time.perf_counter() - start:.2f}s")
    if failures:
        print("FAILURES:")
        for line in failures:
            print(" ", line)
        return 1
    print("all chains, defects, and verdicts check out")
    return 0


if __name__ == "__main__":
    sys.exit(main())
