#!/usr/bin/env python3
"""Sweep every solution in a box through decompose and report the outcome.

Example:
    python3 scripts/roundtrip_sweep.py --bound 20 --m-max 30 --p 2 --p 3 --jobs 2
"""

import argparse
import time

from zwform.oracle import SearchBounds, roundtrip_check


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", action="append", type=int,
                    help="prime exponent, repeatable (default: 2 and 3)")
    ap.add_argument("--bound", type=int, default=20, help="|x|, |y|, |z| <= bound")
    ap.add_argument("--m-max", type=int, default=30, help="scan m in [-M, M]")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    exit_code = 0
    for p in args.p or [2, 3]:
        bounds = SearchBounds(p, args.bound, -args.m_max, args.m_max)
        start = time.perf_counter()
        rep = roundtrip_check(bounds, jobs=args.jobs)
        elapsed = time.perf_counter() - start
        rate = rep.solutions_found / elapsed if elapsed else 0.0
        print(f"p={p} bound={args.bound} m=[-{args.m_max},{args.m_max}]: "
              f"{rep.solutions_found} solutions, "
              f"{rep.decompose_success} round-tripped, "
              f"{rep.degenerate_e} degenerate, "
              f"{len(rep.failures)} failures "
              f"({elapsed:.1f}s, {rate:.0f} sol/s)")
        for sol, why in rep.failures[:10]:
            print(f"  FAIL {sol}: {why}")
        if rep.failures or not rep.consistent():
            exit_code = 1
    raise SystemExit(exit_code)


if __name__ == "__main__":
    main()
