#!/usr/bin/env python3
"""Fuzz the closed-form identities with seeded random parameter tuples.

Checks the defining identity plus the internal line, norm, and exact-division
relations on every generated solution. Deterministic for a fixed seed.

Example:
    python3 scripts/fuzz_identities.py --count 50000 --limit 30 --p 5 --p 7
"""

import argparse
import time

from zwform.oracle import identity_fuzz


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", action="append", type=int,
                    help="prime exponent, repeatable (default: 2, 3, 5, 7)")
    ap.add_argument("--limit", type=int, default=20,
                    help="tuple components drawn from [-limit, limit]")
    ap.add_argument("--count", type=int, default=10000, help="tuples per prime")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    exit_code = 0
    for p in args.p or [2, 3, 5, 7]:
        start = time.perf_counter()
        rep = identity_fuzz(p, args.limit, args.count, args.seed)
        elapsed = time.perf_counter() - start
        print(f"p={p} limit={args.limit} seed={args.seed}: "
              f"{rep.instances_checked} tuples, "
              f"{rep.solutions_found} generated, "
              f"{rep.decompose_success} passed all identities, "
              f"{len(rep.failures)} failures ({elapsed:.1f}s)")
        for subject, why in rep.failures[:10]:
            print(f"  FAIL {subject}: {why}")
        if rep.failures:
            exit_code = 1
    raise SystemExit(exit_code)


if __name__ == "__main__":
    main()
