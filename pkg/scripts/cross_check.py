#!/usr/bin/env python3
"""Randomized equivalence sweep: tree solver vs. brute-force solver.

Draws random instances within the brute-force-tractable range and checks
that both engines return identical solution lists.  Exits non-zero on
the first mismatch, printing the offending instance.
"""

import argparse
import random
import sys
import time

from abmonoids import ProblemInstance, oracle_solve, solve


def random_instance(rng: random.Random, args) -> ProblemInstance:
    n = rng.randint(0, args.max_n)
    a = tuple(rng.randint(1, args.max_coeff) for _ in range(n))
    b = tuple(rng.randint(1, args.max_coeff) for _ in range(n))
    r = rng.randint(0, args.max_r)
    pool = list(range(r + 1, args.max_x_value + 1))
    x = frozenset(rng.sample(pool, rng.randint(0, min(args.max_x_size, len(pool)))))
    g = rng.randint(0, args.max_g)
    return ProblemInstance(a=a, b=b, x=x, g=g, r=r)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=500)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-n", type=int, default=3)
    parser.add_argument("--max-coeff", type=int, default=5)
    parser.add_argument("--max-x-size", type=int, default=3)
    parser.add_argument("--max-x-value", type=int, default=12)
    parser.add_argument("--max-r", type=int, default=3)
    parser.add_argument("--max-g", type=int, default=5)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    start = time.perf_counter()
    total_solutions = 0
    for k in range(args.count):
        inst = random_instance(rng, args)
        got = solve(inst).solutions
        want = oracle_solve(inst).solutions
        if got != want:
            print(f"MISMATCH on instance {k}: {inst}")
            print(f"  tree engine:  {got}")
            print(f"  brute force:  {want}")
            return 1
        total_solutions += len(got)
    elapsed = time.perf_counter() - start
    print(
        f"OK: {args.count} instances agree "
        f"({total_solutions} solutions, {elapsed:.2f}s, seed={args.seed})"
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
