"""Factor every M in a range through the FCMJ_M oracle and report timing and oracle work.

    python scripts/factor_sweep.py --lo 2 --hi 10000
"""

import argparse
import math
import time

from fcmj.numtheory import is_prime_trial
from fcmj.reduction import FactorTrace, factorize


def oracle_work(trace):
    if not isinstance(trace, FactorTrace):
        return 0, 0
    calls, evals = 1, trace.evaluations
    for child in trace.children:
        c, e = oracle_work(child)
        calls += c
        evals += e
    return calls, evals


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--lo", type=int, default=2)
    ap.add_argument("--hi", type=int, default=10_000)
    args = ap.parse_args()

    start = time.perf_counter()
    calls = evals = worst = 0
    bad = []
    for M in range(args.lo, args.hi + 1):
        factors, trace = factorize(M)
        if math.prod(factors) != M or not all(is_prime_trial(p) for p in factors):
            bad.append(M)
        c, e = oracle_work(trace)
        calls += c
        evals += e
        if trace is not None and isinstance(trace, FactorTrace):
            worst = max(worst, trace.evaluations / M)
    elapsed = time.perf_counter() - start
    print(f"range [{args.lo}, {args.hi}]: {elapsed:.1f}s, {calls} oracle calls, {evals} evaluations")
    print(f"max evaluations/M at the top split: {worst:.3f}")
    print("all factorizations correct" if not bad else f"FAILED for {bad[:10]}")


if __name__ == "__main__":
    main()
