"""Run the exhaustive reduction check for every M in a range; print failures and tight margins.

    python scripts/verify_sweep.py --lo 4 --hi 300
"""

import argparse

from fcmj.reduction import verify_reduction


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--lo", type=int, default=4)
    ap.add_argument("--hi", type=int, default=300)
    ap.add_argument("--show", type=int, default=5, help="how many smallest step-1 gaps to list")
    args = ap.parse_args()

    gaps = []
    failed = []
    for M in range(args.lo, args.hi + 1):
        r = verify_reduction(M)
        if not r.ok:
            failed.append(M)
        low, inc = r.step1_margin
        gaps.append((low - inc, M))
    gaps.sort()
    print(f"checked M in [{args.lo}, {args.hi}]; failures: {failed or 'none'}")
    for gap, M in gaps[: args.show]:
        print(f"  M={M}: min U(q1<M) - U(M, q2*) = {gap} (~{float(gap):.4f})")


if __name__ == "__main__":
    main()
