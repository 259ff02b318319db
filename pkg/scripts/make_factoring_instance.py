"""Write the FCMJ_M instance for a given M as canonical JSON (stdout or --out)."""

import argparse
from pathlib import Path

from fcmj.model import dumps_instance
from fcmj.reduction import build_factoring_instance

if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("M", type=int)
    ap.add_argument("--out", type=Path)
    args = ap.parse_args()
    text = dumps_instance(build_factoring_instance(args.M)) + "\n"
    if args.out:
        args.out.write_text(text)
    else:
        print(text, end="")
