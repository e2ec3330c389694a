#!/usr/bin/env python3
"""Generate a random graph instance file for benchmarking.

Examples:
    python scripts/random_instance.py --n 500000 --m 1000000 --out big.txt
    python scripts/random_instance.py --n 200 --m 800 --format col --out g.col
"""

import argparse

import numpy as np


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, required=True, help="vertex count")
    parser.add_argument("--m", type=int, required=True, help="edge lines to emit")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--format", choices=("edges", "col"), default="edges")
    parser.add_argument("--out", required=True)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    us = rng.integers(0, args.n, size=args.m)
    vs = rng.integers(0, args.n, size=args.m)
    with open(args.out, "w") as fh:
        if args.format == "col":
            fh.write(f"p edge {args.n} {args.m}\n")
            fh.write("\n".join(f"e {u + 1} {v + 1}" for u, v in zip(us, vs)))
        else:
            fh.write(f"# random graph n={args.n} seed={args.seed}\n")
            fh.write("\n".join(f"{u} {v}" for u, v in zip(us, vs)))
        fh.write("\n")
    print(f"wrote {args.m} edge lines to {args.out}")


if __name__ == "__main__":
    main()
