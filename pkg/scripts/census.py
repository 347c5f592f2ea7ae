"""Exact solution counts for small m under both symmetry conventions.

    python scripts/census.py 3 13 [--workers N]
"""

import argparse
import time

from twosums.oracle import SearchConfig, search


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("m_min", type=int)
    parser.add_argument("m_max", type=int)
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    print(f"{'m':>3} {'raw':>8} {'reversal':>9} {'nodes':>10} {'sec':>7}")
    for m in range(args.m_min, args.m_max + 1):
        start = time.perf_counter()
        raw = search(SearchConfig(m, mode="count", workers=args.workers))
        reduced = "-"
        if m % 2:
            reduced = search(SearchConfig(m, mode="count", symmetry="reversal", workers=args.workers)).count
        flag = "" if raw.exhausted else "  (not exhausted)"
        print(f"{m:>3} {raw.count:>8} {reduced:>9} {raw.nodes_explored:>10} {time.perf_counter() - start:>7.2f}{flag}")


if __name__ == "__main__":
    main()
