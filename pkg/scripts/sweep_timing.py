"""Time construct() + verify() over a range of lengths and report per-case totals."""

import argparse
import collections
import time

from twosums.constructor import construct
from twosums.seqcore import verify


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("m_max", type=int, nargs="?", default=5000)
    args = parser.parse_args()

    per_case = collections.defaultdict(lambda: [0, 0.0])
    start = time.perf_counter()
    for m in range(3, args.m_max + 1):
        if m == 7:
            continue
        t0 = time.perf_counter()
        seq = construct(m)
        assert verify(seq.values).weights == seq.weights
        entry = per_case[seq.case.tag]
        entry[0] += 1
        entry[1] += time.perf_counter() - t0
    total = time.perf_counter() - start
    for tag, (n, sec) in sorted(per_case.items()):
        print(f"{tag:<14} {n:>6} lengths {sec:8.3f}s")
    print(f"{'total':<14} {sum(n for n, _ in per_case.values()):>6} lengths {total:8.3f}s")


if __name__ == "__main__":
    main()
