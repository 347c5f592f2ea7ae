"""Stored sequences for lengths below the residue builders' parameter ranges."""

from __future__ import annotations

from typing import Dict, Tuple

from .seqcore import WeightPair

# m=21 as printed repeats 12 at positions 15 and 19; position 19 must be 13
# for the class-3 window there to reach 36.
PRINTED_PI21: Tuple[int, ...] = (
    8, 21, 1, 14, 11, 4, 15, 17, 10, 2, 16, 18, 6, 5, 12, 19, 7, 3, 12, 20, 9,
)

BASE_TABLE: Dict[int, Tuple[Tuple[int, ...], WeightPair]] = {
    3: ((1, 3, 2), WeightPair(4, 5)),
    4: ((1, 3, 2, 4), WeightPair(4, 9)),
    5: ((1, 5, 3, 4, 2), WeightPair(6, 12)),
    # lexicographically least solution found by exhaustive search
    6: ((2, 6, 5, 1, 3, 4), WeightPair(8, 12)),
    9: ((6, 4, 7, 3, 2, 5, 8, 1, 9), WeightPair(10, 14)),
    13: ((5, 13, 1, 9, 7, 2, 10, 11, 4, 3, 8, 12, 6), WeightPair(18, 23)),
    15: ((10, 7, 12, 1, 13, 3, 11, 6, 9, 2, 14, 4, 8, 5, 15), WeightPair(17, 20)),
    21: (
        PRINTED_PI21[:18] + (13,) + PRINTED_PI21[19:],
        WeightPair(29, 36),
    ),
}
