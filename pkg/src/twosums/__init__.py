"""Permutations of [1, m] with two constant window sums."""

from .constructor import (
    NoSuchSequence,
    PathLabeling,
    classify,
    construct,
    interleave,
    truncate_last,
)
from .oracle import SearchConfig, SearchOutcome, exists, search
from .seqcore import (
    DistinctSumSequence,
    ResidueCase,
    VerificationReport,
    WeightPair,
    constrained_positions,
    expected_weights,
    reverse,
    verify,
    window,
)

__all__ = [
    "DistinctSumSequence",
    "NoSuchSequence",
    "PathLabeling",
    "ResidueCase",
    "SearchConfig",
    "SearchOutcome",
    "VerificationReport",
    "WeightPair",
    "classify",
    "constrained_positions",
    "construct",
    "exists",
    "expected_weights",
    "interleave",
    "reverse",
    "search",
    "truncate_last",
    "verify",
    "window",
]
