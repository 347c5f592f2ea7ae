"""Sequence model and verifier for two-sum window sequences.

A sequence ``a_1..a_m`` (1-indexed) is *valid* when it is a permutation of
``[1, m]``, every window sum anchored at a position ``p = 1 (mod 4)`` equals a
constant ``x``, every window sum anchored at ``p = 3 (mod 4)`` equals a
constant ``y``, and ``x != y``. The window at ``p`` is ``a_{p-1} + a_p +
a_{p+1}`` with out-of-range neighbours dropped.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple


@dataclass(frozen=True)
class WeightPair:
    """Constant window sums: ``x`` for class-1 positions, ``y`` for class-3."""

    x: int
    y: int

    def __post_init__(self) -> None:
        if self.x == self.y:
            raise ValueError(f"weights must differ, got x=y={self.x}")
        if self.x < 3 or self.y < 3:
            raise ValueError(f"weights must be at least 3, got ({self.x}, {self.y})")

    def swapped(self) -> "WeightPair":
        return WeightPair(self.y, self.x)

    def __str__(self) -> str:
        return f"x={self.x} y={self.y}"


class FailureKind(enum.Enum):
    TOO_SHORT = "too short"
    OUT_OF_RANGE = "out-of-range value"
    DUPLICATE = "duplicate value"
    INCONSISTENT_X = "inconsistent x-class"
    INCONSISTENT_Y = "inconsistent y-class"
    EQUAL_WEIGHTS = "x equals y"


@dataclass(frozen=True)
class Failure:
    kind: FailureKind
    detail: str
    value: Optional[int] = None
    positions: Tuple[int, ...] = ()

    def __str__(self) -> str:
        return f"{self.kind.value}: {self.detail}"


@dataclass(frozen=True)
class VerificationReport:
    is_permutation: bool
    window_sums: Tuple[Tuple[int, int], ...]
    weights: Optional[WeightPair] = None
    failure: Optional[Failure] = None

    @property
    def valid(self) -> bool:
        return self.weights is not None


@dataclass(frozen=True)
class DistinctSumSequence:
    """A sequence of length ``m``; ``weights`` is set only once verified."""

    values: Tuple[int, ...]
    weights: Optional[WeightPair] = None
    case: Optional["ResidueCase"] = field(default=None, compare=False)

    @property
    def m(self) -> int:
        return len(self.values)

    @classmethod
    def verified(cls, values: Iterable[int], case: Optional["ResidueCase"] = None) -> "DistinctSumSequence":
        """Verify ``values`` and wrap them; raises ``ValueError`` if invalid."""
        values = tuple(values)
        report = verify(values)
        if not report.valid:
            raise ValueError(f"not a valid sequence: {report.failure}")
        return cls(values, report.weights, case)


@dataclass(frozen=True)
class ResidueCase:
    """Dispatch class of a length ``m``.

    ``parameter`` is ``m`` for ``BaseTable``, the builder's ``k`` or ``j`` for
    the residue builders, the parent length for ``TruncateFrom`` and ``None``
    for ``Impossible``.
    """

    tag: str
    parameter: Optional[int] = None

    TAGS = (
        "BaseTable",
        "Case7Mod8",
        "Case3Mod8",
        "Case1Mod8",
        "Case5Mod8",
        "Case2Mod8",
        "Case4Mod8",
        "TruncateFrom",
        "Impossible",
    )

    def __post_init__(self) -> None:
        if self.tag not in self.TAGS:
            raise ValueError(f"unknown case tag {self.tag!r}")
        if (self.tag == "Impossible") != (self.parameter is None):
            raise ValueError(f"bad parameter {self.parameter!r} for {self.tag}")

    def __str__(self) -> str:
        if self.tag == "Impossible":
            return "Impossible"
        name = {
            "BaseTable": "m",
            "TruncateFrom": "m",
            "Case2Mod8": "j",
            "Case4Mod8": "j",
        }.get(self.tag, "k")
        return f"{self.tag}({name}={self.parameter})"


def window(p: int, m: int) -> Tuple[int, ...]:
    """Positions whose values contribute to the window sum at ``p``."""
    if not 1 <= p <= m:
        raise ValueError(f"position {p} out of range [1, {m}]")
    return tuple(q for q in (p - 1, p, p + 1) if 1 <= q <= m)


def constrained_positions(m: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Class-1 (``p = 1 mod 4``) and class-3 (``p = 3 mod 4``) positions."""
    if m < 3:
        raise ValueError(f"m must be at least 3, got {m}")
    xs = tuple(range(1, m + 1, 4))
    ys = tuple(range(3, m + 1, 4))
    return xs, ys


def window_multiplicities(m: int) -> List[int]:
    """``c[q-1]`` = number of constrained windows containing position ``q``."""
    xs, ys = constrained_positions(m)
    c = [0] * m
    for p in xs + ys:
        for q in window(p, m):
            c[q - 1] += 1
    return c


def window_sum(values: Sequence[int], p: int) -> int:
    return sum(values[q - 1] for q in window(p, len(values)))


def verify(values: Sequence[int]) -> VerificationReport:
    """Check ``values`` and extract its weight pair.

    Failures are reported in a fixed order: length, range, duplicates,
    class-1 consistency, class-3 consistency, then ``x != y``. Window sums are
    listed for every constrained position whenever ``m >= 3``.
    """
    values = tuple(values)
    m = len(values)
    if not values:
        raise ValueError("empty sequence")

    if m < 3:
        return VerificationReport(
            is_permutation=sorted(values) == list(range(1, m + 1)),
            window_sums=(),
            failure=Failure(FailureKind.TOO_SHORT, f"length {m} < 3"),
        )

    xs, ys = constrained_positions(m)
    padded = (0,) + values + (0,)
    # anchors 1, 3, 5, ... alternate between the two classes
    anchors = range(1, m + 1, 2)
    sums = tuple(zip(anchors, map(sum, zip(padded[0::2], padded[1::2], padded[2::2]))))

    failure = None
    seen = {}
    in_range = min(values) >= 1 and max(values) <= m
    for pos, v in enumerate(() if in_range else values, start=1):
        if not 1 <= v <= m:
            failure = Failure(
                FailureKind.OUT_OF_RANGE, f"{v} at position {pos} not in [1, {m}]", v, (pos,)
            )
            break
    if failure is None and len(set(values)) != m:
        for pos, v in enumerate(values, start=1):
            if v in seen:
                failure = Failure(
                    FailureKind.DUPLICATE,
                    f"{v} at positions {seen[v]} and {pos}",
                    v,
                    (seen[v], pos),
                )
                break
            seen[v] = pos
    is_permutation = failure is None

    if failure is None:
        for kind, cls_sums in (
            (FailureKind.INCONSISTENT_X, sums[0::2]),
            (FailureKind.INCONSISTENT_Y, sums[1::2]),
        ):
            first, target = cls_sums[0]
            if len({v for _, v in cls_sums}) > 1:
                p, v = next((p, v) for p, v in cls_sums if v != target)
                failure = Failure(
                    kind,
                    f"window at {p} sums to {v}, window at {first} to {target}",
                    positions=(first, p),
                )
                break
    if failure is None:
        x, y = sums[0][1], sums[1][1]
        if x == y:
            failure = Failure(FailureKind.EQUAL_WEIGHTS, f"x = y = {x}", x)
        else:
            return VerificationReport(True, sums, WeightPair(x, y))

    return VerificationReport(is_permutation, sums, failure=failure)


def reverse(values: Sequence[int]) -> Tuple[int, ...]:
    return tuple(reversed(tuple(values)))


def expected_weights(case: ResidueCase) -> WeightPair:
    """Closed-form weight pair produced for ``case``."""
    from .basetable import BASE_TABLE

    t, k = case.tag, case.parameter
    if t == "Impossible":
        raise ValueError("no weights for an impossible case")
    if t == "BaseTable":
        return BASE_TABLE[k][1]
    if t == "TruncateFrom":
        from .constructor import classify

        return expected_weights(classify(k))
    formulas = {
        "Case7Mod8": (9 * k - 1, 11 * k - 2),
        "Case3Mod8": (11 * k + 4, 9 * k + 3),
        "Case1Mod8": (10 * k + 1, 11 * k),
        "Case5Mod8": (11 * k + 7, 13 * k + 10),
        "Case2Mod8": (13 * k + 3, 9 * k + 2),
        "Case4Mod8": (11 * k + 6, 9 * k + 6),
    }
    return WeightPair(*formulas[t])


def parse_sequence(text: str) -> Tuple[int, ...]:
    """Parse comma- and/or whitespace-separated positive integers."""
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise ValueError("no integers found")
    try:
        values = tuple(int(tok) for tok in tokens)
    except ValueError as exc:
        raise ValueError(f"cannot parse sequence: {exc}") from None
    if any(v <= 0 for v in values):
        raise ValueError("sequence values must be positive integers")
    return values
