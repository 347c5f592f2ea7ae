"""Construct a valid sequence for every length ``m >= 3`` except ``m = 7``.

Odd lengths come from total labelings of a path ``P_n`` read off alternately
(vertex, edge, vertex, ...). Lengths ``8j+2`` and ``8j+4`` use a path whose
final vertex is deleted. Lengths ``8j`` and ``8j+6`` drop the trailing
maximum from the odd sequence one longer. Anything below the builders'
parameter ranges is served from ``basetable``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Sequence, Tuple

from . import formulas
from .basetable import BASE_TABLE
from .repair import RepairDefect, RepairInput, derive_vertices, validate_completion
from .seqcore import (
    DistinctSumSequence,
    ResidueCase,
    WeightPair,
    expected_weights,
    verify,
)


class NoSuchSequence(ValueError):
    """No valid sequence exists for the requested length."""


@dataclass(frozen=True)
class PathLabeling:
    """Total labeling of ``P_n``; ``truncated`` drops vertex ``v_n``."""

    n: int
    vertex_labels: Tuple[int, ...]
    edge_labels: Tuple[int, ...]
    truncated: bool = False

    @property
    def m(self) -> int:
        return len(self.vertex_labels) + len(self.edge_labels)


def classify(m: int) -> ResidueCase:
    if m < 3:
        raise ValueError(f"m must be at least 3, got {m}")
    if m == 7:
        return ResidueCase("Impossible")
    if m in BASE_TABLE:
        return ResidueCase("BaseTable", m)
    r = m % 8
    if r == 7:
        return ResidueCase("Case7Mod8", (m + 1) // 8)
    if r == 3:
        return ResidueCase("Case3Mod8", (m - 3) // 8)
    if r == 1:
        return ResidueCase("Case1Mod8", (m - 1) // 8)
    if r == 5:
        return ResidueCase("Case5Mod8", (m - 5) // 8)
    if r == 2:
        return ResidueCase("Case2Mod8", (m - 2) // 8)
    if r == 4:
        return ResidueCase("Case4Mod8", (m - 4) // 8)
    return ResidueCase("TruncateFrom", m + 1)


def interleave(lab: PathLabeling) -> Tuple[int, ...]:
    """Read ``v_1, e_1, v_2, e_2, ...``; a truncated path ends on an edge."""
    nv = lab.n - 1 if lab.truncated else lab.n
    if len(lab.vertex_labels) != nv or len(lab.edge_labels) != lab.n - 1:
        raise ValueError(
            f"P_{lab.n} needs {nv} vertex and {lab.n - 1} edge labels, "
            f"got {len(lab.vertex_labels)} and {len(lab.edge_labels)}"
        )
    ok, diagnostics = validate_completion(lab.vertex_labels, lab.edge_labels, lab.m)
    if not ok:
        raise ValueError("labels are not a permutation: " + "; ".join(diagnostics))
    out = [0] * lab.m
    out[0::2] = lab.vertex_labels
    out[1::2] = lab.edge_labels
    return tuple(out)


def _complete(
    case: str, param: int, n: int, edges: Tuple[int, ...], targets: WeightPair, truncated: bool
) -> PathLabeling:
    # bijectivity is checked once, by interleave
    tag = f"{case}({param})"
    vertices = derive_vertices(RepairInput(n, edges, targets, truncated), case=tag)
    return PathLabeling(n, tuple(vertices), edges, truncated)


def _check_param(name: str, value: int, low: int) -> None:
    if value < low:
        raise ValueError(f"{name} requires parameter >= {low}, got {value}")


def build_case_7mod8(k: int) -> PathLabeling:
    """``m = 8k-1`` on ``P_{4k}``; weights ``(9k-1, 11k-2)``."""
    _check_param("Case7Mod8", k, 3)
    targets = WeightPair(9 * k - 1, 11 * k - 2)
    return _complete("Case7Mod8", k, 4 * k, formulas.case_7mod8_edges(k), targets, False)


def build_case_3mod8(k: int) -> PathLabeling:
    """``m = 8k+3`` on ``P_{4k+2}``; weights ``(11k+4, 9k+3)``."""
    _check_param("Case3Mod8", k, 1)
    targets = WeightPair(11 * k + 4, 9 * k + 3)
    return _complete("Case3Mod8", k, 4 * k + 2, formulas.case_3mod8_edges(k), targets, False)


def build_case_1mod8(k: int) -> PathLabeling:
    """``m = 8k+1`` on ``P_{4k+1}``; weights ``(10k+1, 11k)``. Ends in ``m``."""
    _check_param("Case1Mod8", k, 2)
    targets = WeightPair(10 * k + 1, 11 * k)
    return _complete("Case1Mod8", k, 4 * k + 1, formulas.case_1mod8_edges(k), targets, False)


def build_case_5mod8(k: int) -> PathLabeling:
    """``m = 8k+5`` on ``P_{4k+3}``; weights ``(11k+7, 13k+10)``."""
    _check_param("Case5Mod8", k, 3)
    targets = WeightPair(11 * k + 7, 13 * k + 10)
    return _complete("Case5Mod8", k, 4 * k + 3, formulas.case_5mod8_edges(k), targets, False)


def build_case_2mod8(j: int) -> PathLabeling:
    """``m = 8j+2`` on ``P_{4j+2}`` minus its last vertex; ``(13j+3, 9j+2)``."""
    _check_param("Case2Mod8", j, 1)
    targets = WeightPair(13 * j + 3, 9 * j + 2)
    return _complete("Case2Mod8", j, 4 * j + 2, formulas.case_2mod8_edges(j), targets, True)


def build_case_4mod8(j: int) -> PathLabeling:
    """``m = 8j+4`` on ``P_{4j+3}`` minus its last vertex; ``(11j+6, 9j+6)``."""
    _check_param("Case4Mod8", j, 1)
    targets = WeightPair(11 * j + 6, 9 * j + 6)
    return _complete("Case4Mod8", j, 4 * j + 3, formulas.case_4mod8_edges(j), targets, True)


BUILDERS: Dict[str, Callable[[int], PathLabeling]] = {
    "Case7Mod8": build_case_7mod8,
    "Case3Mod8": build_case_3mod8,
    "Case1Mod8": build_case_1mod8,
    "Case5Mod8": build_case_5mod8,
    "Case2Mod8": build_case_2mod8,
    "Case4Mod8": build_case_4mod8,
}


def truncate_last(values: Sequence[int]) -> Tuple[int, ...]:
    """Drop the trailing maximum of a valid odd-length sequence.

    Only the window anchored at the last position touches ``a_m``, so the
    prefix keeps every other window and the same weight pair.
    """
    values = tuple(values)
    m = len(values)
    if m % 2 == 0:
        raise ValueError(f"length must be odd, got {m}")
    if values[-1] != m:
        raise ValueError(f"final element is {values[-1]}, expected {m}")
    report = verify(values)
    if not report.valid:
        raise ValueError(f"input does not verify: {report.failure}")
    return values[:-1]


def _values_for(case: ResidueCase) -> Tuple[int, ...]:
    if case.tag == "BaseTable":
        return BASE_TABLE[case.parameter][0]
    if case.tag == "TruncateFrom":
        return truncate_last(_values_for(classify(case.parameter)))
    try:
        return interleave(BUILDERS[case.tag](case.parameter))
    except RepairDefect:
        raise
    except ValueError as exc:
        raise RepairDefect(str(exc), str(case)) from exc


def construct(m: int) -> DistinctSumSequence:
    """The deterministic sequence of length ``m`` with its verified weights."""
    if m < 3:
        raise NoSuchSequence(f"no sequence of length {m}: lengths start at 3")
    case = classify(m)
    if case.tag == "Impossible":
        raise NoSuchSequence("no Π_7 exists: exhaustive search over all 5040 permutations finds none")
    values = _values_for(case)
    report = verify(values)
    if not report.valid:
        raise RepairDefect(f"constructed sequence fails verification: {report.failure}", str(case))
    if report.weights != expected_weights(case):
        raise RepairDefect(
            f"weights {report.weights} differ from closed form {expected_weights(case)}", str(case)
        )
    return DistinctSumSequence(values, report.weights, case)
