"""Vertex-label completion from trusted edge labels and target weights.

On a path ``v_1 .. v_n`` with edge ``e_i = v_i v_{i+1}``, the weight of a
vertex is its own label plus its incident edge labels, so fixing the edges
and the two target weights determines every vertex label uniquely.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .seqcore import WeightPair


class RepairDefect(ValueError):
    """A derived labeling is not a valid completion."""

    def __init__(self, message: str, case: Optional[str] = None, index: Optional[int] = None):
        super().__init__(message if case is None else f"{case}: {message}")
        self.case = case
        self.index = index


@dataclass(frozen=True)
class RepairInput:
    n: int
    edge_labels: Tuple[int, ...]
    targets: WeightPair
    truncated: bool = False

    def __post_init__(self) -> None:
        if len(self.edge_labels) != self.n - 1:
            raise ValueError(f"expected {self.n - 1} edge labels, got {len(self.edge_labels)}")
        if len(set(self.edge_labels)) != len(self.edge_labels):
            raise ValueError("edge labels must be distinct")
        top = self.label_range
        if self.edge_labels and (min(self.edge_labels) < 1 or max(self.edge_labels) > top):
            raise ValueError(f"edge labels must lie in [1, {top}]")

    @property
    def vertex_count(self) -> int:
        return self.n - 1 if self.truncated else self.n

    @property
    def label_range(self) -> int:
        return self.vertex_count + self.n - 1


def derive_vertices(inp: RepairInput, case: Optional[str] = None) -> List[int]:
    """Solve the weight equations for the vertex labels.

    ``t_i`` is ``x`` for odd ``i`` and ``y`` for even ``i``. A truncated
    labeling drops ``v_n``; its last kept vertex still carries the dangling
    final edge. The result is not checked for bijectivity.
    """
    x, y = inp.targets.x, inp.targets.y
    padded = (0,) + inp.edge_labels + (0,)
    out = [
        (x if i % 2 else y) - padded[i - 1] - padded[i]
        for i in range(1, inp.vertex_count + 1)
    ]
    if out and min(out) <= 0:
        i = next(i for i, label in enumerate(out, start=1) if label <= 0)
        raise RepairDefect(f"derived f(v_{i}) = {out[i - 1]} is not positive", case, i)
    return out


def validate_completion(
    vertices: Sequence[int], edges: Sequence[int], m: int
) -> Tuple[bool, List[str]]:
    """True iff ``vertices`` and ``edges`` together are exactly ``[1, m]``."""
    labels = list(vertices) + list(edges)
    if len(labels) == m and sorted(labels) == list(range(1, m + 1)):
        return True, []
    diagnostics = []
    counts = Counter(labels)
    for v in sorted(counts):
        if not 1 <= v <= m:
            diagnostics.append(f"{v} out of range [1, {m}]")
        elif counts[v] > 1:
            diagnostics.append(f"duplicate {v} ({counts[v]} times)")
    for v in range(1, m + 1):
        if v not in counts:
            diagnostics.append(f"missing {v}")
    if len(labels) != m:
        diagnostics.append(f"{len(labels)} labels for range [1, {m}]")
    return not diagnostics, diagnostics
