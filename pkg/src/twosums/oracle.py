"""Exhaustive backtracking search over all sequences of a given length.

Positions are filled left to right with values in increasing order, so
solutions come out lexicographically sorted. The window anchored at a
constrained position ``p`` is complete once position ``min(p + 1, m)`` is
placed. Completing the window at 1 fixes ``x`` and the window at 3 fixes
``y``; after that, every completing position has exactly one admissible
value. Partial assignments are further pruned with the counting identity
``n_x * x + n_y * y = sum_q c_q * a_q`` (``c_q`` being the number of
constrained windows that contain ``q``), bounded by the rearrangement
inequality over the unused values.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .seqcore import constrained_positions, window_multiplicities

MODES = ("exists", "first", "all", "count")
SYMMETRIES = ("raw", "reversal")

# largest m the oracle promises to exhaust; beyond it a node budget applies
MAX_EXHAUSTIVE_M = 16
DEFAULT_NODE_BUDGET = 20_000_000


@dataclass(frozen=True)
class SearchConfig:
    """What to search for.

    ``limit`` stops the search once that many solutions are collected.
    ``symmetry="reversal"`` keeps one representative per reversal pair (the
    lexicographically smaller) and is only meaningful for odd ``m``.
    ``max_nodes`` caps the work; ``None`` means unbounded up to
    ``MAX_EXHAUSTIVE_M`` and ``DEFAULT_NODE_BUDGET`` above it.
    """

    m: int
    mode: str = "all"
    limit: Optional[int] = None
    symmetry: str = "raw"
    max_nodes: Optional[int] = None
    workers: int = 1

    def __post_init__(self) -> None:
        if self.m < 3:
            raise ValueError(f"m must be at least 3, got {self.m}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.symmetry not in SYMMETRIES:
            raise ValueError(f"symmetry must be one of {SYMMETRIES}, got {self.symmetry!r}")
        if self.symmetry == "reversal" and self.m % 2 == 0:
            raise ValueError("reversal is not a symmetry for even m")
        if self.limit is not None and self.limit < 1:
            raise ValueError("limit must be positive")
        if self.workers < 1:
            raise ValueError("workers must be positive")

    @property
    def node_budget(self) -> Optional[int]:
        if self.max_nodes is not None:
            return self.max_nodes
        return None if self.m <= MAX_EXHAUSTIVE_M else DEFAULT_NODE_BUDGET

    @property
    def solution_cap(self) -> Optional[int]:
        if self.mode in ("exists", "first"):
            return 1
        return self.limit


@dataclass
class SearchOutcome:
    """``count`` is exact only when ``exhausted`` is true."""

    solutions: List[Tuple[int, ...]] = field(default_factory=list)
    count: int = 0
    exhausted: bool = False
    nodes_explored: int = 0
    palindromes: int = 0

    @property
    def found(self) -> bool:
        return self.count > 0


class _Stop(Exception):
    pass


class _Searcher:
    def __init__(self, config: SearchConfig):
        m = config.m
        self.m = m
        self.config = config
        self.keep = config.mode != "count"
        self.cap = config.solution_cap
        self.budget = config.node_budget
        self.reversal = config.symmetry == "reversal"

        xs, ys = constrained_positions(m)
        self.n_x, self.n_y = len(xs), len(ys)
        self.coef = [0] + window_multiplicities(m)
        # completing position -> (anchor, class)
        self.completes: Dict[int, Tuple[int, int]] = {}
        for p in xs:
            self.completes[min(p + 1, m)] = (p, 1)
        for p in ys:
            self.completes[min(p + 1, m)] = (p, 3)
        # coefficients of positions q..m, largest first
        self.tail_coef = [sorted(self.coef[q:], reverse=True) for q in range(m + 2)]

        self.a = [0] * (m + 2)
        self.solutions: List[Tuple[int, ...]] = []
        self.count = 0
        self.palindromes = 0
        self.nodes = 0

    def run(self, prefix: Tuple[int, ...] = ()) -> SearchOutcome:
        exhausted = True
        try:
            self._start(prefix)
        except _Stop:
            exhausted = False
        return SearchOutcome(self.solutions, self.count, exhausted, self.nodes, self.palindromes)

    def _start(self, prefix: Tuple[int, ...]) -> None:
        # replay a fixed prefix (used to split the tree across workers)
        used = 0
        x = y = None
        for q, v in enumerate(prefix, start=1):
            if used >> v & 1:
                return
            self.a[q] = v
            used |= 1 << v
            hit = self.completes.get(q)
            if hit is not None:
                p, cls = hit
                s = self.a[p - 1] + self.a[p] + (self.a[p + 1] if p < q else 0)
                if cls == 1:
                    if x is None:
                        x = s
                    elif s != x:
                        return
                elif y is None:
                    if s == x:
                        return
                    y = s
                elif s != y:
                    return
        self._place(len(prefix) + 1, used, x, y, self._mass(len(prefix)))

    def _mass(self, upto: int) -> int:
        return sum(self.coef[q] * self.a[q] for q in range(1, upto + 1))

    def _feasible(self, q: int, used: int, x: int, y: int, mass: int) -> bool:
        need = self.n_x * x + self.n_y * y - mass
        free = [v for v in range(1, self.m + 1) if not used >> v & 1]
        coefs = self.tail_coef[q]
        lo = sum(c * v for c, v in zip(coefs, free))
        hi = sum(c * v for c, v in zip(coefs, reversed(free)))
        return lo <= need <= hi

    def _emit(self) -> None:
        seq = tuple(self.a[1 : self.m + 1])
        rev = seq[::-1]
        if seq == rev:
            self.palindromes += 1
        if self.reversal and rev < seq:
            return
        self.count += 1
        if self.keep:
            self.solutions.append(seq)
        if self.cap is not None and self.count >= self.cap:
            raise _Stop

    def _place(self, q: int, used: int, x: Optional[int], y: Optional[int], mass: int) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise _Stop
        m = self.m
        if q > m:
            self._emit()
            return
        if x is not None and y is not None and not self._feasible(q, used, x, y, mass):
            return
        a = self.a
        cq = self.coef[q]
        hit = self.completes.get(q)
        if hit is None:
            for v in range(1, m + 1):
                if not used >> v & 1:
                    a[q] = v
                    self._place(q + 1, used | 1 << v, x, y, mass + cq * v)
            return

        p, cls = hit
        partial = a[p - 1] + (a[p] if p < q else 0)
        target = x if cls == 1 else y
        if target is None:
            # this window defines its class constant
            for v in range(1, m + 1):
                if not used >> v & 1:
                    a[q] = v
                    s = partial + v
                    if cls == 1:
                        self._place(q + 1, used | 1 << v, s, y, mass + cq * v)
                    elif s != x:
                        self._place(q + 1, used | 1 << v, x, s, mass + cq * v)
            return
        v = target - partial
        if 1 <= v <= m and not used >> v & 1:
            a[q] = v
            self._place(q + 1, used | 1 << v, x, y, mass + cq * v)


def _run_branch(config: SearchConfig, prefix: Tuple[int, ...]) -> SearchOutcome:
    return _Searcher(config).run(prefix)


def _merge(config: SearchConfig, parts: List[SearchOutcome]) -> SearchOutcome:
    # parts are in lexicographic prefix order, so concatenation stays sorted
    out = SearchOutcome(exhausted=True)
    cap = config.solution_cap
    for part in parts:
        out.nodes_explored += part.nodes_explored
        out.palindromes += part.palindromes
        take = part.count if cap is None else min(part.count, cap - out.count)
        out.count += take
        out.solutions.extend(part.solutions[:take] if config.mode != "count" else [])
        if cap is not None and out.count >= cap:
            out.exhausted = False
            break
        if not part.exhausted:
            out.exhausted = False
            break
    return out


def search(config: SearchConfig) -> SearchOutcome:
    """Run the search described by ``config``.

    With ``workers > 1`` the top-level ``(a_1, a_2)`` branches run in
    separate processes and are merged in lexicographic order, so solutions,
    counts and the exhaustion flag match a serial run. ``nodes_explored`` may
    differ when a solution cap stops the search early.
    """
    if config.workers == 1:
        return _Searcher(config).run()
    m = config.m
    prefixes = [(a1, a2) for a1 in range(1, m + 1) for a2 in range(1, m + 1) if a1 != a2]
    with ProcessPoolExecutor(max_workers=config.workers) as pool:
        parts = list(pool.map(_run_branch, [config] * len(prefixes), prefixes))
    return _merge(config, parts)


def exists(m: int) -> bool:
    return search(SearchConfig(m, mode="exists")).found


def census(m: int) -> Dict[str, int]:
    """Exact solution counts for odd ``m`` under both conventions."""
    raw = search(SearchConfig(m, mode="count"))
    reduced = search(SearchConfig(m, mode="count", symmetry="reversal"))
    if not (raw.exhausted and reduced.exhausted):
        raise RuntimeError(f"search for m={m} did not exhaust")
    return {"raw": raw.count, "reversal": reduced.count, "palindromes": raw.palindromes}
