"""Closed-form label assignments for the six residue-class path labelings.

Each ``*_edges`` function maps an edge index ``i`` (edge ``v_i v_{i+1}``) to
its label. Each ``*_printed_vertices`` function returns the vertex
assignments exactly as originally published, item by item; several of those
items are off by one or collide for some parameters, so builders never use
them and derive vertices from the edges instead (see ``repair``). They are
kept for cross-checking.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Tuple

from .repair import RepairDefect

Rules = Iterable[Tuple[int, int]]


def _assign(rules: Rules, count: int, name: str) -> Tuple[int, ...]:
    labels: List[Optional[int]] = [None] * (count + 1)
    for i, val in rules:
        if not 1 <= i <= count:
            raise RepairDefect(f"edge index {i} outside [1, {count}]", name, i)
        if labels[i] is not None:
            raise RepairDefect(f"edge {i} assigned twice", name, i)
        labels[i] = val
    if None in labels[1:]:
        raise RepairDefect(f"edge {labels.index(None, 1)} left unassigned", name)
    return tuple(labels[1:])


def _halves(k: int, even_hi: int, odd_hi: int) -> range:
    return range(1, (even_hi if k % 2 == 0 else odd_hi) + 1)


def case_7mod8_edges(k: int) -> Tuple[int, ...]:
    """m = 8k-1 on P_{4k}."""
    rules = [(2 * k - 1, 2 * k - 1)]
    rules += [(2 * i - 1, 3 * k + i) for i in range(1, k)]
    rules += [(2 * i, 2 * k - 1 - 2 * i) for i in range(1, k)]
    rules += [(2 * k - 1 + 2 * i, 4 * i - 2) for i in _halves(k, k // 2, (k - 1) // 2)]
    rules += [(2 * k - 2 + 2 * i, 3 * k + 2 - 2 * i) for i in _halves(k, k // 2, (k + 1) // 2)]
    if k % 2 == 0:
        rules += [(3 * k - 1 + 2 * i, 2 * k - 1 + 2 * i) for i in range(1, k // 2 + 1)]
        rules += [(3 * k - 2 + 2 * i, 2 * k + 4 - 4 * i) for i in range(1, k // 2 + 1)]
    else:
        rules += [(3 * k - 2 + 2 * i, 2 * k - 2 + 2 * i) for i in range(1, (k + 1) // 2 + 1)]
        rules += [(3 * k - 1 + 2 * i, 2 * k + 2 - 4 * i) for i in range(1, (k - 1) // 2 + 1)]
    return _assign(rules, 4 * k - 1, f"7mod8 k={k}")


def case_3mod8_edges(k: int) -> Tuple[int, ...]:
    """m = 8k+3 on P_{4k+2}."""
    rules = [(2 * i, i) for i in range(1, 2 * k + 1)]
    rules += [(4 * i + 1, 4 * k + 1 - i) for i in range(0, k + 1)]
    rules += [(4 * i + 3, 3 * k - i) for i in range(0, k)]
    return _assign(rules, 4 * k + 1, f"3mod8 k={k}")


def case_1mod8_edges(k: int) -> Tuple[int, ...]:
    """m = 8k+1 on P_{4k+1}."""
    rules = [(4 * k, 2 * k), (4 * k - 1, 4 * k)]
    rules += [(2 * i, 2 * k - i) for i in range(1, 2 * k)]
    rules += [(4 * i + 1, 2 * k + 1 + i) for i in range(0, k)]
    rules += [(4 * i + 3, 5 * k + 1 + i) for i in range(0, k - 1)]
    return _assign(rules, 4 * k, f"1mod8 k={k}")


def case_5mod8_edges(k: int) -> Tuple[int, ...]:
    """m = 8k+5 on P_{4k+3}."""
    rules = [(1, 8 * k + 5), (2, 5 * k + 4)]
    rules += [(2 * i + 1, 2 * k + 2 - 2 * i) for i in range(1, k + 1)]
    rules += [(2 * k + 2 * i + 1, 2 * k + 3 - 2 * i) for i in range(1, k + 1)]
    rules += [(2 * i + 2, 6 * k + 4 + i) for i in range(1, 2 * k + 1)]
    return _assign(rules, 4 * k + 2, f"5mod8 k={k}")


def case_2mod8_edges(j: int) -> Tuple[int, ...]:
    """m = 8j+2 on P_{4j+2} with the last vertex deleted."""
    rules = [(2 * i, i) for i in range(1, 2 * j + 1)]
    rules += [(4 * i - 3, 6 * j + 2 - i) for i in range(1, j + 2)]
    rules += [(4 * i - 1, 5 * j + 1 - i) for i in range(1, j + 1)]
    return _assign(rules, 4 * j + 1, f"2mod8 j={j}")


def case_4mod8_edges(j: int) -> Tuple[int, ...]:
    """m = 8j+4 on P_{4j+3} with the last vertex deleted."""
    rules = [(2 * i - 1, 4 * j + 3 - i) for i in range(1, 2 * j + 2)]
    rules += [(2 * i, 2 * i) for i in range(1, j + 1)]
    rules += [(2 * j + 2 * i, 2 * i - 1) for i in range(1, j + 2)]
    return _assign(rules, 4 * j + 2, f"4mod8 j={j}")


PrintedItems = Dict[str, Dict[int, int]]


def case_7mod8_printed_vertices(k: int) -> PrintedItems:
    items = {
        "i": {1: 6 * k - 2, 2 * k - 1: 7 * k - 1, 2 * k: 6 * k - 1},
        "ii": {2 * i + 1: 4 * k - 1 + i for i in range(1, k - 1)},
        "iii": {2 * k - 1 + 2 * i: 6 * k - 1 - 2 * i for i in _halves(k, k // 2, (k + 1) // 2)},
        "vi": {2 * i: 6 * k - 1 + i for i in range(1, k)},
        "vii": {2 * k + 2 * i: 8 * k - 2 * i for i in _halves(k, k // 2, (k - 1) // 2)},
    }
    if k % 2 == 0:
        items["iv"] = {3 * k - 1 + 2 * i: 5 * k - 3 + 2 * i for i in range(1, k // 2 + 1)}
        items["viii"] = {3 * k + 2 * i: 7 * k - 1 + 2 * i for i in range(1, k // 2 + 1)}
    else:
        items["v"] = {3 * k + 2 * i: 5 * k - 4 + 2 * i for i in range(1, (k - 1) // 2 + 1)}
        items["ix"] = {3 * k - 1 + 2 * i: 7 * k - 2 + 2 * i for i in range(1, (k + 1) // 2 + 1)}
    return items


def case_3mod8_printed_vertices(k: int) -> PrintedItems:
    # only even-indexed vertices are given
    return {
        "i": {4 * i + 2: 5 * k + 1 - i for i in range(0, k)},
        "ii": {4 * i + 4: 6 * k + 1 - i for i in range(0, k)},
        "iii": {4 * k + 2: 6 * k + 2},
    }


def case_1mod8_printed_vertices(k: int) -> PrintedItems:
    return {
        "i": {1: 8 * k, 4 * k - 1: 6 * k, 4 * k + 1: 8 * k + 1},
        "ii": {4 * i + 1: 7 * k - 3 + i for i in range(1, k)},
        "iii": {4 * i - 1: 3 * k + i for i in range(1, k)},
        "iv": {4 * i + 2: 7 * k + i for i in range(0, k)},
        "v": {4 * i + 4: 4 * k + 1 + i for i in range(0, k)},
    }


def case_5mod8_printed_vertices(k: int) -> PrintedItems:
    return {
        "i": {1: 3 * k + 2, 2: 1, 3: 4 * k + 3, 2 * k + 3: 2 * k + 2, 4 * k + 3: 3 * k + 3},
        "ii": {2 * i + 3: 3 * k + 3 + i for i in range(1, k)},
        "iii": {2 * k + 2 * i + 1: 2 * k + 1 + i for i in range(1, k + 1)},
        "iv": {2 * i + 2: 5 * k + 4 + i for i in range(1, k + 1)},
        "v": {2 * k + 2 * i + 2: 4 * k + 3 + i for i in range(1, k + 1)},
    }


def case_2mod8_printed_vertices(j: int) -> PrintedItems:
    return {
        "i": {4 * i - 2: 3 * j + 1 - i for i in range(1, j + 1)},
        "ii": {4 * i: 4 * j + 1 - i for i in range(1, j + 1)},
        "iii": {4 * i - 3: 7 * j + 3 - i for i in range(1, j + 2)},
        "iv": {4 * i - 1: 8 * j + 3 - i for i in range(1, j + 1)},
    }


def case_4mod8_printed_vertices(j: int) -> PrintedItems:
    return {
        "i": {2 * i - 1: 7 * j + 5 - i for i in range(1, j + 2)},
        "ii": {2 * j + 1 + 2 * i: 8 * j + 5 - i for i in range(1, j + 1)},
        "iii": {2 * i: 5 * j + 3 - i for i in range(1, j + 1)},
        "iv": {2 * j + 2 * i: 7 * j + 1 - i for i in range(1, j + 2)},
    }
