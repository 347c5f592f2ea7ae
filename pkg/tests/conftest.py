from functools import lru_cache
from itertools import permutations

import pytest


def naive_is_valid(a):
    """Direct transcription of the definition; shares no code with twosums."""
    m = len(a)
    if sorted(a) != list(range(1, m + 1)):
        return False

    def s(p):
        return sum(a[q - 1] for q in (p - 1, p, p + 1) if 1 <= q <= m)

    xs = {s(p) for p in range(1, m + 1, 4)}
    ys = {s(p) for p in range(3, m + 1, 4)}
    return len(xs) == 1 and len(ys) == 1 and xs != ys


@lru_cache(maxsize=None)
def brute_force_solutions(m):
    return tuple(p for p in permutations(range(1, m + 1)) if naive_is_valid(p))


@pytest.fixture
def brute_force():
    return brute_force_solutions


# Sequences printed with their weight pairs.
FIGURES = {
    23: ((16, 10, 18, 3, 12, 11, 19, 1, 20, 5, 17, 9, 15, 2, 22, 7, 13, 6, 21, 4, 14, 8, 23), (26, 31)),
    31: (
        (22, 13, 24, 5, 16, 14, 25, 3, 17, 15, 26, 1, 27, 7, 23, 12, 21, 2, 30, 10, 19, 6, 28, 8,
         18, 9, 29, 4, 20, 11, 31),
        (35, 42),
    ),
    27: (
        (24, 13, 16, 1, 27, 9, 19, 2, 23, 12, 15, 3, 26, 8, 18, 4, 22, 11, 14, 5, 25, 7, 17, 6,
         21, 10, 20),
        (37, 30),
    ),
    25: (
        (24, 7, 21, 5, 10, 16, 13, 4, 19, 8, 22, 3, 11, 17, 14, 2, 20, 9, 23, 1, 18, 12, 15, 6, 25),
        (31, 33),
    ),
    29: (
        (11, 29, 1, 19, 15, 6, 20, 23, 13, 4, 21, 24, 14, 2, 22, 25, 8, 7, 16, 26, 9, 5, 17, 27,
         10, 3, 18, 28, 12),
        (40, 49),
    ),
    26: (
        (23, 19, 9, 1, 26, 15, 12, 2, 22, 18, 8, 3, 25, 14, 11, 4, 21, 17, 7, 5, 24, 13, 10, 6,
         20, 16),
        (42, 29),
    ),
    20: ((18, 10, 12, 2, 17, 9, 11, 4, 16, 8, 15, 1, 20, 7, 14, 3, 19, 6, 13, 5), (28, 24)),
}

BASES = {
    5: ((1, 5, 3, 4, 2), (6, 12)),
    9: ((6, 4, 7, 3, 2, 5, 8, 1, 9), (10, 14)),
    13: ((5, 13, 1, 9, 7, 2, 10, 11, 4, 3, 8, 12, 6), (18, 23)),
    15: ((10, 7, 12, 1, 13, 3, 11, 6, 9, 2, 14, 4, 8, 5, 15), (17, 20)),
}


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
