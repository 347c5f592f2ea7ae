import pytest

from twosums.constructor import construct
from twosums.oracle import MAX_EXHAUSTIVE_M, SearchConfig, census, exists, search
from twosums.seqcore import verify

# raw solution counts, cross-checked against itertools brute force for m <= 9
RAW_COUNTS = {3: 6, 4: 20, 5: 20, 6: 26, 7: 0, 8: 62, 9: 24, 10: 298, 11: 124, 12: 1174}


@pytest.mark.parametrize("m", range(3, 10))
def test_matches_brute_force(m, brute_force):
    outcome = search(SearchConfig(m))
    assert outcome.exhausted
    assert outcome.solutions == list(brute_force(m))
    assert outcome.count == RAW_COUNTS[m]


@pytest.mark.parametrize("m", [10, 11, 12])
def test_frozen_counts(m):
    outcome = search(SearchConfig(m, mode="count"))
    assert outcome.exhausted and outcome.count == RAW_COUNTS[m]
    assert outcome.solutions == []


def test_m7_impossible():
    outcome = search(SearchConfig(7, mode="exists"))
    assert outcome.exhausted
    assert outcome.count == 0 and not outcome.found
    assert outcome.nodes_explored < 10_000
    assert not exists(7)


def test_m3_all_permutations_valid():
    assert search(SearchConfig(3, mode="count")).count == 6


def test_m5_contains_base():
    assert (1, 5, 3, 4, 2) in search(SearchConfig(5)).solutions


def test_exists_small():
    assert exists(6) and exists(4)
    assert search(SearchConfig(6, mode="first")).solutions == [(2, 6, 5, 1, 3, 4)]


def test_m9_census():
    counts = census(9)
    assert counts == {"raw": 24, "reversal": 12, "palindromes": 0}


@pytest.mark.parametrize("m", [3, 5, 9, 11])
def test_symmetry_quotient(m):
    raw = search(SearchConfig(m))
    reduced = search(SearchConfig(m, symmetry="reversal"))
    assert raw.count == 2 * reduced.count - raw.palindromes
    assert all(s <= s[::-1] for s in reduced.solutions)
    assert set(reduced.solutions) == {min(s, s[::-1]) for s in raw.solutions}


def test_reversal_rejected_for_even_m():
    with pytest.raises(ValueError):
        SearchConfig(6, symmetry="reversal")


@pytest.mark.parametrize(
    "kwargs", [dict(m=2), dict(m=5, mode="any"), dict(m=5, limit=0), dict(m=5, workers=0)]
)
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        SearchConfig(**kwargs)


def test_limit_stops_early():
    outcome = search(SearchConfig(10, limit=5))
    assert len(outcome.solutions) == 5 and not outcome.exhausted
    assert outcome.solutions == search(SearchConfig(10)).solutions[:5]


def test_node_budget_gives_inconclusive():
    outcome = search(SearchConfig(13, mode="count", max_nodes=100))
    assert not outcome.exhausted


def test_large_m_uses_budget():
    assert SearchConfig(MAX_EXHAUSTIVE_M).node_budget is None
    assert SearchConfig(MAX_EXHAUSTIVE_M + 1).node_budget is not None
    outcome = search(SearchConfig(17, mode="first"))
    assert outcome.found and verify(outcome.solutions[0]).valid
    # running out of budget is reported as inconclusive, never as nonexistence
    outcome = search(SearchConfig(40, mode="exists", max_nodes=20_000))
    assert not outcome.found and not outcome.exhausted


def test_solutions_verify_and_sorted():
    for m in range(3, 12):
        sols = search(SearchConfig(m)).solutions
        assert sols == sorted(sols)
        assert all(verify(s).valid for s in sols)


def test_oracle_agrees_with_construction():
    for m in range(3, 12):
        outcome = search(SearchConfig(m))
        assert outcome.found == (m != 7)
        if m != 7:
            assert construct(m).values in outcome.solutions


def test_deterministic():
    a = search(SearchConfig(10))
    b = search(SearchConfig(10))
    assert a == b


@pytest.mark.parametrize("mode", ["all", "count", "first", "exists"])
def test_parallel_matches_serial(mode):
    serial = search(SearchConfig(9, mode=mode))
    parallel = search(SearchConfig(9, mode=mode, workers=2))
    assert parallel.solutions == serial.solutions
    assert parallel.count == serial.count
    assert parallel.exhausted == serial.exhausted


def test_parallel_m7_exhausts():
    outcome = search(SearchConfig(7, mode="exists", workers=2))
    assert outcome.exhausted and not outcome.found
