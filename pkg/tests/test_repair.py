import pytest

from twosums import formulas
from twosums.constructor import BUILDERS, interleave
from twosums.repair import RepairDefect, RepairInput, derive_vertices, validate_completion
from twosums.seqcore import WeightPair, verify


def test_derive_case3_k1():
    inp = RepairInput(6, (5, 1, 3, 2, 4), WeightPair(15, 12))
    vertices = derive_vertices(inp)
    assert vertices[0::2] == [10, 11, 9]
    assert vertices[1::2] == [6, 7, 8]
    ok, diag = validate_completion(vertices, inp.edge_labels, 11)
    assert ok and diag == []


def test_derive_truncated_case4_j2():
    edges = formulas.case_4mod8_edges(2)
    assert edges[4:6] == (8, 1)
    vertices = derive_vertices(RepairInput(11, edges, WeightPair(28, 24), truncated=True))
    assert len(vertices) == 10
    assert vertices[5] == 24 - 8 - 1 == 15


def test_derive_trivial():
    assert derive_vertices(RepairInput(2, (2,), WeightPair(3, 5))) == [1, 3]


def test_derive_rejects_nonpositive():
    with pytest.raises(RepairDefect) as info:
        derive_vertices(RepairInput(3, (4, 5), WeightPair(3, 20)), case="demo")
    assert info.value.index == 1
    assert "demo" in str(info.value)


def test_repair_input_invariants():
    with pytest.raises(ValueError):
        RepairInput(3, (1, 1), WeightPair(4, 5))
    with pytest.raises(ValueError):
        RepairInput(3, (1,), WeightPair(4, 5))
    with pytest.raises(ValueError):
        RepairInput(3, (1, 9), WeightPair(4, 5))
    assert RepairInput(3, (1, 2), WeightPair(4, 5), truncated=True).label_range == 4


def test_validate_completion_diagnostics():
    ok, diag = validate_completion([1, 1], [2], 3)
    assert not ok and any("duplicate 1" in d for d in diag)
    ok, diag = validate_completion([1, 4], [2], 3)
    assert not ok
    assert any("4 out of range" in d for d in diag)
    assert any("missing 3" in d for d in diag)


def _vertices(tag, k):
    return BUILDERS[tag](k).vertex_labels


def _disagreements(tag, k, printed):
    derived = _vertices(tag, k)
    return {
        item: {i: (v, derived[i - 1]) for i, v in assignment.items() if derived[i - 1] != v}
        for item, assignment in printed.items()
    }


@pytest.mark.parametrize("k", range(3, 15))
def test_case7_vertex_items_agree_except_iv_v(k):
    bad = _disagreements("Case7Mod8", k, formulas.case_7mod8_printed_vertices(k))
    assert all(not bad[item] for item in bad if item not in ("iv", "v"))
    # the constants 5k-3 and 5k-4 of items (iv) and (v) are exchanged
    derived = _vertices("Case7Mod8", k)
    if k % 2 == 0:
        assert bad["iv"]
        for i in range(1, k // 2 + 1):
            assert derived[3 * k - 1 + 2 * i - 1] == 5 * k - 4 + 2 * i
    else:
        assert bad["v"]
        for i in range(1, (k - 1) // 2 + 1):
            assert derived[3 * k + 2 * i - 1] == 5 * k - 3 + 2 * i


@pytest.mark.parametrize("k", range(1, 15))
def test_case3_printed_even_vertices_agree(k):
    bad = _disagreements("Case3Mod8", k, formulas.case_3mod8_printed_vertices(k))
    assert not any(bad.values())


@pytest.mark.parametrize("k", range(2, 15))
def test_case1_vertex_items(k):
    bad = _disagreements("Case1Mod8", k, formulas.case_1mod8_printed_vertices(k))
    assert not any(bad[item] for item in ("i", "iii", "iv", "v"))
    # item (ii) only holds at k = 3, where 7k-3 = 6k
    assert (not bad["ii"]) == (k == 3)
    derived = _vertices("Case1Mod8", k)
    for i in range(1, k):
        assert derived[4 * i] == 6 * k + i


def test_case1_printed_items_collide_at_k2():
    printed = formulas.case_1mod8_printed_vertices(2)
    assert printed["ii"][5] == printed["i"][7] == 12
    assert _vertices("Case1Mod8", 2)[4] == 13


@pytest.mark.parametrize("k", range(3, 15))
def test_case5_vertex_items_agree(k):
    bad = _disagreements("Case5Mod8", k, formulas.case_5mod8_printed_vertices(k))
    assert not any(bad.values())


@pytest.mark.parametrize("j", range(1, 15))
def test_case2_vertex_items_agree(j):
    bad = _disagreements("Case2Mod8", j, formulas.case_2mod8_printed_vertices(j))
    assert not any(bad.values())


@pytest.mark.parametrize("j", range(1, 15))
def test_case4_vertex_items(j):
    bad = _disagreements("Case4Mod8", j, formulas.case_4mod8_printed_vertices(j))
    assert not any(bad[item] for item in ("i", "ii", "iii"))
    # item (iv) only holds at j = 3, where 7j+1 = 6j+4
    assert (not bad["iv"]) == (j == 3)
    derived = _vertices("Case4Mod8", j)
    for i in range(1, j + 2):
        assert derived[2 * j + 2 * i - 1] == 6 * j + 4 - i


def test_case4_j2_item_iv_against_figure():
    printed = formulas.case_4mod8_printed_vertices(2)
    assert printed["iv"][6] == 14
    assert _vertices("Case4Mod8", 2)[5] == 15


@pytest.mark.parametrize("tag", sorted(BUILDERS))
def test_completion_soundness(tag):
    # weights are met by construction; only bijectivity needed checking
    k = {"Case7Mod8": 5, "Case5Mod8": 4, "Case1Mod8": 3}.get(tag, 2)
    lab = BUILDERS[tag](k)
    ok, _ = validate_completion(lab.vertex_labels, lab.edge_labels, lab.m)
    assert ok
    assert verify(interleave(lab)).valid
