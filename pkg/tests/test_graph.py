from fractions import Fraction
from itertools import combinations

import pytest

from tutte_activities import graph as gr
from conftest import fixture_graph, letters_of, mask_of


def kirchhoff_count(g):
    """Independent spanning-tree count: determinant of a reduced Laplacian.

    Exact rational Gaussian elimination; loops do not enter the Laplacian.
    """
    n = g.vertex_count
    if n == 1:
        return 1
    lap = [[Fraction(0)] * n for _ in range(n)]
    for _, u, v in g.edges:
        if u != v:
            lap[u][u] += 1
            lap[v][v] += 1
            lap[u][v] -= 1
            lap[v][u] -= 1
    mat = [row[1:] for row in lap[1:]]
    det = Fraction(1)
    size = n - 1
    for col in range(size):
        pivot = next((r for r in range(col, size) if mat[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            det = -det
        det *= mat[col][col]
        for r in range(col + 1, size):
            factor = mat[r][col] / mat[col][col]
            for c in range(col, size):
                mat[r][c] -= factor * mat[col][c]
    assert det.denominator == 1
    return int(det)


def test_classify_examples(g4):
    single = fixture_graph("single_isthmus")
    assert gr.classify_edge(single, 0) == gr.ISTHMUS
    loop = fixture_graph("single_loop")
    assert gr.classify_edge(loop, 0) == gr.LOOP
    assert gr.classify_edge(g4, 0) == gr.STANDARD


def test_classify_unknown_edge(g4):
    with pytest.raises(ValueError):
        gr.classify_edge(g4, 9)


def test_delete_gives_triangle(g4):
    assert gr.delete(g4, 3) == fixture_graph("triangle")


def test_contract_merges_to_smaller_id(g4):
    contracted = gr.contract(g4, 1)  # b = {1,2}
    assert contracted.vertex_count == 2
    assert all(set((u, v)) == {0, 1} for _, u, v in contracted.edges)
    assert contracted.edge_ids == (0, 2, 3)


def test_contract_path_edge():
    path = gr.Graph(3, [(0, 0, 1), (1, 1, 2)])
    for eid in (0, 1):
        smaller = gr.contract(path, eid)
        assert smaller.edge_count() == 1
        assert smaller.vertex_count == 2


def test_contract_loop_rejected():
    loop = fixture_graph("single_loop")
    with pytest.raises(ValueError):
        gr.contract(loop, 0)


def test_cc_cycl_examples(g4):
    assert gr.cc(g4, 0) == 3 and gr.cycl(g4, 0) == 0
    assert gr.cc(g4, mask_of("ad")) == 2 and gr.cycl(g4, mask_of("ad")) == 1
    assert gr.cc(g4, mask_of("abcd")) == 1 and gr.cycl(g4, mask_of("abcd")) == 2


def test_cycl_zero_iff_forest(g4):
    for mask in range(16):
        by_def = all(gr.cc(g4, mask & ~(1 << e)) > gr.cc(g4, mask)
                     for e in gr.edge_ids(mask)) if mask else True
        # a forest is exactly a subgraph all of whose edges are isthmuses in it
        assert (gr.cycl(g4, mask) == 0) == by_def


def test_spanning_trees_goldens(g4):
    assert [letters_of(t) for t in gr.spanning_trees(g4)] == \
        ["ab", "ac", "bc", "bd", "cd"]
    assert gr.spanning_trees(fixture_graph("single_isthmus")) == [1]
    assert len(gr.spanning_trees(fixture_graph("cycle4"))) == 4


def test_spanning_trees_match_brute_force_cycle4():
    c4 = fixture_graph("cycle4")
    brute = [gr.edge_set(c) for c in combinations(range(4), 3)
             if gr.cc(c4, gr.edge_set(c)) == 1]
    assert sorted(brute) == gr.spanning_trees(c4)


def test_spanning_trees_reject_disconnected():
    g = gr.Graph(3, [(0, 0, 1)])
    with pytest.raises(ValueError):
        gr.spanning_trees(g)


@pytest.mark.parametrize("name", [
    "parallel_triangle", "triangle", "cycle4", "cycles_cocycles", "dfs_six",
    "dfs_five", "dfs_forest_counterexample"])
def test_tree_count_matches_kirchhoff(name):
    g = fixture_graph(name)
    assert len(gr.spanning_trees(g)) == kirchhoff_count(g)


def test_fundamental_sets_on_reconstructed_fixture():
    g = fixture_graph("cycles_cocycles")
    tree = mask_of("abdei")
    assert gr.is_spanning_tree(g, tree)
    assert letters_of(gr.fundamental_cycle(g, tree, 9)) == "deij"
    assert letters_of(gr.fundamental_cocycle(g, tree, 4)) == "efgj"


def is_cycle(g, mask):
    """Edge set of one simple closed path: connected, all degrees two."""
    if gr.cycl(g, mask) != 1 or gr.cc(g, mask) != g.vertex_count - gr.popcount(mask) + 1:
        return False
    degree = {}
    for eid in gr.edge_ids(mask):
        u, v = g.endpoints(eid)
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
    return all(d == 2 for d in degree.values())


def test_cycle_and_cocycle_membership_facts():
    g = fixture_graph("cycles_cocycles")
    assert is_cycle(g, mask_of("acd"))
    assert not is_cycle(g, mask_of("acdgij"))
    full = g.full_edge_set()
    bh = mask_of("bh")
    assert gr.cc(g, full & ~bh) == 2
    assert all(gr.cc(g, full & ~sub) == 1
               for sub in (mask_of("b"), mask_of("h")))
    bhij = mask_of("bhij")
    assert gr.cc(g, full & ~bhij) > 1  # still a cut, but not minimal


def test_g4_fundamental_cycle(g4):
    assert letters_of(gr.fundamental_cycle(g4, mask_of("ac"), 1)) == "abc"


def test_loop_fundamental_cycle():
    g = gr.Graph(2, [(0, 0, 1), (1, 0, 0)])
    assert gr.fundamental_cycle(g, 1, 1) == 2  # the loop alone


def test_isthmus_fundamental_cocycle():
    single = fixture_graph("single_isthmus")
    assert gr.fundamental_cocycle(single, 1, 0) == 1


def test_fundamental_set_side_errors(g4):
    with pytest.raises(ValueError):
        gr.fundamental_cycle(g4, mask_of("ac"), 0)  # internal edge
    with pytest.raises(ValueError):
        gr.fundamental_cocycle(g4, mask_of("ac"), 1)  # external edge


def test_delete_contract_commute_on_disjoint_edges(g4):
    for e_del, e_con in [(3, 1), (0, 1), (2, 1)]:
        assert (gr.contract(gr.delete(g4, e_del), e_con)
                == gr.delete(gr.contract(g4, e_con), e_del))


@pytest.mark.parametrize("name", [
    "parallel_triangle", "single_loop", "cycles_cocycles", "dfs_six"])
def test_text_format_round_trip(name):
    g = fixture_graph(name)
    text = gr.format_graph(g)
    assert gr.parse_graph(text) == g
    assert gr.format_graph(gr.parse_graph(text)) == text


def test_parser_reports_line_numbers():
    with pytest.raises(ValueError, match="line 2"):
        gr.parse_graph("vertices 2\nedge 0 0\n")
    with pytest.raises(ValueError, match="vertices"):
        gr.parse_graph("edge 0 0 1\n")


def test_constructor_validation():
    with pytest.raises(ValueError):
        gr.Graph(2, [(0, 0, 1), (0, 1, 0)])  # duplicate id
    with pytest.raises(ValueError):
        gr.Graph(2, [(0, 0, 2)])  # endpoint out of range


@pytest.mark.parametrize("name", ["parallel_triangle", "cycle4",
                                  "cycles_cocycles"])
def test_fundamental_cocycle_is_minimal_cut(name):
    g = fixture_graph(name)
    full = g.full_edge_set()
    base = gr.cc(g, full)
    for tree in gr.spanning_trees(g)[:6]:
        for eid in gr.edge_ids(tree):
            coc = gr.fundamental_cocycle(g, tree, eid)
            assert gr.cc(g, full & ~coc) == base + 1
            for drop in gr.edge_ids(coc):
                sub = coc & ~(1 << drop)
                if sub:
                    assert gr.cc(g, full & ~sub) == base
