import numpy as np
import pytest
from hypothesis import given

from stochmatch import (DuplicateEdgeError, EdgeSet, Matching, ParentMismatchError,
                        SelfLoopError, VertexRangeError, build_graph, degree,
                        is_b_matching, is_matching, max_degree, remove_edges, union)

from conftest import small_graphs


def test_triangle_construction():
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert g.n == 3 and g.m == 3
    assert g.edges == [(0, 1), (1, 2), (0, 2)]


def test_self_loop_rejected():
    with pytest.raises(SelfLoopError):
        build_graph(2, [(0, 0)])


def test_duplicate_rejected():
    with pytest.raises(DuplicateEdgeError):
        build_graph(4, [(0, 1), (0, 1)])
    with pytest.raises(DuplicateEdgeError):
        build_graph(4, [(0, 1), (1, 0)])  # unordered duplicate


def test_out_of_range_rejected():
    with pytest.raises(VertexRangeError):
        build_graph(3, [(0, 3)])
    with pytest.raises(VertexRangeError):
        build_graph(3, [(-1, 2)])


def test_edge_ids_are_positions():
    g = build_graph(5, [(3, 4), (0, 1), (2, 0)])
    assert g.edge(0) == (3, 4)
    assert g.edge(2) == (0, 2)  # normalized to u < v
    assert g.edge_id(4, 3) == 0


def test_remove_edges_triangle():
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    sub, id_map = remove_edges(g, EdgeSet(g, [1]))
    assert sub.m == 2 and sub.n == 3
    assert id_map.tolist() == [0, 2]
    assert sub.edges == [(0, 1), (0, 2)]


def test_remove_nothing_and_everything():
    g = build_graph(4, [(0, 1), (2, 3)])
    same, id_map = remove_edges(g, EdgeSet(g, []))
    assert same.edges == g.edges and id_map.tolist() == [0, 1]
    none, _ = remove_edges(g, EdgeSet(g, [0, 1]))
    assert none.m == 0 and none.n == 4


def test_remove_foreign_set_rejected():
    g = build_graph(3, [(0, 1)])
    h = build_graph(3, [(0, 1)])
    with pytest.raises(ParentMismatchError):
        remove_edges(g, EdgeSet(h, [0]))


def test_star_degree():
    g = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    s = EdgeSet(g, range(3))
    assert degree(s, 0) == 3
    assert degree(s, 1) == 1
    assert max_degree(s) == 3


def test_is_matching_shared_vertex():
    g = build_graph(3, [(0, 1), (1, 2)])
    assert not is_matching(EdgeSet(g, [0, 1]))
    assert is_matching(EdgeSet(g, [0]))
    with pytest.raises(Exception):
        Matching(g, [0, 1])


def test_union_dedupes():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    a = EdgeSet(g, [0])
    b = EdgeSet(g, [0, 1])
    assert union(a, b).members == {0, 1}
    with pytest.raises(ParentMismatchError):
        union(a, EdgeSet(build_graph(4, [(0, 1)]), [0]))


@given(small_graphs())
def test_degree_sum_is_twice_edge_count(g):
    assert int(g.degrees.sum()) == 2 * g.m


@given(small_graphs())
def test_adjacency_consistent(g):
    seen = np.zeros(g.m, int)
    for v in range(g.n):
        eids, nbrs = g.incident(v)
        for e, w in zip(eids.tolist(), nbrs.tolist()):
            assert g.edge(e) in ((v, w), (w, v))
            seen[e] += 1
    assert (seen == 2).all() if g.m else True


@given(small_graphs())
def test_remove_then_union_restores(g):
    if g.m == 0:
        return
    rng = np.random.default_rng(0)
    x = EdgeSet(g, rng.choice(g.m, size=rng.integers(0, g.m + 1), replace=False))
    sub, id_map = remove_edges(g, x)
    back = set(id_map.tolist()) | x.members
    assert back == set(range(g.m))


@given(small_graphs())
def test_b_matching_with_cap_1_is_matching(g):
    rng = np.random.default_rng(1)
    for _ in range(5):
        if g.m == 0:
            break
        ids = rng.choice(g.m, size=rng.integers(0, g.m + 1), replace=False)
        s = EdgeSet(g, ids)
        assert is_b_matching(s, 1) == is_matching(s)
