import numpy as np

from stochmatch import (EdgeSet, build_graph, complete_graph,
                        decompose_into_matchings, erdos_renyi, is_matching,
                        max_degree, vizing_color)


def proper(g, colors):
    for v in range(g.n):
        eids, _ = g.incident(v)
        cs = colors[eids].tolist()
        if len(set(cs)) != len(cs):
            return False
    return True


def test_path_three_edges():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    col = vizing_color(g)
    assert col.palette <= 3
    assert proper(g, col.colors)


def test_single_edge_one_color():
    g = build_graph(2, [(0, 1)])
    col = vizing_color(g)
    assert len(col.classes()) == 1


def test_k4_within_delta_plus_one():
    g = complete_graph(4)
    col = vizing_color(g)
    assert col.palette <= 4
    assert proper(g, col.colors)


def test_triangle_needs_three_classes():
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    classes = decompose_into_matchings(EdgeSet(g, range(3)))
    assert len(classes) == 3
    assert all(len(c) == 1 for c in classes)


def test_matching_is_single_class():
    g = build_graph(6, [(0, 1), (2, 3), (4, 5)])
    classes = decompose_into_matchings(EdgeSet(g, range(3)))
    assert len(classes) == 1
    assert classes[0].members == {0, 1, 2}


def test_star_singleton_classes():
    g = build_graph(5, [(0, i) for i in range(1, 5)])
    classes = decompose_into_matchings(EdgeSet(g, range(4)))
    assert len(classes) == 4


def test_decompose_respects_subset_and_cap():
    rng = np.random.default_rng(0)
    for _ in range(40):
        n = int(rng.integers(2, 30))
        g = erdos_renyi(n, float(rng.random()) * 0.6, int(rng.integers(1 << 31)))
        if g.m == 0:
            continue
        ids = rng.choice(g.m, size=int(rng.integers(1, g.m + 1)), replace=False)
        s = EdgeSet(g, ids)
        classes = decompose_into_matchings(s)
        assert len(classes) <= max_degree(s) + 1
        assert all(is_matching(c) for c in classes)
        got = set()
        for c in classes:
            assert not (c.members & got)
            got |= c.members
        assert got == s.members


def test_random_graphs_proper_and_bounded():
    rng = np.random.default_rng(1)
    for _ in range(60):
        n = int(rng.integers(2, 120))
        g = erdos_renyi(n, float(rng.random()) * min(1.0, 8.0 / max(n - 1, 1)),
                        int(rng.integers(1 << 31)))
        col = vizing_color(g)
        if g.m == 0:
            continue
        assert col.palette <= int(g.degrees.max()) + 1
        assert proper(g, col.colors)
