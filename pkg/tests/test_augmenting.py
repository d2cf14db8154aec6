import math

import numpy as np
import pytest

from stochmatch import (EdgeSet, GraphError, Matching, augment, build_graph,
                        census, decompose_into_matchings,
                        find_disjoint_three_paths, maximum_matching,
                        sequential_matching_process)
from stochmatch.bounds import f as f_shape
from stochmatch.verify import regular_bipartite_capped_set

from conftest import random_graph


def mask_for(g, realized_ids):
    mask = np.zeros(g.m, bool)
    mask[list(realized_ids)] = True
    return mask


def test_sequential_single_matching():
    g = build_graph(4, [(0, 1), (2, 3)])
    m1 = Matching(g, [0, 1])
    out = sequential_matching_process([m1], mask_for(g, [0, 1]))
    assert out.members == {0, 1}


def test_sequential_second_round_blocked():
    g = build_graph(3, [(0, 1), (1, 2)])
    m1 = Matching(g, [0])
    m2 = Matching(g, [1])
    out = sequential_matching_process([m1, m2], mask_for(g, [0, 1]))
    assert out.members == {0}


def test_sequential_nothing_realized():
    g = build_graph(3, [(0, 1), (1, 2)])
    out = sequential_matching_process([Matching(g, [0]), Matching(g, [1])],
                                      mask_for(g, []))
    assert len(out) == 0


def test_sequential_requires_disjoint():
    g = build_graph(3, [(0, 1), (1, 2)])
    with pytest.raises(GraphError):
        sequential_matching_process([Matching(g, [0]), Matching(g, [0])],
                                    mask_for(g, [0]))


def path_graph_fixture():
    # a - u - v - b plus a second matched edge to exercise disjointness
    return build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 5)])


def test_three_path_found():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    mplus = Matching(g, [1])  # (1, 2) matched
    cands = EdgeSet(g, [0, 2])
    res = find_disjoint_three_paths(mplus, cands, mask_for(g, [0, 2]))
    assert len(res) == 1
    tp = res.paths[0]
    assert (tp.a, tp.u, tp.v, tp.b) == (0, 1, 2, 3)


def test_three_path_exclusivity_blocked():
    # pendant 0 adjacent to two different matched vertices 1 and 3
    g = build_graph(6, [(1, 2), (3, 4), (0, 1), (0, 3), (2, 5)])
    mplus = Matching(g, [0, 1])
    cands = EdgeSet(g, [2, 3, 4])
    res = find_disjoint_three_paths(mplus, cands, mask_for(g, [2, 3, 4]))
    # vertex 0 touches matched vertices of two different edges: not exclusive,
    # so neither matched edge can complete a path through it
    assert len(res) == 0


def test_three_path_nothing_realized():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    res = find_disjoint_three_paths(Matching(g, [1]), EdgeSet(g, [0, 2]),
                                    mask_for(g, []))
    assert len(res) == 0


def test_three_path_candidate_validation():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    with pytest.raises(GraphError):
        # edge (1,2) touches two matched vertices
        find_disjoint_three_paths(Matching(g, [1]), EdgeSet(g, [1]),
                                  mask_for(g, [1]))
    with pytest.raises(GraphError):
        # edge (3,4) touches zero matched vertices
        g2 = build_graph(5, [(0, 1), (2, 3), (3, 4)])
        find_disjoint_three_paths(Matching(g2, [0]), EdgeSet(g2, [2]),
                                  mask_for(g2, [2]))


def test_census_single_edge():
    g = build_graph(2, [(0, 1)])
    c = census(Matching(g, [0]), Matching(g, []))
    assert (c.alpha1, c.alpha3, c.alpha_ge5) == (1, 0, 0)


def test_census_length_three():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    c = census(Matching(g, [0, 2]), Matching(g, [1]))
    assert (c.alpha1, c.alpha3, c.alpha_ge5) == (0, 1, 0)


def test_census_identical_matchings():
    g = build_graph(4, [(0, 1), (2, 3)])
    c = census(Matching(g, [0, 1]), Matching(g, [0, 1]))
    assert (c.alpha1, c.alpha3, c.alpha_ge5) == (0, 0, 0)


def test_census_identities_random():
    rng = np.random.default_rng(11)
    for _ in range(80):
        g = random_graph(rng, 10, 10**9)
        m = maximum_matching(g).matching
        # arbitrary (greedy, randomized) matching for mprime
        ids = rng.permutation(g.m)
        taken = []
        used = set()
        for e in ids.tolist():
            u, v = g.edge(e)
            if u not in used and v not in used and rng.random() < 0.7:
                taken.append(e)
                used |= {u, v}
        mp = Matching(g, taken)
        c = census(m, mp)
        assert c.alpha3 + 2 * c.alpha_ge5 <= len(mp)
        assert c.total == len(m) - len(mp)


def test_augment_empty():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    mp = Matching(g, [1])
    assert augment(mp, []).members == mp.members


def test_augment_three_path():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    mp = Matching(g, [1])
    out = augment(mp, [(0, 1, 2)])
    assert out.members == {0, 2}
    assert len(out) == len(mp) + 1


def test_augment_disjoint_singles():
    g = build_graph(6, [(0, 1), (2, 3), (4, 5)])
    out = augment(Matching(g, []), [(0,), (1,), (2,)])
    assert len(out) == 3


def test_augment_with_three_path_set():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    mp = Matching(g, [1])
    res = find_disjoint_three_paths(mp, EdgeSet(g, [0, 2]),
                                    mask_for(g, [0, 2]))
    out = augment(mp, res)
    assert len(out) == 2


def test_augment_rejects_overlap():
    g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    mp = Matching(g, [])
    with pytest.raises(ValueError):
        augment(mp, [(0,), (1,)])  # share vertex 1


def test_augment_rejects_non_alternating():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    mp = Matching(g, [1])
    with pytest.raises(ValueError):
        augment(mp, [(0,)])  # endpoint 1 already matched


def test_successful_edge_probability_floor():
    # matched edge (u, v) with d(u) = d(v) = b pendant candidates each;
    # statistical check of the per-edge success bound with kappa = 5
    p = 0.1
    b = 10
    kappa = 5.0
    n = 2 + 2 * b
    u, v = 0, 1
    edges = [(u, v)]
    edges += [(u, 2 + i) for i in range(b)]
    edges += [(v, 2 + b + i) for i in range(b)]
    g = build_graph(n, edges)
    mplus = Matching(g, [0])
    cands = EdgeSet(g, range(1, g.m))
    rng = np.random.default_rng(42)
    trials = 4000
    hits = 0
    for _ in range(trials):
        mask = np.zeros(g.m, bool)
        mask[1:] = rng.random(g.m - 1) < p
        hits += len(find_disjoint_three_paths(mplus, cands, mask))
    freq = hits / trials
    stderr = math.sqrt(freq * (1 - freq) / trials)
    floor = ((1 - kappa * p) * f_shape(1 / math.e) * p / math.e ** 2
             * (1 - math.exp(-p * b)) * max(b - 1, 0))
    assert freq >= floor - 3 * stderr


def test_sequential_process_respects_lemma_floor():
    # small instance of the decomposition-process bound
    N, p = 30, 0.2
    b = int(1 / p)
    g = regular_bipartite_capped_set(N, b)
    parts = decompose_into_matchings(EdgeSet(g, range(g.m)))
    rng = np.random.default_rng(3)
    vals = []
    for _ in range(300):
        mask = rng.random(g.m) < p
        vals.append(len(sequential_matching_process(parts, mask)))
    mean = float(np.mean(vals))
    stderr = float(np.std(vals, ddof=1) / math.sqrt(len(vals)))
    assert mean >= (1 - 3 * p) * N / 3 - 3 * stderr
