from itertools import combinations

import numpy as np
from hypothesis import settings, strategies as st

from stochmatch import build_graph

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@st.composite
def small_graphs(draw, n_max=8, m_cap=24):
    n = draw(st.integers(0, n_max))
    pairs = list(combinations(range(n), 2))
    picked = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=m_cap)) \
        if pairs else []
    return build_graph(n, picked)


def random_graph(rng: np.random.Generator, n_max: int, m_cap: int, n_min: int = 2):
    while True:
        n = int(rng.integers(n_min, n_max + 1))
        q = float(rng.random()) * 0.7
        pairs = list(combinations(range(n), 2))
        keep = [e for e in pairs if rng.random() < q]
        if len(keep) <= m_cap:
            return build_graph(n, keep)


def has_augmenting_path(g, mate) -> bool:
    """Exhaustive search for a simple alternating path between two exposed
    vertices; correct on any graph because it enumerates all simple paths.
    Only usable on small instances."""
    exposed = [v for v in range(g.n) if mate[v] < 0]

    def dfs(v, visited, need_matched):
        _, nbrs = g.incident(v)
        for w in nbrs.tolist():
            if w in visited:
                continue
            if need_matched:
                if mate[v] == w and dfs(w, visited | {w}, False):
                    return True
            else:
                if mate[v] == w:
                    continue
                if mate[w] < 0:
                    return True
                if dfs(w, visited | {w}, True):
                    return True
        return False

    for s in exposed:
        if dfs(s, {s}, False):
            return True
    return False
