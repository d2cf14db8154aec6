"""Proper edge coloring with at most max-degree + 1 colors.

Misra-Gries style construction: maximal fans, color-alternating path
inversion, fan rotation. The palette bound Delta + 1 is what the
degree-cap decomposition needs; no attempt is made to reach Delta even
when the graph is class 1. Propriety is re-verified before returning.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import EdgeSet, Graph, Matching, subgraph_of


@dataclass(frozen=True)
class EdgeColoring:
    """colors[i] is the color of edge i; palette is the number of colors allowed."""

    colors: np.ndarray
    palette: int

    def classes(self) -> list[list[int]]:
        """Edge ids grouped by color, empty classes dropped."""
        out = []
        for c in range(self.palette):
            ids = np.flatnonzero(self.colors == c)
            if len(ids):
                out.append(ids.tolist())
        return out


class _Palette:
    """Mutable color table: at[v][c] = edge id colored c at v, or -1."""

    def __init__(self, g: Graph, ncolors: int):
        self.g = g
        self.ncolors = ncolors
        self.at = np.full((g.n, ncolors), -1, np.int64)
        self.col = np.full(g.m, -1, np.int64)

    def free(self, v: int) -> int:
        for c in range(self.ncolors):
            if self.at[v, c] < 0:
                return c
        raise AssertionError("no free color; palette too small")

    def is_free(self, v: int, c: int) -> bool:
        return self.at[v, c] < 0

    def set_color(self, e: int, c: int) -> None:
        u, v = self.g.edge(e)
        old = self.col[e]
        if old >= 0:
            self.at[u, old] = -1
            self.at[v, old] = -1
        self.col[e] = c
        self.at[u, c] = e
        self.at[v, c] = e

    def uncolor(self, e: int) -> None:
        old = self.col[e]
        if old >= 0:
            u, v = self.g.edge(e)
            self.at[u, old] = -1
            self.at[v, old] = -1
            self.col[e] = -1


def _invert_path(pal: _Palette, start: int, c: int, d: int) -> None:
    """Swap colors c and d along the maximal alternating path from `start`
    whose first edge has color d. `start` must have color c free, which
    rules out a closed walk."""
    path = []
    v = start
    want = d
    while True:
        e = int(pal.at[v, want])
        if e < 0:
            break
        path.append(e)
        u, w = pal.g.edge(e)
        v = w if u == v else u
        want = c if want == d else d
    # uncolor first: consecutive path edges share vertices, so recoloring
    # in place would clobber live color-table slots
    swapped = [c if pal.col[e] == d else d for e in path]
    for e in path:
        pal.uncolor(e)
    for e, ce in zip(path, swapped):
        pal.set_color(e, ce)


def _maximal_fan(pal: _Palette, u: int, v: int) -> list[int]:
    """Distinct neighbors v = f0, f1, ... of u where the color of each edge
    (u, f_{i+1}) is free at f_i; extended while any extension exists."""
    fan = [v]
    in_fan = {v}
    while True:
        last = fan[-1]
        ext = -1
        for c in range(pal.ncolors):
            if not pal.is_free(last, c):
                continue
            e = int(pal.at[u, c])
            if e < 0:
                continue
            x, y = pal.g.edge(e)
            w = y if x == u else x
            if w not in in_fan:
                ext = w
                break
        if ext < 0:
            break
        fan.append(ext)
        in_fan.add(ext)
    return fan


def _is_fan(pal: _Palette, u: int, fan: list[int]) -> bool:
    for i in range(1, len(fan)):
        eid = pal.g.edge_id(u, fan[i])
        c = int(pal.col[eid])
        if c < 0 or not pal.is_free(fan[i - 1], c):
            return False
    return True


def _rotate_fan(pal: _Palette, u: int, fan: list[int], upto: int) -> None:
    """Shift each fan edge's color one step toward the fan start, leaving
    the edge (u, fan[upto]) uncolored. All prefix edges are uncolored
    before reassignment to avoid transient clashes in the color table."""
    eids = [pal.g.edge_id(u, fan[i]) for i in range(upto + 1)]
    shifted = [int(pal.col[eids[i + 1]]) for i in range(upto)]
    for e in eids:
        pal.uncolor(e)
    for e, c in zip(eids[:-1], shifted):
        pal.set_color(e, c)


def _color_one(pal: _Palette, eid: int) -> None:
    u, v = pal.g.edge(eid)
    fan = _maximal_fan(pal, u, v)
    c = pal.free(u)
    d = pal.free(fan[-1])
    if not pal.is_free(u, d):
        _invert_path(pal, u, c, d)
        if not pal.is_free(u, d):
            raise AssertionError("path inversion did not free the target color")
    j = -1
    for i in range(len(fan)):
        if pal.is_free(fan[i], d) and _is_fan(pal, u, fan[:i + 1]):
            j = i
            break
    if j < 0:
        raise AssertionError("no rotatable fan prefix; construction bug")
    _rotate_fan(pal, u, fan, j)
    pal.set_color(pal.g.edge_id(u, fan[j]), d)


def vizing_color(g: Graph) -> EdgeColoring:
    """Proper edge coloring of g with at most Delta + 1 colors."""
    if g.m == 0:
        return EdgeColoring(colors=np.empty(0, np.int64), palette=0)
    delta = int(g.degrees.max())
    pal = _Palette(g, delta + 1)
    for e in range(g.m):
        _color_one(pal, e)
    colors = pal.col.copy()
    _assert_proper(g, colors, delta + 1)
    colors.setflags(write=False)
    return EdgeColoring(colors=colors, palette=delta + 1)


def _assert_proper(g: Graph, colors: np.ndarray, palette: int) -> None:
    if colors.min() < 0 or colors.max() >= palette:
        raise AssertionError("edge left uncolored or color out of palette")
    for v in range(g.n):
        eids, _ = g.incident(v)
        cs = colors[eids]
        if len(np.unique(cs)) != len(cs):
            raise AssertionError(f"two edges at vertex {v} share a color")


def decompose_into_matchings(s: EdgeSet) -> list[Matching]:
    """Partition an edge set into at most max_degree(s) + 1 matchings.

    Color classes of the coloring of the subgraph on s, reported in
    parent-graph ids.
    """
    if len(s) == 0:
        return []
    sub, id_map = subgraph_of(s.parent, s)
    coloring = vizing_color(sub)
    return [Matching(s.parent, id_map[np.array(cls, np.int64)])
            for cls in coloring.classes()]
