"""Immutable simple undirected graphs and validated edge subsets.

Vertices are dense 0-indexed integers. Edges carry stable integer ids
(their position in the construction list); every other module speaks in
edge ids so that subsets compose cheaply. Endpoint data lives in numpy
arrays, which keeps construction and set algebra vectorized.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Optional

import numpy as np

from . import _kernels


class GraphError(ValueError):
    """Base class for graph construction and edge-set validation errors."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexRangeError(GraphError):
    pass


class ParentMismatchError(GraphError):
    """Edge sets from different graphs were combined."""


class InstanceTooLargeError(ValueError):
    """A brute-force oracle was asked to exceed its stated size cap."""


class Graph:
    """Simple undirected graph, immutable after construction.

    Attributes
    ----------
    n : int
        Number of vertices.
    m : int
        Number of edges.
    eu, ev : ndarray
        Endpoint arrays with eu[i] < ev[i]; edge i is (eu[i], ev[i]).
    """

    __slots__ = ("n", "m", "eu", "ev", "_indptr", "_nbr", "_eid",
                 "_bip_known", "_bip_color", "_pair_index")

    def __init__(self, n: int, eu: np.ndarray, ev: np.ndarray):
        self.n = int(n)
        self.m = len(eu)
        self.eu = eu
        self.ev = ev
        indptr, nbr, eid = _kernels.build_csr(self.n, eu, ev)
        self._indptr = indptr
        self._nbr = nbr
        self._eid = eid
        for a in (self.eu, self.ev, self._indptr, self._nbr, self._eid):
            a.setflags(write=False)
        self._bip_known = False
        self._bip_color = None
        self._pair_index = None

    # -- construction ------------------------------------------------

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Edge list as (u, v) tuples with u < v, ordered by edge id."""
        return list(zip(self.eu.tolist(), self.ev.tolist()))

    def edge(self, i: int) -> tuple[int, int]:
        return int(self.eu[i]), int(self.ev[i])

    def incident(self, v: int) -> tuple[np.ndarray, np.ndarray]:
        """(edge ids, opposite endpoints) of the edges at vertex v."""
        lo, hi = self._indptr[v], self._indptr[v + 1]
        return self._eid[lo:hi], self._nbr[lo:hi]

    @property
    def adjacency(self) -> list[list[int]]:
        """Per-vertex incident edge ids (a copy; intended for inspection)."""
        return [self.incident(v)[0].tolist() for v in range(self.n)]

    def degree(self, v: int) -> int:
        return int(self._indptr[v + 1] - self._indptr[v])

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self._indptr)

    def edge_id(self, u: int, v: int) -> int:
        """Id of the edge {u, v}; KeyError if absent."""
        if self._pair_index is None:
            keys = self.eu.astype(np.int64) * self.n + self.ev
            self._pair_index = dict(zip(keys.tolist(), range(self.m)))
        a, b = (u, v) if u < v else (v, u)
        return self._pair_index[a * self.n + b]

    def has_edge(self, u: int, v: int) -> bool:
        try:
            self.edge_id(u, v)
            return True
        except KeyError:
            return False

    def bipartition(self) -> Optional[np.ndarray]:
        """2-coloring as an int8 array, or None if the graph has an odd cycle.

        Computed once and cached; subgraphs built by remove_edges inherit a
        known coloring (any proper 2-coloring stays proper on a subgraph).
        """
        if not self._bip_known:
            ok, color = _kernels.two_color(self.n, self._indptr, self._nbr)
            self._bip_color = color if ok else None
            self._bip_known = True
        return self._bip_color

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate and build a Graph.

    Edge ids are list positions. Raises SelfLoopError, VertexRangeError or
    DuplicateEdgeError on bad input, each naming the offending edge.
    """
    if n < 0:
        raise VertexRangeError("vertex count must be nonnegative")
    pairs = list(edges)
    m = len(pairs)
    if m == 0:
        return Graph(n, np.empty(0, np.int32), np.empty(0, np.int32))
    arr = np.asarray(pairs, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise GraphError("edges must be pairs")
    if arr.min() < 0 or arr.max() >= n:
        bad = int(np.flatnonzero((arr < 0).any(axis=1) | (arr >= n).any(axis=1))[0])
        raise VertexRangeError(f"edge {bad} {tuple(arr[bad])} has an endpoint outside [0, {n})")
    loops = np.flatnonzero(arr[:, 0] == arr[:, 1])
    if len(loops):
        raise SelfLoopError(f"edge {int(loops[0])} is a self-loop at vertex {int(arr[loops[0], 0])}")
    eu = np.minimum(arr[:, 0], arr[:, 1])
    ev = np.maximum(arr[:, 0], arr[:, 1])
    keys = eu * n + ev
    uniq, first = np.unique(keys, return_index=True)
    if len(uniq) != m:
        dup_mask = np.ones(m, bool)
        dup_mask[first] = False
        bad = int(np.flatnonzero(dup_mask)[0])
        raise DuplicateEdgeError(f"edge {bad} {(int(eu[bad]), int(ev[bad]))} is a duplicate")
    return Graph(n, eu.astype(np.int32), ev.astype(np.int32))


class EdgeSet:
    """A subset of the edges of a fixed parent graph, stored as sorted ids."""

    __slots__ = ("parent", "ids")

    def __init__(self, parent: Graph, ids: Iterable[int]):
        self.parent = parent
        arr = np.unique(np.fromiter(ids, np.int64)).astype(np.int64)
        if len(arr) and (arr[0] < 0 or arr[-1] >= parent.m):
            raise GraphError(f"edge id out of range for parent with m={parent.m}")
        arr.setflags(write=False)
        self.ids = arr
        self._validate()

    def _validate(self) -> None:
        pass

    @property
    def members(self) -> frozenset[int]:
        return frozenset(self.ids.tolist())

    def pairs(self) -> list[tuple[int, int]]:
        return list(zip(self.parent.eu[self.ids].tolist(),
                        self.parent.ev[self.ids].tolist()))

    def endpoint_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        return self.parent.eu[self.ids], self.parent.ev[self.ids]

    def degree_counts(self) -> np.ndarray:
        """Number of member edges at each vertex."""
        eu, ev = self.endpoint_arrays()
        return np.bincount(np.concatenate([eu, ev]), minlength=self.parent.n)

    def mask(self) -> np.ndarray:
        """Boolean membership mask over all parent edge ids."""
        out = np.zeros(self.parent.m, bool)
        out[self.ids] = True
        return out

    def __len__(self) -> int:
        return len(self.ids)

    def __iter__(self) -> Iterator[int]:
        return iter(self.ids.tolist())

    def __contains__(self, e: int) -> bool:
        i = np.searchsorted(self.ids, e)
        return i < len(self.ids) and self.ids[i] == e

    def __eq__(self, other) -> bool:
        return (isinstance(other, EdgeSet) and self.parent is other.parent
                and np.array_equal(self.ids, other.ids))

    def __hash__(self):
        return hash((id(self.parent), self.ids.tobytes()))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({len(self)} edges)"


class Matching(EdgeSet):
    """EdgeSet in which no two edges share a vertex."""

    __slots__ = ()

    def _validate(self) -> None:
        if len(self.ids) and self.degree_counts().max() > 1:
            raise GraphError("edges share a vertex; not a matching")


class BMatching(EdgeSet):
    """EdgeSet with at most b member edges at every vertex."""

    __slots__ = ("b",)

    def __init__(self, parent: Graph, ids: Iterable[int], b: int):
        if b < 1:
            raise GraphError("b must be a positive integer")
        self.b = int(b)
        super().__init__(parent, ids)

    def _validate(self) -> None:
        if len(self.ids) and self.degree_counts().max() > self.b:
            raise GraphError(f"vertex exceeds degree cap b={self.b}")


def _check_same_parent(a: EdgeSet, b: EdgeSet) -> None:
    if a.parent is not b.parent:
        raise ParentMismatchError("edge sets belong to different graphs")


def degree(s: EdgeSet, v: int) -> int:
    """Number of edges of s incident on v."""
    eids, _ = s.parent.incident(v)
    return int(np.isin(eids, s.ids).sum())


def max_degree(s: EdgeSet) -> int:
    if len(s) == 0:
        return 0
    return int(s.degree_counts().max())


def is_matching(s: EdgeSet) -> bool:
    return len(s) == 0 or int(s.degree_counts().max()) <= 1


def is_b_matching(s: EdgeSet, b: int) -> bool:
    return len(s) == 0 or int(s.degree_counts().max()) <= b


def union(a: EdgeSet, b: EdgeSet) -> EdgeSet:
    """Deduplicated union, as a plain EdgeSet."""
    _check_same_parent(a, b)
    return EdgeSet(a.parent, np.union1d(a.ids, b.ids))


def remove_edges(g: Graph, x: EdgeSet) -> tuple[Graph, np.ndarray]:
    """New graph on the same vertices with x removed, plus an id map.

    The map sends new edge ids to the original ids in g, preserving order.
    A known bipartition of g is inherited by the subgraph.
    """
    if x.parent is not g:
        raise ParentMismatchError("edge set does not belong to this graph")
    keep = np.ones(g.m, bool)
    keep[x.ids] = False
    id_map = np.flatnonzero(keep)
    sub = Graph(g.n, g.eu[id_map].copy(), g.ev[id_map].copy())
    if g._bip_known and g._bip_color is not None:
        sub._bip_known = True
        sub._bip_color = g._bip_color
    return sub, id_map


def subgraph_of(g: Graph, s: EdgeSet) -> tuple[Graph, np.ndarray]:
    """Graph restricted to the edges of s, plus the new->old id map."""
    if s.parent is not g:
        raise ParentMismatchError("edge set does not belong to this graph")
    id_map = s.ids.copy()
    sub = Graph(g.n, g.eu[id_map].copy(), g.ev[id_map].copy())
    if g._bip_known and g._bip_color is not None:
        sub._bip_known = True
        sub._bip_color = g._bip_color
    return sub, id_map
