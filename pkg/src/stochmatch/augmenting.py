"""Sequential greedy matching over a matching decomposition, length-three
augmenting path discovery, and the augmenting-path census of a symmetric
difference of matchings.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import EdgeSet, Graph, GraphError, Matching


@dataclass(frozen=True)
class ThreePath:
    """A length-three augmenting path a - u - v - b for a matched edge (u, v).

    Edge ids: ea = (a, u), emid = (u, v), eb = (v, b).
    """

    a: int
    u: int
    v: int
    b: int
    ea: int
    emid: int
    eb: int


@dataclass(frozen=True)
class ThreePathSet:
    parent: Graph
    paths: tuple[ThreePath, ...]

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)


@dataclass(frozen=True)
class AugmentingCensus:
    """Counts of augmenting paths by length class in a symmetric difference."""

    alpha1: int
    alpha3: int
    alpha_ge5: int

    @property
    def total(self) -> int:
        return self.alpha1 + self.alpha3 + self.alpha_ge5


def _as_mask(parent: Graph, realized) -> np.ndarray:
    mask = np.asarray(realized, dtype=bool)
    if mask.shape != (parent.m,):
        raise ValueError(f"realized must be a boolean array over all {parent.m} edge ids")
    return mask


def sequential_matching_process(matchings: list[Matching], realized) -> Matching:
    """Greedy maximal matching built round by round.

    Starting empty, round i adds the realized edges of matchings[i] that
    are not incident on any previously matched vertex. Deterministic in
    the inputs.
    """
    if not matchings:
        raise ValueError("need at least one matching")
    parent = matchings[0].parent
    for mt in matchings[1:]:
        if mt.parent is not parent:
            raise GraphError("matchings belong to different graphs")
    seen: set[int] = set()
    for mt in matchings:
        ids = set(mt.ids.tolist())
        if ids & seen:
            raise GraphError("matchings are not edge-disjoint")
        seen |= ids
    mask = _as_mask(parent, realized)
    covered = np.zeros(parent.n, bool)
    out: list[int] = []
    for mt in matchings:
        eu, ev = mt.endpoint_arrays()
        add = mask[mt.ids] & ~covered[eu] & ~covered[ev]
        out.extend(mt.ids[add].tolist())
        covered[eu[add]] = True
        covered[ev[add]] = True
    return Matching(parent, out)


def find_disjoint_three_paths(mplus: Matching, candidates: EdgeSet, realized) -> ThreePathSet:
    """Length-three augmenting paths a - u - v - b with exclusive endpoints.

    Every candidate edge must touch exactly one vertex matched by mplus.
    A matched edge (u, v) yields a path iff realized candidate edges
    (a, u) and (v, b) exist whose endpoints a, b have no realized
    candidate neighbors outside {u, v}; that exclusivity makes the
    reported paths vertex-disjoint. Ties go to the lowest vertex id.
    """
    parent = mplus.parent
    if candidates.parent is not parent:
        raise GraphError("candidate edges belong to a different graph")
    mask = _as_mask(parent, realized)
    matched = np.zeros(parent.n, bool)
    m_eu, m_ev = mplus.endpoint_arrays()
    matched[m_eu] = True
    matched[m_ev] = True
    c_eu, c_ev = candidates.endpoint_arrays()
    touches = matched[c_eu].astype(int) + matched[c_ev].astype(int)
    if len(candidates) and (touches != 1).any():
        bad = int(np.flatnonzero(touches != 1)[0])
        raise GraphError(
            f"candidate edge {int(candidates.ids[bad])} touches "
            f"{int(touches[bad])} matched vertices; expected exactly 1")

    live = mask[candidates.ids]
    # realized candidate neighbors of each unmatched vertex
    out_v = np.where(matched[c_eu], c_ev, c_eu)
    in_v = np.where(matched[c_eu], c_eu, c_ev)
    nbrs: dict[int, list[tuple[int, int]]] = {}
    pend: dict[int, list[tuple[int, int]]] = {}
    for k in np.flatnonzero(live):
        w = int(out_v[k])
        x = int(in_v[k])
        e = int(candidates.ids[k])
        nbrs.setdefault(w, []).append((x, e))
        pend.setdefault(x, []).append((w, e))

    paths = []
    for i in np.argsort(mplus.ids):
        emid = int(mplus.ids[i])
        u, v = parent.edge(emid)
        a = _exclusive_endpoint(pend.get(u, []), nbrs, u, v, skip=-1)
        if a is None:
            continue
        b = _exclusive_endpoint(pend.get(v, []), nbrs, u, v, skip=a[0])
        if b is None:
            continue
        paths.append(ThreePath(a=a[0], u=u, v=v, b=b[0],
                               ea=a[1], emid=emid, eb=b[1]))
    return ThreePathSet(parent=parent, paths=tuple(paths))


def _exclusive_endpoint(options, nbrs, u, v, skip):
    """Lowest realized pendant vertex whose realized neighbors are within {u, v}."""
    best = None
    for w, e in options:
        if w == skip:
            continue
        if all(x in (u, v) for x, _ in nbrs.get(w, [])):
            if best is None or w < best[0]:
                best = (w, e)
    return best


def census(m: Matching, mprime: Matching) -> AugmentingCensus:
    """Decompose the symmetric difference of two matchings and count the
    augmenting paths with respect to mprime, by length class.

    A component path augments mprime iff both of its end edges come from
    m; its endpoints are then unmatched by mprime.
    """
    parent = m.parent
    if mprime.parent is not parent:
        raise GraphError("matchings belong to different graphs")
    in_m = set(m.ids.tolist())
    in_mp = set(mprime.ids.tolist())
    sym = sorted((in_m | in_mp) - (in_m & in_mp))
    adj: dict[int, list[int]] = {}
    for e in sym:
        u, v = parent.edge(e)
        adj.setdefault(u, []).append(e)
        adj.setdefault(v, []).append(e)
    # components are paths or even cycles; only paths whose two end edges
    # both come from m are augmenting, so walking from degree-1 vertices
    # finds them all (cycles are never augmenting and can be skipped)
    a1 = a3 = a5 = 0
    walked: set[int] = set()
    for s in sorted(v for v, es in adj.items() if len(es) == 1):
        if adj[s][0] in walked:
            continue
        edges = []
        cur = s
        prev_edge = -1
        while True:
            options = [e for e in adj[cur] if e != prev_edge]
            if not options:
                break
            e = options[0]
            edges.append(e)
            walked.add(e)
            a, b = parent.edge(e)
            cur = b if a == cur else a
            prev_edge = e
        if edges[0] in in_m and edges[-1] in in_m:
            if len(edges) == 1:
                a1 += 1
            elif len(edges) == 3:
                a3 += 1
            else:
                a5 += 1
    return AugmentingCensus(alpha1=a1, alpha3=a3, alpha_ge5=a5)


def augment(mprime: Matching, paths) -> Matching:
    """Apply vertex-disjoint augmenting structures to mprime.

    `paths` is a ThreePathSet or an iterable of edge-id sequences, each an
    augmenting path for mprime (odd length, ends unmatched, alternating).
    The result is larger by the number of structures.
    """
    parent = mprime.parent
    if isinstance(paths, ThreePathSet):
        if paths.parent is not parent:
            raise GraphError("paths belong to a different graph")
        seqs = [(tp.ea, tp.emid, tp.eb) for tp in paths]
    else:
        seqs = [tuple(int(e) for e in seq) for seq in paths]
    in_mp = set(mprime.ids.tolist())
    covered = np.zeros(parent.n, bool)
    m_eu, m_ev = mprime.endpoint_arrays()
    covered[m_eu] = True
    covered[m_ev] = True
    seen_vertices: set[int] = set()
    result = set(in_mp)
    for seq in seqs:
        if len(seq) % 2 == 0 or not seq:
            raise ValueError("augmenting path must have odd length")
        verts = _path_vertices(parent, seq)
        if seen_vertices & set(verts):
            raise ValueError("augmenting structures overlap")
        seen_vertices |= set(verts)
        for k, e in enumerate(seq):
            expected_in = k % 2 == 1
            if (e in in_mp) != expected_in:
                raise ValueError(f"path edge {e} does not alternate with the matching")
        if covered[verts[0]] or covered[verts[-1]]:
            raise ValueError("path endpoint is already matched")
        for k, e in enumerate(seq):
            if k % 2 == 1:
                result.discard(e)
            else:
                result.add(e)
    out = Matching(parent, sorted(result))
    if len(out) != len(mprime) + len(seqs):
        raise AssertionError("augmentation did not grow the matching as expected")
    return out


def _path_vertices(parent: Graph, seq) -> list[int]:
    """Vertex sequence of an edge-id path, validating adjacency."""
    if len(seq) == 1:
        u, v = parent.edge(seq[0])
        return [u, v]
    u0, v0 = parent.edge(seq[0])
    u1, v1 = parent.edge(seq[1])
    if u0 in (u1, v1):
        verts = [v0, u0]
    elif v0 in (u1, v1):
        verts = [u0, v0]
    else:
        raise ValueError("path edges are not adjacent")
    for e in seq[1:]:
        a, b = parent.edge(e)
        if verts[-1] == a:
            verts.append(b)
        elif verts[-1] == b:
            verts.append(a)
        else:
            raise ValueError("path edges are not adjacent")
    if len(set(verts)) != len(verts):
        raise ValueError("path revisits a vertex")
    return verts
