"""Maximum simple b-matchings, their duality certificate, and the
degree-cap structural inequality used by the small-p sparsifier.

The general-graph solver reduces to maximum matching on a derived gadget
graph: vertex v becomes min(b, deg v) copies, edge (u, v) becomes a pair
of gadget vertices e_u - e_v with e_u joined to all copies of u and e_v
to all copies of v. An original edge is selected iff its middle gadget
edge is unmatched. Bipartite graphs are routed through an integral
max-flow formulation instead, which stays tractable on instances whose
gadget would have millions of edges; both routes are cross-checked
against a degree-capped brute force.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow

from . import _kernels
from .graph import (BMatching, EdgeSet, Graph, GraphError, InstanceTooLargeError,
                    is_b_matching)
from .matching import maximum_matching
from .simulate import Estimate

CERTIFY_VERTEX_CAP = 12


@dataclass(frozen=True)
class BMatchingResult:
    bmatching: BMatching
    size: int


@dataclass(frozen=True)
class DualWitness:
    """A minimizing pair (U, W) of the b-matching min-formula.

    value = b|U| + |E[W]| + sum over components K of G[V - U - W] of
    floor((b|K| + |E[K, W]|) / 2).
    """

    U: frozenset[int]
    W: frozenset[int]
    components: tuple[frozenset[int], ...]
    value: int


def _b_matching_gadget(g: Graph, b: int) -> np.ndarray:
    """Selected edge ids of a maximum b-matching via the gadget reduction."""
    m = g.m
    deg = g.degrees
    ncopies = np.minimum(b, deg).astype(np.int64)
    copy_start = np.concatenate([[0], np.cumsum(ncopies)])
    nc = int(copy_start[-1])
    big_n = nc + 2 * m
    # gadget node layout: copies of v at copy_start[v]..; e_u = nc + 2i, e_v = nc + 2i + 1
    eu64 = g.eu.astype(np.int64)
    ev64 = g.ev.astype(np.int64)
    mid_u = nc + 2 * np.arange(m, dtype=np.int64)
    mid_v = mid_u + 1
    cu = ncopies[eu64]
    cv = ncopies[ev64]
    # arcs: middle edge, then e_u to each copy of u, e_v to each copy of v
    a_from = [mid_u, np.repeat(mid_u, cu), np.repeat(mid_v, cv)]
    a_to = [mid_v,
            np.repeat(copy_start[eu64], cu) + _ramp(cu),
            np.repeat(copy_start[ev64], cv) + _ramp(cv)]
    geu = np.concatenate(a_from).astype(np.int32)
    gev = np.concatenate(a_to).astype(np.int32)
    indptr, nbr, _ = _kernels.build_csr(big_n, geu, gev)

    # warm start: a greedy b-matching of g, lifted to the gadget
    mate = np.full(big_n, -1, np.int32)
    used = np.zeros(g.n, np.int64)
    cursor = copy_start[:-1].copy()
    for i in range(m):
        u, v = int(g.eu[i]), int(g.ev[i])
        mu_, mv_ = int(mid_u[i]), int(mid_v[i])
        if used[u] < b and used[v] < b:
            mate[mu_] = cursor[u]
            mate[cursor[u]] = mu_
            mate[mv_] = cursor[v]
            mate[cursor[v]] = mv_
            cursor[u] += 1
            cursor[v] += 1
            used[u] += 1
            used[v] += 1
        else:
            mate[mu_] = mv_
            mate[mv_] = mu_
    _kernels.blossom_augment(big_n, indptr, nbr, mate)

    # canonicalize: a pair with exactly one side matched to a copy is
    # rewired onto its middle edge (same size), so that selection implies
    # capacity use at both endpoints
    for i in range(m):
        mu_, mv_ = int(mid_u[i]), int(mid_v[i])
        pu, pv = int(mate[mu_]), int(mate[mv_])
        u_side = pu >= 0 and pu != mv_
        v_side = pv >= 0 and pv != mu_
        if u_side != v_side:
            other = pu if u_side else pv
            mate[other] = -1
            mate[mu_] = mv_
            mate[mv_] = mu_
        elif pu < 0 and pv < 0:
            raise AssertionError("gadget matching is not maximal")
    return np.flatnonzero(mate[mid_u] != mid_v)


def _ramp(counts: np.ndarray) -> np.ndarray:
    """[0..counts[0]-1, 0..counts[1]-1, ...] without a Python loop."""
    total = int(counts.sum())
    if total == 0:
        return np.empty(0, np.int64)
    idx = np.arange(total, dtype=np.int64)
    offsets = np.repeat(np.concatenate([[0], np.cumsum(counts)[:-1]]), counts)
    return idx - offsets


def _b_matching_bipartite(g: Graph, b: int, color: np.ndarray) -> np.ndarray:
    """Selected edge ids via max flow: source->side0 (cap b), edges (cap 1),
    side1->sink (cap b). Integral flow gives the maximum b-matching."""
    if g.m == 0:
        return np.empty(0, np.int64)
    S, T = g.n, g.n + 1
    on_left = color[g.eu] == 0
    tail = np.where(on_left, g.eu, g.ev).astype(np.int64)
    head = np.where(on_left, g.ev, g.eu).astype(np.int64)
    left = np.flatnonzero(color == 0).astype(np.int64)
    right = np.flatnonzero(color == 1).astype(np.int64)
    rows = np.concatenate([np.full(len(left), S, np.int64), tail, right])
    cols = np.concatenate([left, head, np.full(len(right), T, np.int64)])
    caps = np.concatenate([np.full(len(left), b, np.int32),
                           np.ones(g.m, np.int32),
                           np.full(len(right), b, np.int32)])
    net = csr_matrix((caps, (rows, cols)), shape=(g.n + 2, g.n + 2), dtype=np.int32)
    res = maximum_flow(net, S, T)
    edge_flow = np.asarray(res.flow[tail, cols[len(left):len(left) + g.m]]).ravel()
    sel = np.flatnonzero(edge_flow > 0)
    if len(sel) != res.flow_value:
        raise AssertionError("flow extraction mismatch")
    return sel


def maximum_b_matching(g: Graph, b: int) -> BMatchingResult:
    """Optimal simple b-matching of g.

    The recovered edge set is validated against the degree cap before it
    is returned; optimality of both solver routes is covered by the brute
    force and duality test suites.
    """
    if b < 1:
        raise GraphError("b must be >= 1")
    if g.m == 0:
        return BMatchingResult(BMatching(g, [], b), 0)
    if b >= int(g.degrees.max()):
        ids = np.arange(g.m, dtype=np.int64)
    elif b == 1:
        ids = maximum_matching(g).matching.ids
    else:
        color = g.bipartition()
        if color is not None:
            ids = _b_matching_bipartite(g, b, color)
        else:
            ids = _b_matching_gadget(g, b)
    bm = BMatching(g, ids, b)  # validates the degree cap
    return BMatchingResult(bmatching=bm, size=len(bm))


def brute_force_b_matching(g: Graph, b: int, edge_cap: int = 14) -> int:
    """Degree-capped exhaustive search; oracle for small instances."""
    if g.m > edge_cap:
        raise InstanceTooLargeError(f"brute force capped at {edge_cap} edges")
    edges = g.edges
    m = g.m
    degs = [0] * g.n
    best = 0

    def rec(i: int, size: int) -> None:
        nonlocal best
        if size + (m - i) <= best:
            return
        if i == m:
            best = max(best, size)
            return
        u, v = edges[i]
        if degs[u] < b and degs[v] < b:
            degs[u] += 1
            degs[v] += 1
            rec(i + 1, size + 1)
            degs[u] -= 1
            degs[v] -= 1
        rec(i + 1, size)

    rec(0, 0)
    return best


def dual_value(g: Graph, b: int, U, W) -> int:
    """The min-formula value for one disjoint pair (U, W).

    Weak duality holds: this is an upper bound on any b-matching size.
    """
    U = frozenset(int(x) for x in U)
    W = frozenset(int(x) for x in W)
    if U & W:
        raise GraphError("U and W must be disjoint")
    for x in U | W:
        if not 0 <= x < g.n:
            raise GraphError(f"vertex {x} out of range")
    val = b * len(U)
    in_w = np.zeros(g.n, bool)
    in_w[list(W)] = True
    in_t = np.ones(g.n, bool)
    in_t[list(U | W)] = False
    val += int((in_w[g.eu] & in_w[g.ev]).sum())
    for comp in _components(g, in_t):
        kw = int((np.isin(g.eu, comp) & in_w[g.ev]).sum()
                 + (np.isin(g.ev, comp) & in_w[g.eu]).sum())
        val += (b * len(comp) + kw) // 2
    return val


def _components(g: Graph, mask: np.ndarray) -> list[np.ndarray]:
    """Connected components of the subgraph induced on mask-vertices."""
    seen = ~mask.copy()
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack = [s]
        comp = [s]
        while stack:
            x = stack.pop()
            _, nbrs = g.incident(x)
            for y in nbrs.tolist():
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        comps.append(np.array(sorted(comp), np.int64))
    return comps


def certify_optimal(g: Graph, b: int) -> tuple[int, DualWitness]:
    """Maximum b-matching size with a minimizing (U, W) certificate.

    Enumerates all 3^n assignments of vertices to {U, W, neither} and
    asserts exact primal = dual equality.
    """
    if g.n > CERTIFY_VERTEX_CAP:
        raise InstanceTooLargeError(
            f"certification enumerates 3^n partitions; capped at n={CERTIFY_VERTEX_CAP}")
    if b < 1:
        raise GraphError("b must be >= 1")
    best, assign = _kernels.dual_minimum(
        g.n, g.eu.astype(np.int64), g.ev.astype(np.int64), b)
    best = int(best)
    U = frozenset(np.flatnonzero(assign == 1).tolist())
    W = frozenset(np.flatnonzero(assign == 2).tolist())
    in_t = np.ones(g.n, bool)
    in_t[list(U | W)] = False
    comps = tuple(frozenset(c.tolist()) for c in _components(g, in_t))
    witness = DualWitness(U=U, W=W, components=comps, value=best)
    size = maximum_b_matching(g, b).size
    if size != best:
        raise AssertionError(f"duality gap: primal {size} != dual {best}")
    return size, witness


def check_b_matching_lemma(g: Graph, p: float, opt) -> bool:
    """True iff the maximum floor(1/p)-matching has size >= (floor(1/p) - 1) * opt.

    `opt` is the expected maximum matching size of a realization of g,
    either exact (a float) or a Monte-Carlo Estimate, in which case the
    upper end of its 95% confidence interval is used so that sampling
    noise cannot produce a spurious violation.
    """
    if not 0 < p < 1:
        raise ValueError("p must be in (0, 1)")
    b = int(np.floor(1.0 / p))
    opt_hi = opt.ci95[1] if isinstance(opt, Estimate) else float(opt)
    size = maximum_b_matching(g, b).size
    return size >= (b - 1) * opt_hi - 1e-9
