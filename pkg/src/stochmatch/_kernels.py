"""Numba kernels for the hot combinatorial loops.

Everything here operates on flat int arrays (CSR adjacency, endpoint
arrays) so it can run in nopython mode. The public API lives in the
sibling modules; nothing in this file validates its inputs.
"""
from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def build_csr(n, eu, ev):
    """CSR adjacency from endpoint arrays.

    Returns (indptr, nbr, eid): for vertex v, its incident edges are
    eid[indptr[v]:indptr[v+1]] with opposite endpoints in nbr. Within a
    vertex, incidences are ordered by edge id (insertion order).
    """
    m = len(eu)
    deg = np.zeros(n + 1, np.int64)
    for i in range(m):
        deg[eu[i] + 1] += 1
        deg[ev[i] + 1] += 1
    indptr = np.cumsum(deg)
    nbr = np.empty(2 * m, np.int32)
    eid = np.empty(2 * m, np.int32)
    pos = indptr[:-1].copy()
    for i in range(m):
        u = eu[i]
        v = ev[i]
        nbr[pos[u]] = v
        eid[pos[u]] = i
        pos[u] += 1
        nbr[pos[v]] = u
        eid[pos[v]] = i
        pos[v] += 1
    return indptr, nbr, eid


@njit(cache=True)
def two_color(n, indptr, nbr):
    """BFS 2-coloring. Returns (ok, color); color is all -1 when not bipartite."""
    color = np.full(n, -1, np.int8)
    queue = np.empty(n, np.int32)
    for s in range(n):
        if color[s] >= 0:
            continue
        color[s] = 0
        qh = 0
        qt = 0
        queue[qt] = s
        qt += 1
        while qh < qt:
            x = queue[qh]
            qh += 1
            cx = color[x]
            for k in range(indptr[x], indptr[x + 1]):
                y = nbr[k]
                if color[y] < 0:
                    color[y] = 1 - cx
                    queue[qt] = y
                    qt += 1
                elif color[y] == cx:
                    return False, np.full(n, -1, np.int8)
    return True, color


@njit(cache=True)
def blossom_augment(n, indptr, nbr, mate):
    """Edmonds blossom search: augment `mate` in place to maximum cardinality.

    `mate` is a partial matching (-1 = exposed) used as the starting point;
    roots are scanned in increasing vertex order, so the result is a pure
    function of (adjacency, initial mate).
    """
    par = np.full(n, -1, np.int32)
    base = np.empty(n, np.int32)
    queue = np.empty(n, np.int32)
    used = np.zeros(n, np.bool_)
    inblossom = np.zeros(n, np.bool_)
    onpath = np.zeros(n, np.bool_)

    for root in range(n):
        if mate[root] >= 0:
            continue
        for i in range(n):
            par[i] = -1
            used[i] = False
            base[i] = i
        used[root] = True
        qh = 0
        qt = 0
        queue[qt] = root
        qt += 1
        finish = -1
        while qh < qt and finish < 0:
            v = queue[qh]
            qh += 1
            for k in range(indptr[v], indptr[v + 1]):
                to = nbr[k]
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] >= 0 and par[mate[to]] >= 0):
                    # (v, to) closes an odd cycle: contract the blossom.
                    for i in range(n):
                        onpath[i] = False
                    a = base[v]
                    while True:
                        onpath[a] = True
                        if mate[a] < 0:
                            break
                        a = base[par[mate[a]]]
                    curbase = base[to]
                    while not onpath[curbase]:
                        curbase = base[par[mate[curbase]]]
                    for i in range(n):
                        inblossom[i] = False
                    x = v
                    child = to
                    while base[x] != curbase:
                        inblossom[base[x]] = True
                        inblossom[base[mate[x]]] = True
                        par[x] = child
                        child = mate[x]
                        x = par[mate[x]]
                    x = to
                    child = v
                    while base[x] != curbase:
                        inblossom[base[x]] = True
                        inblossom[base[mate[x]]] = True
                        par[x] = child
                        child = mate[x]
                        x = par[mate[x]]
                    for i in range(n):
                        if inblossom[base[i]]:
                            base[i] = curbase
                            if not used[i]:
                                used[i] = True
                                queue[qt] = i
                                qt += 1
                elif par[to] < 0:
                    par[to] = v
                    if mate[to] < 0:
                        finish = to
                        break
                    w = mate[to]
                    used[w] = True
                    queue[qt] = w
                    qt += 1
        if finish >= 0:
            v = finish
            while v >= 0:
                pv = par[v]
                ppv = mate[pv]
                mate[v] = pv
                mate[pv] = v
                v = ppv
    return mate


@njit(cache=True)
def greedy_matching(n, indptr, nbr):
    """Greedy seed matching, scanning vertices and neighbors in order."""
    mate = np.full(n, -1, np.int32)
    for v in range(n):
        if mate[v] < 0:
            for k in range(indptr[v], indptr[v + 1]):
                u = nbr[k]
                if mate[u] < 0 and u != v:
                    mate[v] = u
                    mate[u] = v
                    break
    return mate


@njit(cache=True)
def matching_size_general(n, eu, ev):
    """Maximum matching size of the graph given by endpoint arrays."""
    indptr, nbr, _ = build_csr(n, eu, ev)
    mate = greedy_matching(n, indptr, nbr)
    blossom_augment(n, indptr, nbr, mate)
    size = 0
    for v in range(n):
        if mate[v] >= 0:
            size += 1
    return size // 2


@njit(cache=True)
def mu_sums_by_popcount(m, incmask):
    """DP over all 2^m edge subsets of a graph with m edges.

    incmask[i] is the bitmask of edges sharing an endpoint with edge i
    (including i itself). Returns acc where acc[k] is the sum of maximum
    matching sizes over all subsets of exactly k edges.
    """
    table = np.zeros(1 << m, np.int8)
    acc = np.zeros(m + 1, np.float64)
    for s in range(1, 1 << m):
        e = 0
        while not (s >> e) & 1:
            e += 1
        skip = table[s & ~(np.int64(1) << e)]
        take = 1 + table[s & ~incmask[e]]
        table[s] = take if take > skip else skip
        x = s
        c = 0
        while x:
            x &= x - 1
            c += 1
        acc[c] += table[s]
    return acc


@njit(cache=True)
def dual_minimum(n, eu, ev, b):
    """Minimize b|U| + |E[W]| + sum_K floor((b|K| + e(K,W)) / 2) over all
    3^n assignments of vertices to U, W or neither; K ranges over connected
    components of the graph induced on the unassigned vertices.

    Returns (value, assignment) with assignment[i] in {0: neither, 1: U, 2: W}.
    """
    m = len(eu)
    best = np.int64(1) << 60
    best_assign = np.zeros(n, np.int8)
    assign = np.zeros(n, np.int8)
    parent = np.zeros(n, np.int64)
    ew_cnt = np.zeros(n, np.int64)
    size_at = np.zeros(n, np.int64)
    total = 1
    for _ in range(n):
        total *= 3
    for code in range(total):
        x = code
        nu = 0
        for i in range(n):
            assign[i] = x % 3
            if assign[i] == 1:
                nu += 1
            x //= 3
        for i in range(n):
            parent[i] = i
            ew_cnt[i] = 0
            size_at[i] = 0
        e_w = 0
        for j in range(m):
            a = eu[j]
            bb = ev[j]
            if assign[a] == 2 and assign[bb] == 2:
                e_w += 1
            elif assign[a] == 0 and assign[bb] == 0:
                ra = a
                while parent[ra] != ra:
                    parent[ra] = parent[parent[ra]]
                    ra = parent[ra]
                rb = bb
                while parent[rb] != rb:
                    parent[rb] = parent[parent[rb]]
                    rb = parent[rb]
                if ra != rb:
                    parent[rb] = ra
        for j in range(m):
            a = eu[j]
            bb = ev[j]
            t = -1
            if assign[a] == 0 and assign[bb] == 2:
                t = a
            elif assign[bb] == 0 and assign[a] == 2:
                t = bb
            if t >= 0:
                r = t
                while parent[r] != r:
                    parent[r] = parent[parent[r]]
                    r = parent[r]
                ew_cnt[r] += 1
        val = np.int64(b) * nu + e_w
        for i in range(n):
            if assign[i] == 0:
                r = i
                while parent[r] != r:
                    r = parent[r]
                size_at[r] += 1
        for i in range(n):
            if assign[i] == 0 and parent[i] == i:
                val += (np.int64(b) * size_at[i] + ew_cnt[i]) // 2
        if val < best:
            best = val
            for i in range(n):
                best_assign[i] = assign[i]
    return best, best_assign
