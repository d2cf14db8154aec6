"""Instance generators and edge-list file I/O.

The edge-list text format: a header line "<n> <m>", then m lines
"<u> <v>" with u < v, 0-indexed, whitespace separated. Lines starting
with '#' are comments. Round trips are bit-exact.

The two-block bipartite construction used to stress the degree-cap
structural bound lives here as `hard_instance`: dense complete blocks
L1 x R2 and L2 x R1 guarantee a near-perfect realized matching, while
any b-matching with b around 2/p is starved by the sparse random block
between L1 and R1.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .graph import Graph, build_graph

DEFAULT_CSTAR = 0.56


def erdos_renyi(n: int, q: float, seed: int) -> Graph:
    """Each unordered pair kept independently with probability q."""
    if not 0 <= q <= 1:
        raise ValueError("q must be in [0, 1]")
    if n < 0:
        raise ValueError("n must be nonnegative")
    iu, iv = np.triu_indices(n, k=1)
    rng = np.random.default_rng(seed)
    keep = rng.random(len(iu)) < q
    return build_graph(n, list(zip(iu[keep].tolist(), iv[keep].tolist())))


def complete_graph(n: int) -> Graph:
    iu, iv = np.triu_indices(n, k=1)
    return build_graph(n, list(zip(iu.tolist(), iv.tolist())))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} on vertices 0..a-1 versus a..a+b-1."""
    left = np.repeat(np.arange(a), b)
    right = np.tile(np.arange(a, a + b), a)
    return build_graph(a + b, list(zip(left.tolist(), right.tolist())))


@dataclass(frozen=True)
class HardInstanceSpec:
    """Parameters of the two-block construction.

    Sides split as |L1| = |R1| = N and |L2| = |R2| = round((1 - cstar) N);
    cstar defaults to the sparse-random-graph matching constant 0.56. The
    sparse L1-R1 block keeps each pair with probability 1 / (p N).
    """

    N: int
    p: float
    cstar: float = DEFAULT_CSTAR
    seed: int = 0

    def __post_init__(self):
        if self.N < 10:
            raise ValueError("N must be at least 10")
        if not 0 < self.p < 1:
            raise ValueError("p must be in (0, 1)")
        if not 0 < self.cstar < 1:
            raise ValueError("cstar must be in (0, 1)")
        if 1.0 / (self.p * self.N) > 1:
            raise ValueError("1/(p N) exceeds 1; not a probability")

    @property
    def n2(self) -> int:
        return round((1 - self.cstar) * self.N)

    @property
    def side(self) -> int:
        """Vertices per side of the bipartition."""
        return self.N + self.n2

    def blocks(self) -> dict[str, tuple[int, int]]:
        """Contiguous id ranges [lo, hi) of the four vertex blocks."""
        N, n2 = self.N, self.n2
        return {"L1": (0, N), "L2": (N, N + n2),
                "R1": (N + n2, 2 * N + n2), "R2": (2 * N + n2, 2 * N + 2 * n2)}


def hard_instance(spec: HardInstanceSpec) -> Graph:
    """Union of K(L1, R2), K(L2, R1) and the sparse random L1-R1 block."""
    blocks = spec.blocks()
    l1 = np.arange(*blocks["L1"])
    l2 = np.arange(*blocks["L2"])
    r1 = np.arange(*blocks["R1"])
    r2 = np.arange(*blocks["R2"])
    dense1 = (np.repeat(l1, len(r2)), np.tile(r2, len(l1)))
    dense2 = (np.repeat(l2, len(r1)), np.tile(r1, len(l2)))
    rng = np.random.default_rng(spec.seed)
    keep = rng.random(len(l1) * len(r1)) < 1.0 / (spec.p * spec.N)
    sp_u = np.repeat(l1, len(r1))[keep]
    sp_v = np.tile(r1, len(l1))[keep]
    eu = np.concatenate([dense1[0], dense2[0], sp_u])
    ev = np.concatenate([dense1[1], dense2[1], sp_v])
    return build_graph(2 * spec.side, list(zip(eu.tolist(), ev.tolist())))


def hard_instance_metadata(spec: HardInstanceSpec, g: Graph) -> dict:
    """Sidecar metadata: block ranges, parameters and measured block sizes."""
    blocks = spec.blocks()
    return {
        "N": spec.N, "p": spec.p, "cstar": spec.cstar, "seed": spec.seed,
        "side": spec.side, "n": g.n, "m": g.m,
        "blocks": {k: list(v) for k, v in blocks.items()},
        "dense_edges": 2 * spec.N * spec.n2,
        "sparse_edges": hard_sparse_edge_count(spec, g),
    }


def hard_sparse_edge_count(spec: HardInstanceSpec, g: Graph) -> int:
    """Number of generated edges in the sparse L1-R1 block."""
    blocks = spec.blocks()
    l1_lo, l1_hi = blocks["L1"]
    r1_lo, r1_hi = blocks["R1"]
    in_l1 = (g.eu >= l1_lo) & (g.eu < l1_hi)
    in_r1 = (g.ev >= r1_lo) & (g.ev < r1_hi)
    return int((in_l1 & in_r1).sum())


def hard_b_matching_upper_bound(spec: HardInstanceSpec, g: Graph, b: int) -> int:
    """Counting upper bound on any b-matching of the instance.

    Edges at L2 and R2 contribute at most b(|L2| + |R2|); everything else
    must lie in the sparse block, so its actual edge count bounds the rest.
    """
    return b * 2 * spec.n2 + hard_sparse_edge_count(spec, g)


def save_edge_list(g: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(f"{g.n} {g.m}\n")
        for u, v in zip(g.eu.tolist(), g.ev.tolist()):
            fh.write(f"{u} {v}\n")


def load_edge_list(path) -> Graph:
    """Parse the edge-list format; errors carry 1-based line numbers."""
    header = None
    edges: list[tuple[int, int]] = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected two fields, got {len(parts)}")
            try:
                a, b = int(parts[0]), int(parts[1])
            except ValueError:
                raise ValueError(f"{path}:{lineno}: non-integer field") from None
            if header is None:
                header = (a, b)
            else:
                if not a < b:
                    raise ValueError(f"{path}:{lineno}: endpoints must satisfy u < v")
                edges.append((a, b))
    if header is None:
        raise ValueError(f"{path}: missing header line")
    n, m = header
    if len(edges) != m:
        raise ValueError(f"{path}: header declares {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def write_metadata_sidecar(meta: dict, path) -> None:
    with open(path, "w") as fh:
        json.dump(meta, fh, indent=2, sort_keys=True)
        fh.write("\n")
