"""Non-adaptive bounded-degree sparsifiers for stochastic matching.

Two constructions share one shape: pick a base edge set (a maximum
floor(1/p)-matching for small p, a single maximum matching for large p),
then run the iterated matching-cover extraction on the remaining edges
and return the union. The dispatcher routes by comparing p against the
threshold p0.

The max degree of the output is capped by (base degree cap) + (effective
cover rounds), asserted on every run.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .bmatching import maximum_b_matching
from .cover import DEFAULT_ROUND_MULTIPLIER, MatchingCover, matching_cover
from .graph import EdgeSet, Graph, Matching, max_degree, remove_edges, union
from .matching import maximum_matching

DEFAULT_P0 = 0.1
DEFAULT_DELTA0 = 0.02
DEFAULT_EPS0 = 0.02001


@dataclass(frozen=True)
class SparsifierConfig:
    """Parameters of the sparsifiers.

    delta0 and eps0 are the small-p analysis constants (defaults follow
    the source analysis); eps1 = (eps0 - delta0) / 2 is the cover
    parameter of the small-p branch. The large-p branch uses
    eps = p0^2 / 1e4. p0 is the dispatch threshold, round_multiplier the
    constant in the round-count formula.
    """

    p: float
    p0: float = DEFAULT_P0
    delta0: float = DEFAULT_DELTA0
    eps0: float = DEFAULT_EPS0
    round_multiplier: float = DEFAULT_ROUND_MULTIPLIER
    seed: int = 0

    def __post_init__(self):
        if not 0 < self.p < 1:
            raise ValueError("p must be in (0, 1)")
        if not 0 < self.delta0 < self.eps0:
            raise ValueError("need 0 < delta0 < eps0")
        if not 0 < self.p0 < 1:
            raise ValueError("p0 must be in (0, 1)")

    @property
    def eps1(self) -> float:
        return (self.eps0 - self.delta0) / 2

    @property
    def large_p_eps(self) -> float:
        return self.p0 ** 2 / 1e4

    @property
    def large_p_delta(self) -> float:
        return self.p ** 2 / 4


@dataclass(frozen=True)
class SparsifierOutput:
    """Subgraph H(V, Q) in original edge ids, plus provenance.

    Q is the disjoint union of the base edge set and the cover's union;
    stats carries the JSON-friendly summary (branch, rounds, sizes,
    degree histogram data).
    """

    H: EdgeSet
    base: EdgeSet
    cover: MatchingCover
    stats: dict = field(compare=False)

    @property
    def max_degree(self) -> int:
        return self.stats["max_degree"]


def _assemble(g: Graph, branch: str, base: EdgeSet, cover_g: MatchingCover,
              base_cap: int) -> SparsifierOutput:
    q = union(base, cover_g.union)
    if len(np.intersect1d(base.ids, cover_g.union.ids)):
        raise AssertionError("base and cover are not edge-disjoint")
    deg_q = max_degree(q)
    rounds = cover_g.rounds
    if deg_q > base_cap + rounds:
        raise AssertionError(
            f"degree bound violated: {deg_q} > {base_cap} + {rounds}")
    hist = np.bincount(q.degree_counts()) if g.n else np.zeros(1, np.int64)
    stats = {
        "branch": branch,
        "rounds": rounds,
        "base_size": len(base),
        "cover_sizes": cover_g.sizes,
        "max_degree": deg_q,
        "degree_cap": base_cap + rounds,
        "degree_histogram": hist.tolist(),
        "n": g.n,
        "m": g.m,
        "q_size": len(q),
    }
    return SparsifierOutput(H=q, base=base, cover=cover_g, stats=stats)


def _lift_cover(g: Graph, cover_sub: MatchingCover, id_map: np.ndarray) -> MatchingCover:
    """Re-express a cover computed on a subgraph in the ids of g."""
    matchings = tuple(Matching(g, id_map[mt.ids]) for mt in cover_sub.matchings)
    ids = (np.concatenate([mt.ids for mt in matchings])
           if matchings else np.empty(0, np.int64))
    return MatchingCover(matchings=matchings, union=EdgeSet(g, ids),
                         rounds=cover_sub.rounds)


def sparsify_small_p(g: Graph, cfg: SparsifierConfig) -> SparsifierOutput:
    """Base = maximum floor(1/p)-matching; cover the rest with eps1."""
    b = int(math.floor(1.0 / cfg.p))
    base = maximum_b_matching(g, b).bmatching
    rest, id_map = remove_edges(g, base)
    cov = matching_cover(rest, cfg.eps1, cfg.p, multiplier=cfg.round_multiplier)
    return _assemble(g, "small-p", base, _lift_cover(g, cov, id_map), b)


def sparsify_large_p(g: Graph, cfg: SparsifierConfig) -> SparsifierOutput:
    """Base = one maximum matching; cover the rest with eps = p0^2 / 1e4."""
    base = maximum_matching(g).matching
    rest, id_map = remove_edges(g, base)
    cov = matching_cover(rest, cfg.large_p_eps, cfg.p, multiplier=cfg.round_multiplier)
    return _assemble(g, "large-p", base, _lift_cover(g, cov, id_map), 1)


def sparsify_auto(g: Graph, cfg: SparsifierConfig) -> SparsifierOutput:
    """Dispatch on p <= p0 (ties go to the small-p branch)."""
    if cfg.p <= cfg.p0:
        return sparsify_small_p(g, cfg)
    return sparsify_large_p(g, cfg)
