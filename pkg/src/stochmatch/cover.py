"""Iterated maximum-matching extraction.

Repeatedly takes a maximum matching of the residual graph and removes
its edges. The matchings are edge-disjoint and nonincreasing in size,
and the residual after the last round cannot have a larger matching than
the last extracted one; the sparsifiers build on those facts.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .graph import EdgeSet, Graph, Matching, remove_edges
from .matching import maximum_matching

DEFAULT_ROUND_MULTIPLIER = 2.0


def compute_rounds(epsilon: float, p: float, multiplier: float = DEFAULT_ROUND_MULTIPLIER) -> int:
    """Number of extraction rounds, ceil(c * ln(1/(eps*p)) / (eps*p)).

    The theory prescribes Theta(log(1/(eps p)) / (eps p)); the constant c
    is a knob (default 2). Clamped below at 1.
    """
    ep = epsilon * p
    if not 0 < ep < 1:
        raise ValueError(f"epsilon * p must be in (0, 1), got {ep}")
    if multiplier <= 0:
        raise ValueError("multiplier must be positive")
    return max(1, math.ceil(multiplier * math.log(1.0 / ep) / ep))


@dataclass(frozen=True)
class MatchingCover:
    """Edge-disjoint matchings M_1..M_R (ids in the source graph) and their union."""

    matchings: tuple[Matching, ...]
    union: EdgeSet
    rounds: int = field(default=-1)

    def __post_init__(self):
        if self.rounds == -1:
            object.__setattr__(self, "rounds", len(self.matchings))
        sizes = self.sizes
        if any(sizes[i] < sizes[i + 1] for i in range(len(sizes) - 1)):
            raise AssertionError("matching sizes must be nonincreasing")
        seen: set[int] = set()
        for mt in self.matchings:
            ids = set(mt.ids.tolist())
            if ids & seen:
                raise AssertionError("matchings are not edge-disjoint")
            seen |= ids
        if seen != set(self.union.ids.tolist()):
            raise AssertionError("union does not match the matchings")

    @property
    def sizes(self) -> list[int]:
        return [len(mt) for mt in self.matchings]

    @property
    def last_size(self) -> int:
        return len(self.matchings[-1]) if self.matchings else 0


def matching_cover(g: Graph, epsilon: float, p: float,
                   rounds_override: int | None = None,
                   multiplier: float = DEFAULT_ROUND_MULTIPLIER) -> MatchingCover:
    """Extract up to R maximum matchings from g, stopping early when the
    residual graph runs out of edges. Returned ids refer to g."""
    rounds = rounds_override if rounds_override is not None \
        else compute_rounds(epsilon, p, multiplier)
    matchings: list[Matching] = []
    residual = g
    id_map = np.arange(g.m, dtype=np.int64)
    done = 0
    while done < rounds and residual.m > 0:
        mi = maximum_matching(residual).matching
        orig_ids = id_map[mi.ids]
        matchings.append(Matching(g, orig_ids))
        residual, sub_map = remove_edges(residual, mi)
        id_map = id_map[sub_map]
        done += 1
    all_ids = (np.concatenate([mt.ids for mt in matchings])
               if matchings else np.empty(0, np.int64))
    return MatchingCover(matchings=tuple(matchings), union=EdgeSet(g, all_ids))


def residual_bound_check(g: Graph, cover: MatchingCover) -> bool:
    """mu of the leftover edges is at most the size of the last matching.

    Holds with slack zero because each round extracts an exact maximum
    matching of its residual; checked as a hard property in the suites.
    """
    if cover.union.parent is not g:
        raise ValueError("cover was not produced from g")
    residual, _ = remove_edges(g, cover.union)
    if residual.m == 0:
        return True
    mu_left = maximum_matching(residual).size
    return mu_left <= cover.last_size
