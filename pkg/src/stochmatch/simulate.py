"""Bernoulli edge realizations and estimators of the expected maximum
matching size.

Every Monte-Carlo trial draws from its own generator seeded by
(seed, trial index), so estimates are reproducible and independent of
evaluation order. Ratio estimation pairs the numerator and denominator
on the same coin flips, which both reduces variance and makes the
per-trial monotonicity mu(H_p) <= mu(G_p) a hard assertion.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graph import EdgeSet, Graph, InstanceTooLargeError
from .matching import matching_size_arrays

EXACT_ORACLE_EDGE_CAP = 24


@dataclass(frozen=True)
class Estimate:
    """Monte-Carlo mean with its standard error and 95% interval."""

    mean: float
    stderr: float
    trials: int
    ci95: tuple[float, float]
    seed: int

    def to_json(self) -> dict:
        return {"mean": self.mean, "stderr": self.stderr, "trials": self.trials,
                "ci95": [self.ci95[0], self.ci95[1]], "seed": self.seed}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


@dataclass(frozen=True)
class RatioEstimate:
    """Paired estimates for a subgraph and its parent, with their ratio."""

    alg: Estimate
    opt: Estimate
    ratio: float
    ratio_stderr: float

    def to_json(self) -> dict:
        return {"alg": self.alg.to_json(), "opt": self.opt.to_json(),
                "ratio": self.ratio, "ratio_stderr": self.ratio_stderr}


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """The generator for one (seed, trial) cell of the stream table."""
    return np.random.default_rng([int(seed), int(trial)])


def realize(s: EdgeSet, p: float, stream: np.random.Generator) -> np.ndarray:
    """Keep each member edge independently with probability p.

    Returns booleans aligned with s.ids. The stream fully determines the
    outcome.
    """
    if not 0 <= p <= 1:
        raise ValueError("p must be in [0, 1]")
    return stream.random(len(s.ids)) < p


def _realized_mu(s: EdgeSet, keep: np.ndarray) -> int:
    g = s.parent
    ids = s.ids[keep]
    return matching_size_arrays(g.n, g.eu[ids], g.ev[ids], g.bipartition())


def _summarize(values: np.ndarray, seed: int) -> Estimate:
    trials = len(values)
    mean = float(values.mean())
    sd = float(values.std(ddof=1)) if trials > 1 else 0.0
    stderr = sd / np.sqrt(trials)
    return Estimate(mean=mean, stderr=stderr, trials=trials,
                    ci95=(mean - 1.96 * stderr, mean + 1.96 * stderr), seed=seed)


def estimate_expected_matching(s: EdgeSet, p: float, trials: int, seed: int) -> Estimate:
    """Monte-Carlo estimate of E[mu(s_p)] over `trials` realizations."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    vals = np.empty(trials, np.float64)
    for t in range(trials):
        keep = realize(s, p, trial_rng(seed, t))
        vals[t] = _realized_mu(s, keep)
    return _summarize(vals, seed)


def exact_expected_matching(s: EdgeSet, p: float) -> float:
    """Exact E[mu(s_p)] by enumerating all 2^m subsets of s.

    Subset maximum-matching sizes come from an incremental DP over the
    subset lattice; the weighted sum over subset sizes gives the
    expectation. Capped at 24 edges.
    """
    return exact_expected_matching_many(s, [p])[0]


def exact_expected_matching_many(s: EdgeSet, ps) -> list[float]:
    """exact_expected_matching for several p values, one enumeration."""
    m = len(s.ids)
    if m > EXACT_ORACLE_EDGE_CAP:
        raise InstanceTooLargeError(
            f"exact oracle capped at {EXACT_ORACLE_EDGE_CAP} edges, got {m}")
    for p in ps:
        if not 0 <= p <= 1:
            raise ValueError("p must be in [0, 1]")
    if m == 0:
        return [0.0 for _ in ps]
    eu, ev = s.endpoint_arrays()
    shares = (eu[:, None] == eu[None, :]) | (eu[:, None] == ev[None, :]) \
        | (ev[:, None] == eu[None, :]) | (ev[:, None] == ev[None, :])
    incmask = (shares.astype(np.int64) << np.arange(m, dtype=np.int64)[None, :]).sum(axis=1)
    acc = _kernels.mu_sums_by_popcount(m, incmask)
    ks = np.arange(m + 1, dtype=np.float64)
    out = []
    for p in ps:
        w = np.power(p, ks) * np.power(1.0 - p, m - ks)
        out.append(float(acc @ w))
    return out


def estimate_ratio(g: Graph, h: EdgeSet, p: float, trials: int, seed: int) -> RatioEstimate:
    """Paired Monte-Carlo estimate of E[mu(H_p)] / E[mu(G_p)].

    h must be a subset of g's edges; the same coin flips drive both
    realizations, so mu(H_p) <= mu(G_p) holds trial by trial. The ratio
    standard error comes from the first-order delta method with the
    sample covariance of the paired values.
    """
    if h.parent is not g:
        raise ValueError("h must be an edge set of g")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    color = g.bipartition()
    hmask = h.mask()
    identical = len(h.ids) == g.m
    vg = np.empty(trials, np.float64)
    vh = np.empty(trials, np.float64)
    for t in range(trials):
        coins = trial_rng(seed, t).random(g.m)
        keep_g = coins < p
        mu_g = matching_size_arrays(g.n, g.eu[keep_g], g.ev[keep_g], color)
        if identical:
            mu_h = mu_g
        else:
            keep_h = keep_g & hmask
            mu_h = matching_size_arrays(g.n, g.eu[keep_h], g.ev[keep_h], color)
        if mu_h > mu_g:
            raise AssertionError("monotonicity violated: mu(H_p) > mu(G_p)")
        vg[t] = mu_g
        vh[t] = mu_h
    opt = _summarize(vg, seed)
    alg = _summarize(vh, seed)
    if opt.mean <= 0:
        raise ValueError("opt estimate is not positive; ratio undefined")
    ratio = alg.mean / opt.mean
    if trials > 1:
        cov = float(np.cov(vh, vg, ddof=1)[0, 1]) / trials
        var = (alg.stderr ** 2 / opt.mean ** 2
               + (alg.mean ** 2) * opt.stderr ** 2 / opt.mean ** 4
               - 2 * alg.mean * cov / opt.mean ** 3)
        ratio_stderr = float(np.sqrt(max(var, 0.0)))
    else:
        ratio_stderr = 0.0
    return RatioEstimate(alg=alg, opt=opt, ratio=ratio, ratio_stderr=ratio_stderr)
