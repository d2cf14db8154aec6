"""Numeric verification of the analytic inequalities behind the
sparsifier guarantees, and the small minimization/linear programs that
lower-bound the augmentation gain.

All slack terms of the form O(p0) or (1 - O(p0)) default to zero: the
source analysis never pins their constants, so the clean analytic parts
are computed and the slack is exposed as an explicit parameter wherever
it appears.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations_with_replacement

from scipy.optimize import linprog

from .graph import InstanceTooLargeError

_E = math.e
_TINY_X = 1e-12


def f(x: float) -> float:
    """(1 - exp(-x)) / x, extended by its limit 1 at x = 0.

    Monotone decreasing on [0, inf). Raises for negative x.
    """
    if x < 0:
        raise ValueError("f is only evaluated for x >= 0")
    if x < _TINY_X:
        return 1.0
    return -math.expm1(-x) / x


def eta() -> float:
    """f(1/e) / e^2 * (1 - 1/e); the per-edge augmentation constant.

    Slightly above 0.07157.
    """
    return f(1 / _E) / _E**2 * (1 - 1 / _E)


def check_prop_upper_exp(x: float, c: float) -> bool:
    """exp(-x) <= 1 - f(c) x for 0 <= x <= c, up to 1e-12 in the claim's favor."""
    if not 0 <= x <= c:
        raise ValueError("need 0 <= x <= c")
    return math.exp(-x) <= 1 - f(c) * x + 1e-12


def check_prop_upper_exp2(x: float) -> bool:
    """(1 - x)^(1/x) >= (1 - x) / e on (0, 0.43], up to 1e-12 in the claim's favor.

    The inequality extends to (0, 1] but only this range is asserted;
    probe_prop_upper_exp2 reports on the rest without asserting.
    """
    if not 0 < x <= 0.43:
        raise ValueError("asserted range is (0, 0.43]")
    return (1 - x) ** (1 / x) >= (1 - x) / _E - 1e-12


def probe_prop_upper_exp2(xs) -> list[tuple[float, bool]]:
    """Evaluate the same inequality on (0.43, 1] for inspection only."""
    out = []
    for x in xs:
        if not 0.43 < x <= 1:
            raise ValueError("probe range is (0.43, 1]")
        out.append((x, (1 - x) ** (1 / x) >= (1 - x) / _E - 1e-12))
    return out


@dataclass(frozen=True)
class DegreeProfile:
    """Candidate-edge degrees (d(u_i), d(v_i)) at the ends of matched edges,
    all capped by b."""

    du: tuple[int, ...]
    dv: tuple[int, ...]
    b: int

    def __post_init__(self):
        if len(self.du) != len(self.dv):
            raise ValueError("du and dv must have equal length")
        if any(not 0 <= d <= self.b for d in self.du + self.dv):
            raise ValueError("entries must lie in [0, b]")

    @property
    def total(self) -> int:
        return sum(self.du) + sum(self.dv)


def mp_objective(profile: DegreeProfile, p: float, p0_term: float = 0.0) -> float:
    """F(du, dv) = (1 - p0_term) f(1/e) (p / e^2)
    sum_i (1 - exp(-p d(v_i))) max(d(u_i) - 1, 0)."""
    pref = (1 - p0_term) * f(1 / _E) * p / _E**2
    return pref * sum((-math.expm1(-p * dv)) * max(du - 1, 0)
                      for du, dv in zip(profile.du, profile.dv))


def mp_bruteforce_min(num_edges: int, b: int, total: int, p: float,
                      structured_only: bool = False) -> tuple[float, DegreeProfile]:
    """Exact minimizer of the objective over profiles with the given total.

    Enumerates multisets of (du, dv) pairs (the objective is symmetric in
    i). With structured_only, restricts to du in {1, b}, dv in {0, b}.
    Raises when the search space would exceed roughly 1e7 states.
    """
    if num_edges < 0 or total < 0:
        raise ValueError("sizes must be nonnegative")
    if total > 2 * b * num_edges:
        raise ValueError(f"total {total} infeasible: exceeds 2*b*k = {2 * b * num_edges}")
    if math.comb((b + 1) ** 2 + num_edges - 1, max(num_edges, 1)) > 10**7:
        raise InstanceTooLargeError("profile enumeration too large")
    if structured_only:
        pair_values = [(du, dv) for du in (1, b) for dv in (0, b)]
        pair_values = sorted(set(pair_values))
    else:
        pair_values = [(du, dv) for du in range(b + 1) for dv in range(b + 1)]
    best = None
    best_profile = None
    for combo in combinations_with_replacement(pair_values, num_edges):
        if sum(du + dv for du, dv in combo) != total:
            continue
        profile = DegreeProfile(du=tuple(du for du, _ in combo),
                                dv=tuple(dv for _, dv in combo), b=b)
        val = mp_objective(profile, p)
        if best is None or val < best - 1e-15:
            best = val
            best_profile = profile
    if best is None:
        raise ValueError("no feasible profile for the given total")
    return best, best_profile


def mp_bruteforce_min_split(num_edges: int, b: int, du_total: int, dv_total: int,
                            p: float, structured_only: bool = False
                            ) -> tuple[float, DegreeProfile]:
    """Exact minimizer with the two column sums fixed separately.

    This is the setting of the two-values normalization: du entries sum to
    du_total, dv entries to dv_total.
    """
    if math.comb((b + 1) ** 2 + num_edges - 1, max(num_edges, 1)) > 10**7:
        raise InstanceTooLargeError("profile enumeration too large")
    if structured_only:
        pair_values = sorted({(du, dv) for du in (1, b) for dv in (0, b)})
    else:
        pair_values = [(du, dv) for du in range(b + 1) for dv in range(b + 1)]
    best = None
    best_profile = None
    for combo in combinations_with_replacement(pair_values, num_edges):
        if (sum(du for du, _ in combo) != du_total
                or sum(dv for _, dv in combo) != dv_total):
            continue
        profile = DegreeProfile(du=tuple(du for du, _ in combo),
                                dv=tuple(dv for _, dv in combo), b=b)
        val = mp_objective(profile, p)
        if best is None or val < best - 1e-15:
            best = val
            best_profile = profile
    if best is None:
        raise ValueError("no feasible profile for the given column sums")
    return best, best_profile


def mp_lower_bound(c_size: float, mplus_size: float, p: float,
                   p0_term: float = 0.0) -> float:
    """(p |C| - |M+|) * eta - p0_term; the clean part of the program bound."""
    return (p * c_size - mplus_size) * eta() - p0_term


def lp_min_value(p: float, delta: float, eps: float, opt: float) -> float:
    """Closed-form minimum of the relaxed augmentation LP.

    The two original constraints combine into 2 a1 + a3 >= (1/2 + 3 delta
    + 3 eps) opt; minimizing p a1 + p^2 a3 over that half-space puts all
    weight on a3 when p <= 1/2 and on a1 otherwise.
    """
    if opt < 0:
        raise ValueError("opt must be nonnegative")
    if delta < 0 or eps < 0 or 0.5 - delta - eps < 0:
        raise ValueError("infeasible parameters")
    if not 0 < p < 1:
        raise ValueError("p must be in (0, 1)")
    if p <= 0.5:
        return (0.5 + 3 * delta + 3 * eps) * opt * p**2
    return (0.25 + 1.5 * delta + 1.5 * eps) * p * opt


def lp_solve_relaxed(p: float, delta: float, eps: float, opt: float) -> float:
    """The same relaxed LP solved exactly (cross-check for the closed form)."""
    rhs = (0.5 + 3 * delta + 3 * eps) * opt
    res = linprog(c=[p, p**2], A_ub=[[-2.0, -1.0]], b_ub=[-rhs],
                  bounds=[(0, None), (0, None)], method="highs")
    if not res.success:
        raise ValueError(f"LP solve failed: {res.message}")
    return float(res.fun)


def lp_solve_original(p: float, delta: float, eps: float, opt: float) -> float:
    """The original two-constraint LP over (a1, a3, a_ge5); its minimum is
    at least the relaxed value."""
    A = (0.5 - delta - eps) * opt
    B = (0.5 + delta + eps) * opt
    if A < 0:
        raise ValueError("infeasible parameters")
    res = linprog(c=[p, p**2, 0.0],
                  A_ub=[[0.0, 1.0, 2.0], [-1.0, -1.0, -1.0]],
                  b_ub=[A, -B],
                  bounds=[(0, None)] * 3, method="highs")
    if not res.success:
        raise ValueError(f"LP solve failed: {res.message}")
    return float(res.fun)
