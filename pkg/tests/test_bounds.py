import math

import mpmath
import numpy as np
import pytest

from stochmatch.bounds import (DegreeProfile, check_prop_upper_exp,
                               check_prop_upper_exp2, eta, f, lp_min_value,
                               lp_solve_original, lp_solve_relaxed, mp_bruteforce_min,
                               mp_bruteforce_min_split, mp_lower_bound, mp_objective,
                               probe_prop_upper_exp2)


def test_f_at_one():
    assert f(1.0) == pytest.approx(1 - 1 / math.e, abs=1e-12)


def test_f_series_cross_check():
    # alternating series 1 - x/2! + x^2/3! - ...
    for x in (0.1, 0.7, 2.3):
        series = sum((-x) ** k / math.factorial(k + 1) for k in range(30))
        assert f(x) == pytest.approx(series, abs=1e-12)


def test_f_monotone_decreasing():
    xs = np.linspace(1e-6, 10, 500)
    vals = [f(float(x)) for x in xs]
    assert all(a >= b - 1e-12 for a, b in zip(vals, vals[1:]))


def test_f_limit_and_domain():
    assert f(0.0) == 1.0
    assert f(1e-15) == 1.0
    with pytest.raises(ValueError):
        f(-0.1)


def test_eta_bounds():
    assert 0.07157 < eta() < 0.072


def test_eta_high_precision_reference():
    with mpmath.workdps(40):
        e = mpmath.e
        ref = ((1 - mpmath.exp(-1 / e)) * e) / e ** 2 * (1 - 1 / e)
        assert abs(eta() - float(ref)) < 1e-12


def test_prop1_boundary_cases():
    assert check_prop_upper_exp(0.0, 1.0)  # e^0 = 1 <= 1
    assert check_prop_upper_exp(1.0, 1.0)  # equality at x = c
    with pytest.raises(ValueError):
        check_prop_upper_exp(2.0, 1.0)


def test_prop1_grid():
    rng = np.random.default_rng(0)
    for _ in range(1000):
        c = float(rng.random()) * 10
        x = float(rng.random()) * c
        assert check_prop_upper_exp(x, c)


def test_prop2_range_and_grid():
    assert check_prop_upper_exp2(0.43)
    for x in np.linspace(0.001, 0.43, 500):
        assert check_prop_upper_exp2(float(x))
    with pytest.raises(ValueError):
        check_prop_upper_exp2(0.5)
    probes = probe_prop_upper_exp2([0.6, 0.9, 1.0])
    assert len(probes) == 3  # informational only


def test_mp_objective_annihilation():
    prof = DegreeProfile(du=(1, 1, 1), dv=(2, 0, 1), b=2)
    assert mp_objective(prof, 0.4) == 0.0
    prof = DegreeProfile(du=(2, 2), dv=(0, 0), b=2)
    assert mp_objective(prof, 0.4) == 0.0


def test_mp_objective_single_pair():
    prof = DegreeProfile(du=(2,), dv=(2,), b=2)
    p = 0.5
    want = f(1 / math.e) * p / math.e ** 2 * (1 - math.exp(-1.0)) * 1
    assert mp_objective(prof, p) == pytest.approx(want, rel=1e-12)


def test_mp_bruteforce_saturated():
    k, b, p = 2, 3, 0.3
    val, prof = mp_bruteforce_min(k, b, 2 * k * b, p)
    assert prof.du == (b, b) and prof.dv == (b, b)
    assert val == pytest.approx(mp_objective(prof, p), rel=1e-12)


def test_mp_bruteforce_zero_total():
    val, prof = mp_bruteforce_min(2, 3, 0, 0.3)
    assert val == 0.0 and prof.total == 0


def test_mp_bruteforce_infeasible_total():
    with pytest.raises(ValueError):
        mp_bruteforce_min(2, 3, 13, 0.3)


def test_mp_two_values_structure_spec_config():
    # |M+| = 2, b = 3, |C| = 7: some minimizer uses du in {1,3}, dv in {0,3}
    k, b, total, p = 2, 3, 7, 0.3
    gmin, _ = mp_bruteforce_min(k, b, total, p)
    smin, sprof = mp_bruteforce_min(k, b, total, p, structured_only=True)
    assert smin == pytest.approx(gmin, abs=1e-12)
    assert set(sprof.du) <= {1, b} and set(sprof.dv) <= {0, b}
    # the normalized split of |C| = 7 is d(U) = 4, d(V) = 3
    a, _ = mp_bruteforce_min_split(k, b, 4, 3, p)
    s, _ = mp_bruteforce_min_split(k, b, 4, 3, p, structured_only=True)
    assert s == pytest.approx(a, abs=1e-12)


def test_mp_two_values_per_split_grid():
    for k in (1, 2):
        for b in (2, 3):
            p = 1.0 / b
            for du_total in range(k, b * k + 1):
                if (du_total - k) % max(b - 1, 1):
                    continue
                for dv_total in range(0, b * k + 1, b):
                    a, _ = mp_bruteforce_min_split(k, b, du_total, dv_total, p)
                    try:
                        s, _ = mp_bruteforce_min_split(k, b, du_total, dv_total,
                                                       p, structured_only=True)
                    except ValueError:
                        continue
                    assert s <= a + 1e-12


def test_mp_lower_bound_zero_crossing():
    assert mp_lower_bound(10, 10 * 0.2, 0.2) == 0.0


def test_mp_lower_bound_fixture():
    # (0.2 * 100 - 10) * eta = 10 * eta
    val = mp_lower_bound(100, 10, 0.2)
    assert val == pytest.approx(10 * eta(), rel=1e-12)
    assert 0.7157 < val < 0.72


def test_mp_lower_bound_vs_enumeration_with_accounting_slack():
    # the analysis discards at most 2/p degrees (2 eta), undercounts
    # saturated pairs by at most (1 + p) k, and uses the b -> inf limit of
    # p (b-1) (1 - e^{-pb}); eta (2 + 3 p k) covers those at these sizes
    for k in (1, 2):
        for b in (2, 3, 4):
            p = 1.0 / b
            for total in range(0, 2 * b * k + 1):
                exact, _ = mp_bruteforce_min(k, b, total, p)
                clean = mp_lower_bound(total, k, p)
                assert clean <= exact + eta() * (2 + 3 * p * k) + 1e-9


def test_lp_fixture_11_over_64():
    assert lp_min_value(0.5, 1 / 16, 0.0, 1.0) == pytest.approx(11 / 64, rel=1e-12)


def test_lp_zero_opt():
    assert lp_min_value(0.4, 0.04, 0.001, 0.0) == 0.0


def test_lp_infeasible():
    with pytest.raises(ValueError):
        lp_min_value(0.4, 0.3, 0.3, 1.0)


def test_lp_closed_form_equals_relaxed_solver():
    for p in np.linspace(0.05, 0.95, 13):
        delta = p * p / 4
        eps = 0.1 ** 2 / 1e4
        for opt in (1.0, 17.0):
            a = lp_min_value(float(p), delta, eps, opt)
            b = lp_solve_relaxed(float(p), delta, eps, opt)
            assert a == pytest.approx(b, rel=1e-9, abs=1e-12)


def test_lp_original_at_least_relaxed():
    for p in (0.2, 0.5, 0.8):
        delta = p * p / 4
        eps = 1e-6
        relaxed = lp_min_value(p, delta, eps, 5.0)
        original = lp_solve_original(p, delta, eps, 5.0)
        assert original >= relaxed - 1e-9


def test_lp_floor():
    for p in np.linspace(0.05, 0.95, 13):
        delta = p * p / 4
        v = lp_min_value(float(p), delta, 1e-6, 3.0)
        assert v >= p * p / 2 * 3.0 - 1e-12


def test_lp_grid_search_cross_check():
    # coarse grid over the relaxed feasible set cannot beat the closed form
    p, delta, eps, opt = 0.5, 1 / 16, 0.0, 1.0
    best = lp_min_value(p, delta, eps, opt)
    rhs = (0.5 + 3 * delta + 3 * eps) * opt
    grid = np.linspace(0, 2 * rhs, 401)
    found = min(p * a1 + p * p * max(rhs - 2 * a1, 0.0) for a1 in grid)
    assert found >= best - 1e-9
    assert min(found, p * p * rhs) == pytest.approx(best, abs=1e-9)
