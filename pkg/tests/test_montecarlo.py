"""Simulation machinery: determinism, distributional checks, design constants."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import stats

from weibull_shrink.estimators import (
    beta_mmse,
    beta_shrink,
    beta_shrink_truncated,
    beta_unbiased,
)
from weibull_shrink.model import (
    BUILTIN_H,
    GuessInterval,
    PivotalContext,
    ShrinkageConfig,
    WeibullParams,
)
from weibull_shrink.montecarlo import (
    _CHUNK,
    EmpiricalRisk,
    SimulationPlan,
    empirical_risk,
    estimate_bain_constant,
    estimate_degrees_of_freedom,
    estimator_for,
    mmse_estimator,
    pivotal_context_from_sample,
    sample_t,
    sample_weibull,
    shrink_estimator,
    truncated_estimator,
    unbiased_estimator,
)

H6 = 10.8519
PARAMS = WeibullParams(alpha=1.0, beta=1.0)


def plan(reps, seed=0, beta=1.0):
    return SimulationPlan(
        replicates=reps, seed=seed, params=WeibullParams(alpha=1.0, beta=beta), n=20, m=6
    )


# --- plan and result validation ---------------------------------------------


def test_simulation_plan_validation():
    with pytest.raises(ValueError):
        SimulationPlan(replicates=1, seed=0, params=PARAMS, n=20, m=6)
    with pytest.raises(ValueError):
        SimulationPlan(replicates=100, seed=-1, params=PARAMS, n=20, m=6)
    with pytest.raises(ValueError):
        SimulationPlan(replicates=100, seed=0, params=PARAMS, n=5, m=6)
    with pytest.raises(ValueError):
        SimulationPlan(replicates=100, seed=0, params=PARAMS, n=20, m=1)


def test_empirical_risk_validation():
    with pytest.raises(ValueError, match="inconsistent"):
        # mse well below bias^2 is impossible
        EmpiricalRisk(mean=1.0, bias=0.5, mse=0.1, se_mean=0.01, se_mse=0.01, replicates=100)
    with pytest.raises(ValueError):
        EmpiricalRisk(mean=1.0, bias=0.0, mse=-0.1, se_mean=0.01, se_mse=0.01, replicates=100)
    with pytest.raises(ValueError):
        EmpiricalRisk(mean=math.nan, bias=0.0, mse=0.1, se_mean=0.01, se_mse=0.01, replicates=100)
    r = EmpiricalRisk(mean=1.0, bias=0.0, mse=0.1, se_mean=0.01, se_mse=0.01, replicates=100)
    assert r.to_dict()["replicates"] == 100


# --- determinism ------------------------------------------------------------


def test_empirical_risk_bit_exact_repeat():
    est = unbiased_estimator(H6)
    a = empirical_risk(plan(50_000, seed=3), est, h=H6)
    b = empirical_risk(plan(50_000, seed=3), est, h=H6)
    assert a == b  # dataclass equality: every float identical


def test_empirical_risk_seed_sensitivity():
    est = unbiased_estimator(H6)
    a = empirical_risk(plan(50_000, seed=3), est, h=H6)
    b = empirical_risk(plan(50_000, seed=4), est, h=H6)
    assert a.mean != b.mean


def test_empirical_risk_across_chunk_boundary():
    # replicate counts straddling the chunk size stay deterministic
    est = mmse_estimator(H6)
    for reps in (_CHUNK - 1, _CHUNK, _CHUNK + 1, 2 * _CHUNK + 17):
        a = empirical_risk(plan(reps, seed=11), est, h=H6)
        b = empirical_risk(plan(reps, seed=11), est, h=H6)
        assert a == b
        assert a.replicates == reps


def test_default_h_resolves_from_builtin_table():
    est = unbiased_estimator(H6)
    a = empirical_risk(plan(10_000, seed=5), est)  # n=20, m=6 -> 10.8519
    b = empirical_risk(plan(10_000, seed=5), est, h=H6)
    assert a == b


def test_estimate_bain_constant_deterministic():
    a = estimate_bain_constant(6, 20, 20_000, seed=9)
    b = estimate_bain_constant(6, 20, 20_000, seed=9)
    assert a == b


# --- distributional checks --------------------------------------------------


def test_sample_t_moments():
    h, beta = H6, 2.0
    rng = np.random.default_rng(99)
    t = sample_t(h, beta, rng, size=400_000)
    se_mean = t.std(ddof=1) / math.sqrt(t.size)
    assert abs(t.mean() - h / beta) < 3.0 * se_mean
    # variance of a gamma(h/2, scale 2/beta) variate
    assert t.var(ddof=1) == pytest.approx(2.0 * h / beta**2, rel=0.02)
    assert (t > 0).all()


def test_sample_t_validation():
    rng = np.random.default_rng(0)
    with pytest.raises(ValueError):
        sample_t(0.0, 1.0, rng)
    with pytest.raises(ValueError):
        sample_t(10.0, -1.0, rng)


def test_sample_weibull_distribution():
    alpha, beta = 2.0, 1.5
    rng = np.random.default_rng(2024)
    x = sample_weibull(WeibullParams(alpha=alpha, beta=beta), 5000, 5000, rng)
    res = stats.kstest(x, lambda v: 1.0 - np.exp(-((v / alpha) ** beta)))
    assert res.pvalue > 0.01, res
    assert (np.diff(x) >= 0).all()


def test_sample_weibull_censoring_is_truncation():
    # drawing m < n keeps exactly the m smallest of the same n draws
    full = sample_weibull(PARAMS, 50, 50, np.random.default_rng(7))
    part = sample_weibull(PARAMS, 50, 12, np.random.default_rng(7))
    assert np.array_equal(part, full[:12])


def test_sample_weibull_validation():
    rng = np.random.default_rng(0)
    with pytest.raises(ValueError):
        sample_weibull(PARAMS, 5, 0, rng)
    with pytest.raises(ValueError):
        sample_weibull(PARAMS, 5, 6, rng)


def test_unbiased_estimator_is_unbiased():
    emp = empirical_risk(plan(400_000, seed=21, beta=2.5), unbiased_estimator(H6), h=H6)
    assert abs(emp.mean - 2.5) < 3.0 * emp.se_mean
    assert abs(emp.bias) < 3.0 * emp.se_mean / 2.5


def test_se_scales_with_replicates():
    est = unbiased_estimator(H6)
    small = empirical_risk(plan(50_000, seed=13), est, h=H6)
    large = empirical_risk(plan(200_000, seed=13), est, h=H6)
    ratio = large.se_mean / small.se_mean
    # quadrupling the sample should halve the SE, within sampling noise
    assert 0.4 < ratio < 0.6, ratio


# --- vectorized estimators agree with the scalar ones -----------------------

IV = GuessInterval(0.8, 1.2)
CFG = ShrinkageConfig(p=-1.0, q=0.5)


def scalar_ctx(t):
    return PivotalContext(n=20, m=6, h=H6, t=t)


@given(t=st.floats(min_value=0.01, max_value=200.0))
@settings(max_examples=150, deadline=None)
def test_vectorized_matches_scalar(t):
    arr = np.array([t])
    assert unbiased_estimator(H6)(arr)[0] == pytest.approx(
        beta_unbiased(scalar_ctx(t)), rel=1e-15
    )
    assert mmse_estimator(H6)(arr)[0] == pytest.approx(beta_mmse(scalar_ctx(t)), rel=1e-15)
    assert shrink_estimator(H6, IV, CFG)(arr)[0] == pytest.approx(
        beta_shrink(scalar_ctx(t), IV, CFG), rel=1e-14
    )
    assert truncated_estimator(H6, IV, CFG)(arr)[0] == pytest.approx(
        beta_shrink_truncated(scalar_ctx(t), IV, CFG), rel=1e-14
    )


def test_vectorized_truncation_ties_match_scalar():
    # exact threshold values must take the same (middle) branch in both
    # code paths; the values then agree to association-order roundoff
    for t in ((H6 - 2.0) / IV.beta1, (H6 - 2.0) / IV.beta2):
        got = truncated_estimator(H6, IV, CFG)(np.array([t]))[0]
        want = beta_shrink_truncated(scalar_ctx(t), IV, CFG)
        assert got not in (IV.beta1, IV.beta2)
        assert want not in (IV.beta1, IV.beta2)
        assert got == pytest.approx(want, rel=1e-14)


def test_estimator_for_dispatch():
    t = np.array([5.0, 9.0])
    assert np.array_equal(estimator_for("UNBIASED", H6)(t), unbiased_estimator(H6)(t))
    assert np.array_equal(estimator_for("MMSE", H6)(t), mmse_estimator(H6)(t))
    assert np.array_equal(
        estimator_for("SHRINK_PQ", H6, IV, CFG)(t), shrink_estimator(H6, IV, CFG)(t)
    )
    assert np.array_equal(
        estimator_for("SHRINK_PQ_MODIFIED", H6, IV, CFG)(t),
        truncated_estimator(H6, IV, CFG)(t),
    )
    with pytest.raises(ValueError):
        estimator_for("SHRINK_PQ", H6)  # missing interval and config
    with pytest.raises(ValueError):
        estimator_for("JAMES_STEIN", H6)


# --- design constants by simulation -----------------------------------------


def test_bain_constant_two_by_two():
    # for m = n = 2 the expected log-spacing is known: k = ln 2
    k, se = estimate_bain_constant(2, 2, 400_000, seed=42)
    assert se > 0.0
    assert abs(k - math.log(2.0)) < 3.0 * se


def test_bain_constant_validation():
    with pytest.raises(ValueError):
        estimate_bain_constant(1, 10, 1000, seed=0)
    with pytest.raises(ValueError):
        estimate_bain_constant(5, 4, 1000, seed=0)
    with pytest.raises(ValueError):
        estimate_bain_constant(5, 10, 1, seed=0)


def test_degrees_of_freedom_tracks_builtin_table():
    got = {}
    for m in (6, 8, 10, 12):
        h, se = estimate_degrees_of_freedom(m, 20, 200_000, seed=7)
        got[m] = h
        builtin = BUILTIN_H[(20, m)]
        assert abs(h - builtin) < 4.0 * se, (m, h, builtin, se)
    # more failures observed -> more information -> larger h
    assert got[6] < got[8] < got[10] < got[12]


def test_pivotal_context_from_sample():
    ctx = pivotal_context_from_sample(8.8519, 20, 6)
    assert ctx.h == H6
    ctx = pivotal_context_from_sample(5.0, 25, 6, h=9.7)
    assert ctx.h == 9.7
