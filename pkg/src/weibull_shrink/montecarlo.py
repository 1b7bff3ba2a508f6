"""Simulation support: pivotal-law sampling, empirical risks, design constants.

Determinism contract: every routine that consumes a seed produces bit-identical
results for the same arguments on the same numpy version. Work is split into
fixed-size chunks, each driven by its own child of SeedSequence(seed), and the
per-chunk partial sums are reduced in chunk order, so results do not depend on
how the chunks are scheduled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from weibull_shrink.model import (
    GuessInterval,
    PivotalContext,
    ShrinkageConfig,
    WeibullParams,
    lookup_h,
)

_CHUNK = 1 << 16
_ROW_CHUNK = 1 << 13


@dataclass(frozen=True)
class SimulationPlan:
    """Replication count, seed, and the sampling design to simulate."""

    replicates: int
    seed: int
    params: WeibullParams
    n: int
    m: int

    def __post_init__(self) -> None:
        if int(self.replicates) != self.replicates or self.replicates < 2:
            raise ValueError(f"replicates must be an integer >= 2, got {self.replicates!r}")
        if int(self.seed) != self.seed or self.seed < 0:
            raise ValueError(f"seed must be a nonnegative integer, got {self.seed!r}")
        if int(self.m) != self.m or self.m < 2:
            raise ValueError(f"m must be an integer >= 2, got {self.m!r}")
        if int(self.n) != self.n or self.n < self.m:
            raise ValueError(f"n must be an integer >= m, got {self.n!r}")
        object.__setattr__(self, "replicates", int(self.replicates))
        object.__setattr__(self, "seed", int(self.seed))
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "m", int(self.m))


@dataclass(frozen=True)
class EmpiricalRisk:
    """Moment summary of simulated estimates of the shape.

    `mean` is in the units of the estimate; `bias` and `mse` are scaled by the
    true shape (mean/beta - 1 and E[(est - beta)^2]/beta^2) so they compare
    directly with the analytic risk functions. `se_mean` is the standard error
    of `mean` and `se_mse` that of `mse`.
    """

    mean: float
    bias: float
    mse: float
    se_mean: float
    se_mse: float
    replicates: int

    def __post_init__(self) -> None:
        if int(self.replicates) != self.replicates or self.replicates < 2:
            raise ValueError(f"replicates must be an integer >= 2, got {self.replicates!r}")
        for name in ("mean", "bias", "mse", "se_mean", "se_mse"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite, got {getattr(self, name)!r}")
        if self.mse < 0.0 or self.se_mean < 0.0 or self.se_mse < 0.0:
            raise ValueError("mse and standard errors cannot be negative")
        # second moment dominates squared first moment, up to fp roundoff
        if self.mse - self.bias * self.bias < -1e-9 * (1.0 + self.mse):
            raise ValueError(
                f"inconsistent moments: mse={self.mse!r} < bias^2={self.bias ** 2!r}"
            )
        object.__setattr__(self, "replicates", int(self.replicates))

    def to_dict(self) -> dict:
        return {
            "mean": self.mean,
            "bias": self.bias,
            "mse": self.mse,
            "se_mean": self.se_mean,
            "se_mse": self.se_mse,
            "replicates": self.replicates,
        }


def sample_weibull(
    params: WeibullParams, n: int, m: int, rng: np.random.Generator
) -> np.ndarray:
    """First m order statistics of n Weibull failure times, by inversion.

    Uses x = alpha * (-ln U)^(1/beta) so the draw is an explicit monotone map
    of the uniforms (one uniform per unit, sorted afterwards).
    """
    if int(m) != m or m < 1:
        raise ValueError(f"m must be an integer >= 1, got {m!r}")
    if int(n) != n or n < m:
        raise ValueError(f"n must be an integer >= m, got {n!r}")
    u = rng.random(int(n))
    x = params.alpha * (-np.log(u)) ** (1.0 / params.beta)
    x.sort()
    return x[: int(m)]


def sample_t(
    h: float, beta: float, rng: np.random.Generator, size: int | None = None
):
    """Draws of the pivotal statistic: Gamma(h/2) scaled by 2/beta."""
    if not math.isfinite(h) or h <= 0.0:
        raise ValueError(f"h must be finite and > 0, got {h!r}")
    if not math.isfinite(beta) or beta <= 0.0:
        raise ValueError(f"beta must be finite and > 0, got {beta!r}")
    return rng.standard_gamma(h / 2.0, size=size) * (2.0 / beta)


# ---------------------------------------------------------------------------
# vectorized estimators over arrays of pivotal draws

Estimator = Callable[[np.ndarray], np.ndarray]


def unbiased_estimator(h: float) -> Estimator:
    def estimate(t: np.ndarray) -> np.ndarray:
        return (h - 2.0) / t

    return estimate


def mmse_estimator(h: float) -> Estimator:
    def estimate(t: np.ndarray) -> np.ndarray:
        return (h - 4.0) / t

    return estimate


def shrink_estimator(
    h: float, interval: GuessInterval, cfg: ShrinkageConfig
) -> Estimator:
    # import here to keep the analytic modules free of numpy
    from weibull_shrink.estimators import shrink_weight

    w = shrink_weight(cfg.p, h)
    pull = cfg.q * interval.midpoint * (1.0 - w)

    def estimate(t: np.ndarray) -> np.ndarray:
        return w * (h - 2.0) / t + pull

    return estimate


def truncated_estimator(
    h: float, interval: GuessInterval, cfg: ShrinkageConfig
) -> Estimator:
    plain = shrink_estimator(h, interval, cfg)
    hi_t = (h - 2.0) / interval.beta1
    lo_t = (h - 2.0) / interval.beta2

    def estimate(t: np.ndarray) -> np.ndarray:
        t = np.asarray(t)
        return np.where(t > hi_t, interval.beta1, np.where(t < lo_t, interval.beta2, plain(t)))

    return estimate


def estimator_for(
    estimator_id: str,
    h: float,
    interval: GuessInterval | None = None,
    cfg: ShrinkageConfig | None = None,
) -> Estimator:
    """Vectorized estimator by identifier, matching the scalar functions."""
    if estimator_id == "UNBIASED":
        return unbiased_estimator(h)
    if estimator_id == "MMSE":
        return mmse_estimator(h)
    if estimator_id in ("SHRINK_PQ", "SHRINK_PQ_MODIFIED"):
        if interval is None or cfg is None:
            raise ValueError(f"{estimator_id} needs a guess interval and a (p, q) config")
        if estimator_id == "SHRINK_PQ":
            return shrink_estimator(h, interval, cfg)
        return truncated_estimator(h, interval, cfg)
    raise ValueError(f"unknown estimator id {estimator_id!r}")


# ---------------------------------------------------------------------------
# empirical risk of an estimator under the pivotal law


def _chunk_seeds(seed: int, n_chunks: int) -> list:
    return np.random.SeedSequence(seed).spawn(n_chunks)


def empirical_risk(
    plan: SimulationPlan, estimator: Estimator, *, h: float | None = None
) -> EmpiricalRisk:
    """Simulated bias and MSE of `estimator` fed with pivotal draws.

    t is drawn from its exact gamma law at the plan's true shape, so this
    checks the estimator-plus-risk mathematics rather than the sampling
    pipeline. h defaults to the built-in constant for the plan's (n, m).
    """
    if h is None:
        h = lookup_h(plan.n, plan.m)
    beta = plan.params.beta
    total = plan.replicates
    n_chunks = (total + _CHUNK - 1) // _CHUNK
    seeds = _chunk_seeds(plan.seed, n_chunks)
    sums_d = []
    sums_d2 = []
    sums_d4 = []
    done = 0
    for i in range(n_chunks):
        count = min(_CHUNK, total - done)
        done += count
        rng = np.random.default_rng(seeds[i])
        t = sample_t(h, beta, rng, size=count)
        d = (estimator(t) - beta) / beta
        d2 = d * d
        sums_d.append(float(np.sum(d)))
        sums_d2.append(float(np.sum(d2)))
        sums_d4.append(float(np.sum(d2 * d2)))
    s1 = math.fsum(sums_d)
    s2 = math.fsum(sums_d2)
    s4 = math.fsum(sums_d4)
    bias = s1 / total
    mse = s2 / total
    var_d = max(0.0, s2 / total - bias * bias)
    var_d2 = max(0.0, s4 / total - mse * mse)
    return EmpiricalRisk(
        mean=beta * (1.0 + bias),
        bias=bias,
        mse=mse,
        se_mean=beta * math.sqrt(var_d / total),
        se_mse=math.sqrt(var_d2 / total),
        replicates=total,
    )


# ---------------------------------------------------------------------------
# design constants by simulation


def _sev_spacing_sums(m: int, n: int, replicates: int, seed: int) -> np.ndarray:
    """Per-replicate sum_{i<m} (v_(i) - v_(m)) for n standard SEV draws.

    v = ln(-ln U) has the smallest-extreme-value law, the distribution of
    ln x when x is Weibull with alpha = beta = 1.
    """
    if int(m) != m or m < 2:
        raise ValueError(f"m must be an integer >= 2, got {m!r}")
    if int(n) != n or n < m:
        raise ValueError(f"n must be an integer >= m, got {n!r}")
    if int(replicates) != replicates or replicates < 2:
        raise ValueError(f"replicates must be an integer >= 2, got {replicates!r}")
    m, n, replicates = int(m), int(n), int(replicates)
    n_chunks = (replicates + _ROW_CHUNK - 1) // _ROW_CHUNK
    seeds = _chunk_seeds(seed, n_chunks)
    parts = []
    done = 0
    for i in range(n_chunks):
        rows = min(_ROW_CHUNK, replicates - done)
        done += rows
        rng = np.random.default_rng(seeds[i])
        v = np.log(-np.log(rng.random((rows, n))))
        v.sort(axis=1)
        parts.append(np.sum(v[:, : m - 1] - v[:, m - 1 : m], axis=1))
    return np.concatenate(parts)


def estimate_bain_constant(
    m: int, n: int, replicates: int, seed: int
) -> tuple[float, float]:
    """Simulated unbiasing constant k for the (m, n) design, with its SE."""
    s = _sev_spacing_sums(m, n, replicates, seed)
    k = -float(np.mean(s)) / n
    se = float(np.std(s, ddof=1)) / (n * math.sqrt(len(s)))
    return k, se


def estimate_degrees_of_freedom(
    m: int, n: int, replicates: int, seed: int
) -> tuple[float, float]:
    """Variance-matching surrogate for the pivotal degrees of freedom.

    Matches 2/h to the simulated variance of the normalized scale estimate,
    the value an exact chi-square pivot would give. It is a surrogate: the
    estimate's law is only approximately chi-square shaped, so treat the
    result as calibration, not truth. Returns (h, SE by the delta method).
    """
    s = _sev_spacing_sums(m, n, replicates, seed)
    b = s / np.mean(s)  # normalized scale estimates, sample mean exactly 1
    v = float(np.var(b, ddof=1))
    r = len(b)
    centered = b - np.mean(b)
    fourth = float(np.mean(centered**4))
    se_v = math.sqrt(max(0.0, fourth - v * v) / r)
    return 2.0 / v, 2.0 * se_v / (v * v)


def pivotal_context_from_sample(
    sample_t_value: float, n: int, m: int, *, h: float | None = None
) -> PivotalContext:
    """Convenience constructor resolving h from the built-in table."""
    if h is None:
        h = lookup_h(n, m)
    return PivotalContext(n=n, m=m, h=h, t=sample_t_value)
