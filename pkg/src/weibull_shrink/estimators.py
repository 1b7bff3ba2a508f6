"""Point estimators of the Weibull shape parameter.

All estimators run through the pivotal statistic t: conditionally on the
censoring design, t behaves like (1/beta) times a chi-square variable with h
degrees of freedom, so (h - 2)/t is unbiased for beta and (h - 4)/t minimizes
MSE among multiples of 1/t. The shrinkage family pulls the unbiased estimate
toward a guessed interval midpoint with a data-independent weight w(p).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from weibull_shrink.model import (
    CensoredSample,
    GuessInterval,
    InadmissibleParameterError,
    PivotalContext,
    ShrinkageConfig,
)
from weibull_shrink.specfun import ln_gamma


class DegenerateSampleError(ValueError):
    """All recorded failure times coincide, so the scale estimate is zero."""


@dataclass(frozen=True)
class BainConstants:
    """Unbiasing constant k for the censored-sample scale estimator.

    k equals -(1/n) E[sum_{i<m} (v_i - v_m)] where v_1 <= ... <= v_m are the m
    smallest of n standard smallest-extreme-value order statistics. Values are
    design-specific; estimate them by simulation if no published value is at
    hand.
    """

    m: int
    n: int
    k: float

    def __post_init__(self) -> None:
        if int(self.m) != self.m or self.m < 2:
            raise ValueError(f"m must be an integer >= 2, got {self.m!r}")
        if int(self.n) != self.n or self.n < self.m:
            raise ValueError(f"n must be an integer >= m, got {self.n!r}")
        if not math.isfinite(self.k) or self.k <= 0.0:
            raise ValueError(f"k must be finite and > 0, got {self.k!r}")
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "n", int(self.n))


def bain_scale_estimate(sample: CensoredSample, constants: BainConstants) -> float:
    """Unbiased estimate of the log-Weibull scale b = 1/beta.

    Computes -sum_{i<m} (ln x_i - ln x_m) / (n * k) from the m smallest failure
    times. Requires at least two failures and constants matching the sample's
    censoring design.
    """
    m = sample.m
    if m < 2:
        raise ValueError("need at least two failures to estimate the scale")
    if (constants.m, constants.n) != (m, sample.n):
        raise ValueError(
            f"constants are for (m={constants.m}, n={constants.n}) but the sample "
            f"has (m={m}, n={sample.n})"
        )
    y = [math.log(x) for x in sample.observations]
    total = sum(y[i] - y[m - 1] for i in range(m - 1))
    estimate = -total / (sample.n * constants.k)
    if estimate == 0.0:
        raise DegenerateSampleError(
            "all recorded failure times are equal; the scale estimate is zero "
            "and no shape estimate exists"
        )
    return estimate


def shrink_weight(p: float, h: float) -> float:
    """Shrinkage weight w(p) = ((h-2)/2)^p * Gamma(h/2+p) / Gamma(h/2+2p).

    Admissible p are nonzero, keep both gamma arguments positive (effectively
    p > -h/4), and give 0 < w <= 1. Note the weight exceeds 1 on a small band
    of negative p near zero, which is rejected here like any other
    inadmissible p.
    """
    p = float(p)
    h = float(h)
    if not math.isfinite(h) or h <= 2.0:
        raise ValueError(f"h must be finite and > 2, got {h!r}")
    if not math.isfinite(p) or p == 0.0:
        raise InadmissibleParameterError(f"p must be a nonzero real, got {p!r}")
    if h / 2.0 + p <= 0.0 or h / 2.0 + 2.0 * p <= 0.0:
        raise InadmissibleParameterError(
            f"p={p} violates the gamma-argument bound p > {-h / 4.0:.6g} for h={h}"
        )
    w = math.exp(
        p * math.log((h - 2.0) / 2.0) + ln_gamma(h / 2.0 + p) - ln_gamma(h / 2.0 + 2.0 * p)
    )
    if w > 1.0 + 4.0 * 2.220446049250313e-16:
        raise InadmissibleParameterError(
            f"p={p} gives weight w={w:.6g} > 1 (inadmissible for h={h})"
        )
    return min(w, 1.0)


def beta_unbiased(ctx: PivotalContext) -> float:
    """Unbiased shape estimate (h - 2)/t. Requires h > 2."""
    if ctx.h <= 2.0:
        raise ValueError(f"unbiased estimate needs h > 2, got h={ctx.h!r}")
    return (ctx.h - 2.0) / ctx.t


def beta_mmse(ctx: PivotalContext) -> float:
    """Minimum-MSE shape estimate (h - 4)/t. Requires h > 4."""
    if ctx.h <= 4.0:
        raise ValueError(f"minimum-MSE estimate needs h > 4, got h={ctx.h!r}")
    return (ctx.h - 4.0) / ctx.t


def beta_shrink(
    ctx: PivotalContext, interval: GuessInterval, cfg: ShrinkageConfig
) -> float:
    """Shrinkage estimate: convex mix of (h-2)/t and q times the guess midpoint.

    Always positive, and strictly decreasing in t since w(p) > 0.
    """
    w = shrink_weight(cfg.p, ctx.h)
    return w * beta_unbiased(ctx) + cfg.q * interval.midpoint * (1.0 - w)


def beta_shrink_truncated(
    ctx: PivotalContext, interval: GuessInterval, cfg: ShrinkageConfig
) -> float:
    """Shrinkage estimate clamped so large t cannot leave the guess interval.

    When the unbiased estimate (h-2)/t falls below beta1 the estimate is beta1;
    when it rises above beta2 the estimate is beta2; otherwise the plain
    shrinkage estimate applies. Boundary ties resolve to the middle branch.
    """
    h, t = ctx.h, ctx.t
    if t > (h - 2.0) / interval.beta1:
        return interval.beta1
    if t < (h - 2.0) / interval.beta2:
        return interval.beta2
    return beta_shrink(ctx, interval, cfg)


def estimate_departure(ctx: PivotalContext, interval: GuessInterval) -> float:
    """Unbiased estimate of the midpoint departure (beta1 + beta2) / (2 beta).

    Equals t * (beta1 + beta2) / (2 h); its expectation is the true departure
    because E[t] = h / beta.
    """
    return ctx.t * (interval.beta1 + interval.beta2) / (2.0 * ctx.h)


def suggest_q(ctx: PivotalContext, interval: GuessInterval) -> float:
    """Data-driven pull weight: the reciprocal of the estimated departure.

    The product suggest_q * estimate_departure is identically 1. The value may
    exceed 1 when the data suggest the guess interval sits below the true
    shape; callers deciding to reuse it as a configuration constant must then
    cap it.
    """
    return 2.0 * ctx.h / (ctx.t * (interval.beta1 + interval.beta2))
