"""Exact risk functions for the shape estimators, scaled by the true shape.

Every quantity here is dimensionless: biases are E[estimate]/beta - 1, MSEs
are E[(estimate - beta)^2]/beta^2, and efficiencies compare against the
minimum-MSE multiple (h - 4)/t at 100 * mse_mmse / mse. The risks of the
shrinkage estimators depend on the unknown shape only through the departure
ratios delta1 = beta1/beta, delta2 = beta2/beta and their mean delta.

The `_given_w` helpers carry the actual formulas with the weight as an
argument; the public functions resolve w(p) and validate. The split exists for
the printed-table audit, which needs to re-evaluate cells under the source's
rounded weights.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from weibull_shrink.estimators import shrink_weight
from weibull_shrink.model import (
    GuessInterval,
    InadmissibleParameterError,
    RiskReport,
    ShrinkageConfig,
    departures,
)
from weibull_shrink.specfun import reg_lower_inc_gamma


@dataclass(frozen=True)
class DominanceRange:
    """Open interval of departure values delta, or the empty range.

    The empty range is represented by a NaN pair; `is_empty` is the only
    sanctioned way to test for it.
    """

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if math.isnan(self.lo) and math.isnan(self.hi):
            return
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise ValueError(f"endpoints must be finite or both NaN, got {self!r}")
        if not 0.0 <= self.lo < self.hi:
            raise ValueError(f"need 0 <= lo < hi, got {self!r}")

    @classmethod
    def empty(cls) -> "DominanceRange":
        return cls(math.nan, math.nan)

    @property
    def is_empty(self) -> bool:
        return not self.lo < self.hi

    def contains(self, delta: float) -> bool:
        return (not self.is_empty) and self.lo < delta < self.hi

    def intersect(self, other: "DominanceRange") -> "DominanceRange":
        if self.is_empty or other.is_empty:
            return DominanceRange.empty()
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo < hi:
            return DominanceRange(lo, hi)
        return DominanceRange.empty()


def _require_h(h: float, minimum: float) -> float:
    h = float(h)
    if not math.isfinite(h) or h <= minimum:
        raise ValueError(f"h must be finite and > {minimum:g}, got {h!r}")
    return h


def _require_positive(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value) or value <= 0.0:
        raise ValueError(f"{name} must be finite and > 0, got {value!r}")
    return value


def admissible_p(p: float, h: float) -> bool:
    """True when p yields a usable shrinkage weight for this h."""
    try:
        shrink_weight(p, h)
    except InadmissibleParameterError:
        return False
    return True


def require_admissible_p(p: float, h: float) -> float:
    """Return w(p), raising InadmissibleParameterError otherwise."""
    return shrink_weight(p, h)


# ---------------------------------------------------------------------------
# reference estimators


def rmse_unbiased(h: float) -> float:
    """Relative MSE of (h - 2)/t: 2/(h - 4)."""
    h = _require_h(h, 4.0)
    return 2.0 / (h - 4.0)


def arb_mmse(h: float) -> float:
    """Absolute relative bias of (h - 4)/t: 2/(h - 2)."""
    h = _require_h(h, 2.0)
    return 2.0 / (h - 2.0)


def rmse_mmse(h: float) -> float:
    """Relative MSE of (h - 4)/t: also 2/(h - 2)."""
    h = _require_h(h, 4.0)
    return 2.0 / (h - 2.0)


# ---------------------------------------------------------------------------
# plain shrinkage estimator


def _bias_shrink_given_w(q: float, delta: float, w: float) -> float:
    return (q * delta - 1.0) * (1.0 - w)


def _rmse_shrink_given_w(h: float, q: float, delta: float, w: float) -> float:
    return (q * delta - 1.0) ** 2 * (1.0 - w) ** 2 + 2.0 * w * w / (h - 4.0)


def _pre_shrink_given_w(h: float, q: float, delta: float, w: float) -> float:
    denom = (h - 2.0) * (
        (q * delta - 1.0) ** 2 * (1.0 - w) ** 2 * (h - 4.0) + 2.0 * w * w
    )
    return 100.0 * 2.0 * (h - 4.0) / denom


def bias_shrink(h: float, p: float, q: float, delta: float) -> float:
    """Signed relative bias (q * delta - 1) * (1 - w)."""
    h = _require_h(h, 2.0)
    q = _require_positive("q", q)
    delta = _require_positive("delta", delta)
    return _bias_shrink_given_w(q, delta, shrink_weight(p, h))


def arb_shrink(h: float, p: float, q: float, delta: float) -> float:
    return abs(bias_shrink(h, p, q, delta))


def rmse_shrink(h: float, p: float, q: float, delta: float) -> float:
    """Relative MSE (q*delta - 1)^2 (1 - w)^2 + 2 w^2 / (h - 4)."""
    h = _require_h(h, 4.0)
    q = _require_positive("q", q)
    delta = _require_positive("delta", delta)
    return _rmse_shrink_given_w(h, q, delta, shrink_weight(p, h))


def pre_shrink(h: float, p: float, q: float, delta: float) -> float:
    """Efficiency relative to (h - 4)/t, in percent.

    Closed form; it agrees with 100 * rmse_mmse(h) / rmse_shrink(h, ...) to
    rounding, and tests keep both routes honest.
    """
    h = _require_h(h, 4.0)
    q = _require_positive("q", q)
    delta = _require_positive("delta", delta)
    return _pre_shrink_given_w(h, q, delta, shrink_weight(p, h))


# ---------------------------------------------------------------------------
# dominance ranges in the departure delta, for fixed p and q


def _nondegenerate_w(p: float, h: float) -> float:
    w = shrink_weight(p, h)
    if w >= 1.0:
        raise InadmissibleParameterError(
            f"w(p={p}) rounds to 1 at h={h}; the estimator degenerates to the "
            "unbiased one and has no dominance range"
        )
    return w


def _mse_range_given_w(h: float, q: float, w: float) -> DominanceRange:
    gain = (2.0 / (1.0 - w) ** 2) * (1.0 / (h - 2.0) - w * w / (h - 4.0))
    if gain < 0.0:
        return DominanceRange.empty()
    half = math.sqrt(gain) / q
    return DominanceRange(max(0.0, 1.0 / q - half), 1.0 / q + half)


def _arb_range_given_w(h: float, q: float, w: float) -> DominanceRange:
    half = 2.0 / ((h - 2.0) * (1.0 - w)) / q
    return DominanceRange(max(0.0, 1.0 / q - half), 1.0 / q + half)


def mse_dominance_range(h: float, p: float, q: float) -> DominanceRange:
    """Departure interval on which the shrinkage MSE beats the MMSE multiple.

    Solves rmse_shrink < rmse_mmse for delta. The interval is centered at 1/q
    with half-width sqrt(G)/q where G = (2/(1-w)^2) (1/(h-2) - w^2/(h-4));
    G < 0 means no delta qualifies. A negative lower endpoint clamps to 0
    since departures are positive.
    """
    h = _require_h(h, 4.0)
    q = _require_positive("q", q)
    return _mse_range_given_w(h, q, _nondegenerate_w(p, h))


def arb_dominance_range(h: float, p: float, q: float) -> DominanceRange:
    """Departure interval on which the shrinkage ARB beats 2/(h - 2).

    Solves |q*delta - 1|(1 - w) < 2/(h - 2): centered at 1/q with half-width
    c/q where c = 2 / ((h - 2)(1 - w)). Never empty; the lower endpoint
    clamps to 0 when c >= 1.
    """
    h = _require_h(h, 2.0)
    q = _require_positive("q", q)
    return _arb_range_given_w(h, q, _nondegenerate_w(p, h))


def best_range(h: float, p: float, q: float) -> DominanceRange:
    """Departures where the shrinkage estimator wins on both MSE and ARB."""
    return mse_dominance_range(h, p, q).intersect(arb_dominance_range(h, p, q))


# ---------------------------------------------------------------------------
# truncated shrinkage estimator

# The truncation thresholds t > (h-2)/beta1 and t < (h-2)/beta2 turn into
# incomplete-gamma arguments eta_i = (h/2 - 1)/delta_i once t is integrated
# out against its gamma density; the shape argument drops by one for each
# power of 1/t under the expectation.


def _bias_modified_given_w(
    h: float, q: float, delta1: float, delta2: float, w: float
) -> float:
    delta = 0.5 * (delta1 + delta2)
    eta1 = (h / 2.0 - 1.0) / delta1
    eta2 = (h / 2.0 - 1.0) / delta2
    i1_full = reg_lower_inc_gamma(eta1, h / 2.0)
    i2_full = reg_lower_inc_gamma(eta2, h / 2.0)
    i1_down = reg_lower_inc_gamma(eta1, h / 2.0 - 1.0)
    i2_down = reg_lower_inc_gamma(eta2, h / 2.0 - 1.0)
    return (
        delta1 * (1.0 - i1_full)
        + w * (i1_down - i2_down)
        + q * delta * (1.0 - w) * (i1_full - i2_full)
        + delta2 * i2_full
        - 1.0
    )


def _mse_modified_given_w(
    h: float, q: float, delta1: float, delta2: float, w: float
) -> float:
    delta = 0.5 * (delta1 + delta2)
    pull = q * delta * (1.0 - w)
    eta1 = (h / 2.0 - 1.0) / delta1
    eta2 = (h / 2.0 - 1.0) / delta2
    i1_full = reg_lower_inc_gamma(eta1, h / 2.0)
    i2_full = reg_lower_inc_gamma(eta2, h / 2.0)
    i1_down = reg_lower_inc_gamma(eta1, h / 2.0 - 1.0)
    i2_down = reg_lower_inc_gamma(eta2, h / 2.0 - 1.0)
    i1_dd = reg_lower_inc_gamma(eta1, h / 2.0 - 2.0)
    i2_dd = reg_lower_inc_gamma(eta2, h / 2.0 - 2.0)
    return (
        (delta1 - 1.0) ** 2
        - delta1 * (delta1 - 2.0) * i1_full
        + delta2 * (delta2 - 2.0) * i2_full
        + w * w * ((h - 2.0) / (h - 4.0)) * (i1_dd - i2_dd)
        + pull * (pull - 2.0) * (i1_full - i2_full)
        + 2.0 * w * (pull - 1.0) * (i1_down - i2_down)
    )


def _check_interval_args(q: float, delta1: float, delta2: float) -> tuple[float, float, float]:
    q = _require_positive("q", q)
    delta1 = _require_positive("delta1", delta1)
    delta2 = _require_positive("delta2", delta2)
    if delta2 < delta1:
        raise ValueError(f"need delta1 <= delta2, got {delta1!r} > {delta2!r}")
    return q, delta1, delta2


def bias_modified(
    h: float, p: float, q: float, delta1: float, delta2: float
) -> float:
    """Signed relative bias of the truncated shrinkage estimator."""
    h = _require_h(h, 2.0)
    q, delta1, delta2 = _check_interval_args(q, delta1, delta2)
    return _bias_modified_given_w(h, q, delta1, delta2, shrink_weight(p, h))


def mse_modified(
    h: float, p: float, q: float, delta1: float, delta2: float
) -> float:
    """Relative MSE of the truncated shrinkage estimator."""
    h = _require_h(h, 4.0)
    q, delta1, delta2 = _check_interval_args(q, delta1, delta2)
    return _mse_modified_given_w(h, q, delta1, delta2, shrink_weight(p, h))


def pre_modified(
    h: float, p: float, q: float, delta1: float, delta2: float
) -> float:
    """Efficiency of the truncated estimator relative to (h - 4)/t, percent."""
    return 100.0 * rmse_mmse(h) / mse_modified(h, p, q, delta1, delta2)


# ---------------------------------------------------------------------------
# report builders


def report_unbiased(h: float) -> RiskReport:
    return RiskReport(
        estimator_id="UNBIASED",
        bias_over_beta=0.0,
        arb=0.0,
        rmse=rmse_unbiased(h),
        pre_vs_mmse=100.0 * (h - 4.0) / (h - 2.0),
    )


def report_mmse(h: float) -> RiskReport:
    return RiskReport(
        estimator_id="MMSE",
        bias_over_beta=-arb_mmse(h),
        arb=arb_mmse(h),
        rmse=rmse_mmse(h),
        pre_vs_mmse=100.0,
    )


def report_shrink(h: float, p: float, q: float, delta: float) -> RiskReport:
    bias = bias_shrink(h, p, q, delta)
    return RiskReport(
        estimator_id="SHRINK_PQ",
        bias_over_beta=bias,
        arb=abs(bias),
        rmse=rmse_shrink(h, p, q, delta),
        pre_vs_mmse=pre_shrink(h, p, q, delta),
    )


def report_modified(
    h: float, p: float, q: float, delta1: float, delta2: float
) -> RiskReport:
    bias = bias_modified(h, p, q, delta1, delta2)
    return RiskReport(
        estimator_id="SHRINK_PQ_MODIFIED",
        bias_over_beta=bias,
        arb=abs(bias),
        rmse=mse_modified(h, p, q, delta1, delta2),
        pre_vs_mmse=pre_modified(h, p, q, delta1, delta2),
    )


def all_reports(
    h: float, cfg: ShrinkageConfig, interval: GuessInterval, beta: float
) -> tuple[RiskReport, RiskReport, RiskReport, RiskReport]:
    """Risk summaries of all four estimators at a hypothetical true shape."""
    dep = departures(interval, beta)
    return (
        report_unbiased(h),
        report_mmse(h),
        report_shrink(h, cfg.p, cfg.q, dep.delta),
        report_modified(h, cfg.p, cfg.q, dep.delta1, dep.delta2),
    )
