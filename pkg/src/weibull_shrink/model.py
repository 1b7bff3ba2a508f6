"""Value types shared across the package.

Everything here is a small frozen dataclass with eager validation: a constructed
object is always internally consistent, so the numerical modules never re-check
their inputs. All types serialize to plain dicts (``to_dict``/``from_dict``) for
the CLI's JSON interchange.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple


class InadmissibleParameterError(ValueError):
    """A shrinkage exponent p violates an admissibility bound for the given h."""


class MissingConstantError(LookupError):
    """No built-in degrees-of-freedom value is available for this (n, m)."""


#: Degrees of freedom h of the pivotal statistic t for n = 20, keyed by (n, m).
#: These are external calibration data consumed as-is (they come from published
#: simulations of the censored-sample scale estimator, not from this package).
BUILTIN_H: dict[tuple[int, int], float] = {
    (20, 6): 10.8519,
    (20, 8): 15.6740,
    (20, 10): 20.8442,
    (20, 12): 26.4026,
}


def lookup_h(n: int, m: int) -> float:
    """Return the built-in h for (n, m), raising MissingConstantError if unknown."""
    try:
        return BUILTIN_H[(n, m)]
    except KeyError:
        raise MissingConstantError(
            f"no built-in degrees of freedom for n={n}, m={m}; "
            "supply h explicitly or estimate it by simulation"
        ) from None


def _require_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return value


def _require_positive(name: str, value: float) -> float:
    value = _require_finite(name, value)
    if value <= 0.0:
        raise ValueError(f"{name} must be > 0, got {value!r}")
    return value


@dataclass(frozen=True)
class WeibullParams:
    """Scale alpha and shape beta of a two-parameter Weibull law."""

    alpha: float
    beta: float

    def __post_init__(self) -> None:
        _require_positive("alpha", self.alpha)
        _require_positive("beta", self.beta)

    def to_dict(self) -> dict:
        return {"alpha": self.alpha, "beta": self.beta}

    @classmethod
    def from_dict(cls, d: dict) -> "WeibullParams":
        return cls(alpha=float(d["alpha"]), beta=float(d["beta"]))


@dataclass(frozen=True)
class CensoredSample:
    """The m smallest order statistics out of n independent lifetimes.

    ``observations`` must be positive and nondecreasing; m = len(observations).
    """

    n: int
    observations: tuple[float, ...]

    def __post_init__(self) -> None:
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        obs = tuple(float(x) for x in self.observations)
        if len(obs) < 1:
            raise ValueError("observations must be nonempty")
        if len(obs) > self.n:
            raise ValueError(
                f"sample has {len(obs)} observations but n={self.n}"
            )
        prev = 0.0
        for i, x in enumerate(obs):
            if not math.isfinite(x) or x <= 0.0:
                raise ValueError(f"observation {i + 1} must be finite and > 0, got {x!r}")
            if x < prev:
                raise ValueError(
                    f"observations must be nondecreasing; value {x!r} at position "
                    f"{i + 1} is below its predecessor"
                )
            prev = x
        object.__setattr__(self, "observations", obs)

    @property
    def m(self) -> int:
        return len(self.observations)

    def to_dict(self) -> dict:
        return {"n": self.n, "observations": list(self.observations)}

    @classmethod
    def from_dict(cls, d: dict) -> "CensoredSample":
        return cls(n=int(d["n"]), observations=tuple(d["observations"]))


@dataclass(frozen=True)
class PivotalContext:
    """Censoring design (n, m), degrees of freedom h, and observed pivot t.

    h must exceed 4: the pivot's second inverse moment (and with it every MSE
    in the risk module) is finite only then.
    """

    n: int
    m: int
    h: float
    t: float

    def __post_init__(self) -> None:
        if int(self.m) != self.m or self.m < 2:
            raise ValueError(f"m must be an integer >= 2, got {self.m!r}")
        if int(self.n) != self.n or self.n < self.m:
            raise ValueError(f"n must be an integer >= m, got n={self.n!r}, m={self.m!r}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "m", int(self.m))
        if _require_finite("h", self.h) <= 4.0:
            raise ValueError(f"h must be > 4, got {self.h!r}")
        _require_positive("t", self.t)

    def to_dict(self) -> dict:
        return {"n": self.n, "m": self.m, "h": self.h, "t": self.t}

    @classmethod
    def from_dict(cls, d: dict) -> "PivotalContext":
        return cls(n=int(d["n"]), m=int(d["m"]), h=float(d["h"]), t=float(d["t"]))


@dataclass(frozen=True)
class GuessInterval:
    """Prior guess interval (beta1, beta2) for the shape parameter, beta1 <= beta2."""

    beta1: float
    beta2: float

    def __post_init__(self) -> None:
        _require_positive("beta1", self.beta1)
        _require_positive("beta2", self.beta2)
        if self.beta1 > self.beta2:
            raise ValueError(
                f"beta1 must not exceed beta2, got ({self.beta1!r}, {self.beta2!r})"
            )

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.beta1 + self.beta2)

    def to_dict(self) -> dict:
        return {"beta1": self.beta1, "beta2": self.beta2}

    @classmethod
    def from_dict(cls, d: dict) -> "GuessInterval":
        return cls(beta1=float(d["beta1"]), beta2=float(d["beta2"]))


@dataclass(frozen=True)
class ShrinkageConfig:
    """Shrinkage exponent p (nonzero) and pull weight q in (0, 1]."""

    p: float
    q: float

    def __post_init__(self) -> None:
        _require_finite("p", self.p)
        if self.p == 0.0:
            raise InadmissibleParameterError(
                "p must be nonzero (p = 0 degenerates the weight)"
            )
        q = _require_positive("q", self.q)
        if q > 1.0:
            raise ValueError(f"q must lie in (0, 1], got {q!r}")

    def to_dict(self) -> dict:
        return {"p": self.p, "q": self.q}

    @classmethod
    def from_dict(cls, d: dict) -> "ShrinkageConfig":
        return cls(p=float(d["p"]), q=float(d["q"]))


#: Identifiers for the estimators a RiskReport can describe.
ESTIMATOR_IDS = ("UNBIASED", "MMSE", "SHRINK_PQ", "SHRINK_PQ_MODIFIED")


@dataclass(frozen=True)
class RiskReport:
    """Scale-free risk summary of one estimator.

    bias_over_beta: signed bias divided by the true shape.
    arb:            absolute relative bias.
    rmse:           relative mean squared error, E(est - beta)^2 / beta^2.
    pre_vs_mmse:    percent relative efficiency against the minimum-MSE
                    multiple of the pivot (100 = same MSE).
    """

    estimator_id: str
    bias_over_beta: float
    arb: float
    rmse: float
    pre_vs_mmse: float

    def __post_init__(self) -> None:
        if self.estimator_id not in ESTIMATOR_IDS:
            raise ValueError(
                f"estimator_id must be one of {ESTIMATOR_IDS}, got {self.estimator_id!r}"
            )
        bias = _require_finite("bias_over_beta", self.bias_over_beta)
        arb = _require_finite("arb", self.arb)
        # arb is not free: it must agree with |bias_over_beta| up to rounding.
        if abs(arb - abs(bias)) > 1e-12 * (1.0 + abs(bias)):
            raise ValueError(
                f"arb must equal |bias_over_beta|, got arb={self.arb!r} "
                f"with bias_over_beta={self.bias_over_beta!r}"
            )
        if _require_finite("rmse", self.rmse) < 0.0:
            raise ValueError(f"rmse must be >= 0, got {self.rmse!r}")
        if _require_finite("pre_vs_mmse", self.pre_vs_mmse) < 0.0:
            raise ValueError(f"pre_vs_mmse must be >= 0, got {self.pre_vs_mmse!r}")

    def to_dict(self) -> dict:
        return {
            "estimator_id": self.estimator_id,
            "bias_over_beta": self.bias_over_beta,
            "arb": self.arb,
            "rmse": self.rmse,
            "pre_vs_mmse": self.pre_vs_mmse,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "RiskReport":
        return cls(
            estimator_id=str(d["estimator_id"]),
            bias_over_beta=float(d["bias_over_beta"]),
            arb=float(d["arb"]),
            rmse=float(d["rmse"]),
            pre_vs_mmse=float(d["pre_vs_mmse"]),
        )


class Departures(NamedTuple):
    """Guess interval endpoints and midpoint measured in units of the true shape."""

    delta1: float
    delta2: float
    delta: float


def departures(interval: GuessInterval, beta: float) -> Departures:
    """Departure ratios (beta1/beta, beta2/beta, midpoint/beta).

    Scale-free: scaling the interval and beta by a common factor leaves the
    result unchanged (up to roundoff).
    """
    beta = _require_positive("beta", beta)
    return Departures(
        delta1=interval.beta1 / beta,
        delta2=interval.beta2 / beta,
        delta=interval.midpoint / beta,
    )
