"""Core domain model: plans, costs, censored outcomes, the rate estimator and
the accept/reject rule, plus the life-test simulator used by the Monte Carlo
oracle.

Conventions fixed here and relied on everywhere else:

* the estimator of the exponential rate is 0 when no failures are observed,
* the boundary ``lambda_hat == zeta`` REJECTS (the threshold rule puts the
  weak inequality on the reject action),
* ``zeta = 0`` therefore means "always reject" (the no-failure atom included)
  and ``zeta = inf`` means "always accept".
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .specfun import GammaPrior, gamma_pdf, prior_moment

__all__ = [
    "CostModel",
    "AcceptanceCost",
    "Type1Plan",
    "HybridPlan",
    "LifeTestOutcome",
    "EstimatorLaw",
    "Decision",
    "lambda_hat_type1",
    "lambda_hat_hybrid",
    "decide",
    "draw_life_test",
    "loss_of",
    "estimator_law_type1",
]


@dataclass(frozen=True)
class CostModel:
    """Sampling / time / rejection costs and the per-item salvage value.

    ``c_sample >= salvage`` is required (the search bounds additionally need
    the strict inequality and raise on equality themselves; equality occurs
    in published comparison tables, so it is allowed here).
    """

    c_sample: float
    c_time: float
    c_reject: float
    salvage: float = 0.0

    def __post_init__(self) -> None:
        for name in ("c_sample", "c_time", "c_reject", "salvage"):
            v = getattr(self, name)
            if not (v >= 0 and math.isfinite(v)):
                raise ValueError(f"cost {name} must be finite and >= 0, got {v}")
        if self.c_sample < self.salvage:
            raise ValueError(
                f"c_sample ({self.c_sample}) must be >= salvage ({self.salvage})"
            )


@dataclass(frozen=True)
class AcceptanceCost:
    """Cost g(lambda) of accepting a batch of quality lambda.

    Represented as a sum of (coefficient, exponent) power terms.  Exponents
    are strictly increasing, the first is the constant term (exponent 0), and
    coefficients are nonnegative so g is nondecreasing in lambda.  Quadratic,
    degree-k polynomial and fractional-power losses all fit this shape.
    """

    terms: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        if not self.terms:
            raise ValueError("acceptance cost needs at least the constant term")
        terms = tuple((float(c), float(p)) for c, p in self.terms)
        object.__setattr__(self, "terms", terms)
        if terms[0][1] != 0.0:
            raise ValueError("first acceptance-cost term must have exponent 0")
        exps = [p for _, p in terms]
        if any(e2 <= e1 for e1, e2 in zip(exps, exps[1:])):
            raise ValueError(f"exponents must be strictly increasing, got {exps}")
        if any(c < 0 for c, _ in terms):
            raise ValueError("acceptance-cost coefficients must be >= 0")

    @classmethod
    def polynomial(cls, coefficients: Sequence[float]) -> "AcceptanceCost":
        """g(lambda) = sum_l coefficients[l] * lambda^l."""
        return cls(tuple((float(c), float(l)) for l, c in enumerate(coefficients)))

    @property
    def constant(self) -> float:
        """The coefficient a0 of the constant term."""
        return self.terms[0][0]

    def __call__(self, lam):
        """Evaluate g pointwise; accepts scalars or arrays."""
        lam_arr = np.asarray(lam, dtype=float)
        out = np.zeros_like(lam_arr)
        for c, p in self.terms:
            if p == 0.0:
                out = out + c
            else:
                out = out + c * lam_arr**p
        if np.ndim(lam) == 0:
            return float(out)
        return out

    def expectation(self, prior: GammaPrior) -> float:
        """E g(lambda) under the prior: sum_l a_l * E(lambda^p_l)."""
        return math.fsum(c * prior_moment(prior, p) for c, p in self.terms)


@dataclass(frozen=True)
class Type1Plan:
    """Sampling plan (n, tau, zeta) under Type-I censoring."""

    n: int
    tau: float
    zeta: float

    def __post_init__(self) -> None:
        if not (isinstance(self.n, int) and self.n >= 0):
            raise ValueError(f"n must be a nonnegative integer, got {self.n}")
        if not self.tau >= 0:
            raise ValueError(f"tau must be >= 0, got {self.tau}")
        if not self.zeta >= 0:
            raise ValueError(f"zeta must be >= 0, got {self.zeta}")


@dataclass(frozen=True)
class HybridPlan:
    """Sampling plan (n, r, tau, zeta) under Type-I hybrid censoring."""

    n: int
    r: int
    tau: float
    zeta: float

    def __post_init__(self) -> None:
        if not (isinstance(self.n, int) and self.n >= 0):
            raise ValueError(f"n must be a nonnegative integer, got {self.n}")
        if not isinstance(self.r, int):
            raise ValueError(f"r must be an integer, got {self.r}")
        if self.n >= 1 and not 1 <= self.r <= self.n:
            raise ValueError(f"need 1 <= r <= n, got r={self.r}, n={self.n}")
        if self.n == 0 and self.r != 0:
            raise ValueError("n = 0 requires r = 0")
        if not self.tau >= 0:
            raise ValueError(f"tau must be >= 0, got {self.tau}")
        if not self.zeta >= 0:
            raise ValueError(f"zeta must be >= 0, got {self.zeta}")


@dataclass(frozen=True)
class LifeTestOutcome:
    """Observed failures of one censored life test.

    ``duration`` is the realized test length: tau under Type-I censoring,
    min(X_(r), tau) under hybrid censoring.
    """

    ordered_failures: tuple[float, ...]
    m: int
    duration: float

    def __post_init__(self) -> None:
        if self.m != len(self.ordered_failures):
            raise ValueError("m must equal the number of recorded failures")
        if any(t2 < t1 for t1, t2 in zip(self.ordered_failures, self.ordered_failures[1:])):
            raise ValueError("failure times must be sorted")
        if any(t > self.duration for t in self.ordered_failures):
            raise ValueError("failure times cannot exceed the test duration")

    @property
    def total_time_on_test(self) -> float:
        return math.fsum(self.ordered_failures)


class Decision(enum.Enum):
    ACCEPT = "accept"
    REJECT = "reject"


@dataclass(frozen=True)
class EstimatorLaw:
    """Mixed distribution of the rate estimator given lambda: an atom at 0
    (no failures) plus an absolutely continuous part supported above
    1/(n tau)."""

    point_mass_at_zero: float
    continuous_density: Callable[[float], float] = field(repr=False)
    lower_support: float


def lambda_hat_type1(outcome: LifeTestOutcome, n: int, tau: float) -> float:
    """Rate estimate under Type-I censoring: 0 if no failures, else
    M / (sum of failure times + (n - M) tau)."""
    m = outcome.m
    if m > n:
        raise ValueError(f"outcome has {m} failures but only {n} items on test")
    if m == 0:
        return 0.0
    return m / (outcome.total_time_on_test + (n - m) * tau)


def lambda_hat_hybrid(outcome: LifeTestOutcome, n: int, r: int, tau: float) -> float:
    """Rate estimate under Type-I hybrid censoring.

    Matches the Type-I estimator while fewer than r failures are seen; at the
    r-th failure the unfailed items accrue exposure only up to X_(r).
    """
    m = outcome.m
    if m > r:
        raise ValueError(f"outcome has {m} failures but the failure budget is {r}")
    if m == 0:
        return 0.0
    if m < r:
        return m / (outcome.total_time_on_test + (n - m) * tau)
    x_r = outcome.ordered_failures[-1]
    return r / (outcome.total_time_on_test + (n - r) * x_r)


def decide(estimate: float, zeta: float) -> Decision:
    """Accept iff the estimate is strictly below the threshold."""
    return Decision.ACCEPT if estimate < zeta else Decision.REJECT


def draw_life_test(
    lam: float,
    scheme: Type1Plan | HybridPlan,
    rng: np.random.Generator,
) -> LifeTestOutcome:
    """Simulate one censored life test with i.i.d. exponential(lam) lifetimes.

    Lifetimes come from the inverse CDF applied to ``rng``'s uniforms
    (exactly n draws), so a fixed generator state reproduces the outcome.
    The caller owns ``rng``; streams must not be shared across threads.
    """
    if not lam > 0:
        raise ValueError(f"lambda must be positive, got {lam}")
    n = scheme.n
    tau = scheme.tau
    if n == 0:
        return LifeTestOutcome((), 0, min(tau, 0.0))
    x = -np.log1p(-rng.random(n)) / lam
    x.sort()
    if isinstance(scheme, HybridPlan):
        r = scheme.r
        if x[r - 1] <= tau:
            dur = float(x[r - 1])
            fails = tuple(float(v) for v in x[:r])
            return LifeTestOutcome(fails, r, dur)
    m = int(np.searchsorted(x, tau, side="right"))
    return LifeTestOutcome(tuple(float(v) for v in x[:m]), m, tau)


def loss_of(
    outcome: LifeTestOutcome,
    decision: Decision,
    lam: float,
    costs: CostModel,
    g: AcceptanceCost,
    *,
    n: int,
) -> float:
    """Realized loss: n*Cs - (n-M)*rs + duration*Ctau plus g(lambda) on
    acceptance or Cr on rejection.  ``n`` is the number of items placed on
    test (the outcome records only the failures)."""
    tail = g(lam) if decision is Decision.ACCEPT else costs.c_reject
    return (
        n * costs.c_sample
        - (n - outcome.m) * costs.salvage
        + outcome.duration * costs.c_time
        + tail
    )


def estimator_law_type1(n: int, tau: float, lam: float) -> EstimatorLaw:
    """Distribution of the Type-I estimator given lambda.

    The atom at zero has mass exp(-n lam tau); conditionally on at least one
    failure the estimator has a density on (1/(n tau), inf) given by the
    alternating mixture of shifted reciprocal-gamma kernels.
    """
    if n < 1 or not tau > 0 or not lam > 0:
        raise ValueError("estimator_law_type1 requires n >= 1, tau > 0, lambda > 0")
    p0 = math.exp(-n * lam * tau)
    lower = 1.0 / (n * tau)

    weights = []
    for m in range(1, n + 1):
        for j in range(m + 1):
            s = n - m + j
            w = (-1.0) ** j * math.comb(n, m) * math.comb(m, j) * math.exp(-lam * s * tau)
            weights.append((m, s * tau / m, w))

    def density(y: float) -> float:
        if y <= lower:
            return 0.0
        acc = []
        inv = 1.0 / y
        for m, shift, w in weights:
            arg = inv - shift
            if arg <= 0.0:
                continue
            acc.append(w * gamma_pdf(arg, m, m * lam) / (y * y))
        return math.fsum(acc) / (1.0 - p0)

    return EstimatorLaw(point_mass_at_zero=p0, continuous_density=density, lower_support=lower)
