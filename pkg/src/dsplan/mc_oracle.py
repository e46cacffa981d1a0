"""Monte Carlo oracle for every closed-form quantity.

Randomness is counter-based: trial i reads a fixed window of the Philox
stream (padded to whole counter blocks), so any partitioning of trials into
batches, or any worker layout, reproduces bit-identical per-trial values for
a given seed.  The reduction accumulates batch sums in trial order.

The lambda draw uses the inverse gamma CDF and lifetimes the inverse
exponential CDF, one uniform each, keeping the per-trial word budget fixed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special

from .model import AcceptanceCost, CostModel, HybridPlan, Type1Plan
from .specfun import GammaPrior

__all__ = [
    "MCConfig",
    "MCEstimate",
    "simulate_dsp_risk",
    "simulate_tail_probability",
    "simulate_moments",
]


@dataclass(frozen=True)
class MCConfig:
    """Trial count, stream seed and processing batch size.

    ``batch`` only controls how many trials are materialized at once; the
    per-trial random numbers do not depend on it.
    """

    trials: int = 1_000_000
    seed: int = 20240801
    batch: int = 65_536

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.batch < 1:
            raise ValueError("batch must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")


@dataclass(frozen=True)
class MCEstimate:
    mean: float
    std_error: float
    trials: int

    def interval(self, sigmas: float = 3.0) -> tuple[float, float]:
        h = sigmas * self.std_error
        return self.mean - h, self.mean + h


def _uniform_blocks(seed: int, trials: int, words: int, batch: int):
    """Yield (start, U) with U of shape (count, words); trial start+i uses
    row i.  Rows are invariant to the batch size: trial i always reads
    stream words [i*w4, i*w4 + words) with w4 = words padded to 4 (the
    Philox counter advances in 4-word blocks)."""
    w4 = ((max(words, 1) + 3) // 4) * 4
    start = 0
    while start < trials:
        count = min(batch, trials - start)
        bitgen = np.random.Philox(key=seed)
        bitgen.advance(start * w4 // 4)
        u = np.random.Generator(bitgen).random((count, w4))
        yield start, u[:, :words] if words >= 1 else u[:, :0]
        start += count


def _moments(sum1: float, sum2: float, n: int) -> MCEstimate:
    mean = sum1 / n
    if n > 1:
        var = max(0.0, (sum2 - sum1 * sum1 / n) / (n - 1))
    else:
        var = 0.0
    return MCEstimate(mean=mean, std_error=math.sqrt(var / n), trials=n)


def _draw_lambdas(u: np.ndarray, prior: GammaPrior) -> np.ndarray:
    return special.gammaincinv(prior.a, u) / prior.b


def _censor_type1(x: np.ndarray, n: int, tau: float):
    """Per-trial (M, sum of observed failures, duration) under Type-I."""
    failed = x <= tau
    m = failed.sum(axis=1)
    total = np.where(failed, x, 0.0).sum(axis=1)
    dur = np.full(x.shape[0], tau)
    return m, total + (n - m) * tau, dur


def _censor_hybrid(x: np.ndarray, n: int, r: int, tau: float):
    """Per-trial (M, estimator denominator, duration) under hybrid
    censoring; the denominator is the total time on test z."""
    xs = np.sort(x, axis=1)
    x_r = xs[:, r - 1]
    hit = x_r <= tau
    m_i = (xs <= tau).sum(axis=1)
    m = np.where(hit, r, m_i)
    z_tau = np.where(xs <= tau, xs, 0.0).sum(axis=1) + (n - m_i) * tau
    z_hit = xs[:, :r].sum(axis=1) + (n - r) * x_r
    z = np.where(hit, z_hit, z_tau)
    dur = np.where(hit, x_r, tau)
    return m, z, dur


def trial_statistics(plan, u: np.ndarray):
    """(M, total time on test z, duration) for lifetimes derived from the
    uniform block ``u``; lambda must already be folded in by the caller."""
    n = plan.n
    if isinstance(plan, HybridPlan):
        return _censor_hybrid(u, n, plan.r, plan.tau)
    return _censor_type1(u, n, plan.tau)


def simulate_dsp_risk(
    plan: Type1Plan | HybridPlan,
    costs: CostModel,
    g: AcceptanceCost,
    prior: GammaPrior,
    mc: MCConfig,
) -> MCEstimate:
    """Brute-force Bayes risk: draw lambda from the prior, run the censored
    life test, apply the threshold rule, average the realized loss."""
    n = plan.n
    words = n + 1
    s1 = s2 = 0.0
    for _, u in _uniform_blocks(mc.seed, mc.trials, words, mc.batch):
        lam = _draw_lambdas(u[:, 0], prior)
        if n >= 1:
            x = -np.log1p(-u[:, 1:]) / lam[:, None]
            m, z, dur = trial_statistics(plan, x)
            lam_hat = np.where(m > 0, m / z, 0.0)
        else:
            m = np.zeros(u.shape[0])
            dur = np.zeros(u.shape[0])
            lam_hat = np.zeros(u.shape[0])
        accept = lam_hat < plan.zeta
        loss = (
            n * costs.c_sample
            - (n - m) * costs.salvage
            + dur * costs.c_time
            + np.where(accept, g(lam), costs.c_reject)
        )
        s1 += float(loss.sum())
        s2 += float((loss * loss).sum())
    return _moments(s1, s2, mc.trials)


def simulate_tail_probability(
    lam: float,
    plan: Type1Plan | HybridPlan,
    mc: MCConfig,
) -> MCEstimate:
    """Empirical P(lambda_hat >= zeta | lambda)."""
    if not lam > 0:
        raise ValueError("lambda must be positive")
    n = plan.n
    if n == 0:
        p = 1.0 if plan.zeta == 0.0 else 0.0
        return MCEstimate(mean=p, std_error=0.0, trials=mc.trials)
    s1 = s2 = 0.0
    for _, u in _uniform_blocks(mc.seed, mc.trials, n, mc.batch):
        x = -np.log1p(-u) / lam
        m, z, _ = trial_statistics(plan, x)
        lam_hat = np.where(m > 0, m / z, 0.0)
        rej = (lam_hat >= plan.zeta).astype(float)
        s1 += float(rej.sum())
        s2 += float(rej.sum())  # indicator: squares equal values
    return _moments(s1, s2, mc.trials)


def simulate_moments(
    scheme: Type1Plan | HybridPlan,
    prior: GammaPrior,
    mc: MCConfig,
) -> tuple[MCEstimate, MCEstimate]:
    """Empirical (E(M), E(tau*)) under the prior."""
    n = scheme.n
    if n == 0 or scheme.tau == 0.0:
        zero = MCEstimate(mean=0.0, std_error=0.0, trials=mc.trials)
        return zero, zero
    s1m = s2m = s1d = s2d = 0.0
    for _, u in _uniform_blocks(mc.seed, mc.trials, n + 1, mc.batch):
        lam = _draw_lambdas(u[:, 0], prior)
        x = -np.log1p(-u[:, 1:]) / lam[:, None]
        m, _, dur = trial_statistics(scheme, x)
        m = m.astype(float)
        s1m += float(m.sum())
        s2m += float((m * m).sum())
        s1d += float(dur.sum())
        s2d += float((dur * dur).sum())
    return _moments(s1m, s2m, mc.trials), _moments(s1d, s2d, mc.trials)
