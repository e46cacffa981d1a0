"""Reference Bayesian sampling plan: the posterior-expected-cost decision
rule and its simulated Bayes risk.

Given (M, z) with z the total time on test, the posterior of lambda is
gamma(m + a, z + b), so accepting costs

    phi(m, z) = sum_l a_l Gamma(m+a+p_l) / (Gamma(m+a) (z+b)^p_l),

which is strictly decreasing in z.  The Bayes rule accepts iff
phi(m, z) <= Cr, i.e. iff z clears an m-dependent cutoff.  For quadratic
losses the cutoff is the algebraic root of a quadratic; for degree >= 5 no
algebraic root exists, and for fractional exponents no polynomial form at
all, so the cutoff here is found by monotone bisection on phi, which works
uniformly for every loss this package supports.  This is an engineering
reference for comparisons, not a closed-form risk.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .mc_oracle import MCConfig, MCEstimate, _draw_lambdas, _moments, _uniform_blocks, trial_statistics
from .model import AcceptanceCost, CostModel, HybridPlan, Type1Plan
from .specfun import GammaPrior, log_gamma

__all__ = [
    "BayesDecisionThreshold",
    "posterior_expected_cost",
    "bsp_threshold",
    "bsp_bayes_risk_mc",
]


@dataclass(frozen=True)
class BayesDecisionThreshold:
    """Decision rule at failure count m: accept iff z >= cutoff.

    ``root`` is the value of z + b solving phi = Cr (-inf when phi < Cr
    everywhere, +inf when phi > Cr everywhere); ``cutoff`` is the root
    clamped to [0, n tau] for 1 <= m <= r and to [0, inf) for m = 0.
    """

    m: int
    root: float
    cutoff: float

    def accepts(self, statistic: float) -> bool:
        """Apply the rule to an observed total time on test."""
        return statistic >= self.cutoff


def posterior_expected_cost(m: int, z: float, g: AcceptanceCost, prior: GammaPrior) -> float:
    """phi(m, z): posterior expectation of the acceptance cost after seeing
    m failures with total time on test z."""
    if z < 0:
        raise ValueError(f"total time on test must be >= 0, got {z}")
    a, b = prior.a, prior.b
    lg_ma = log_gamma(m + a)
    return math.fsum(
        c if p == 0.0
        else c * math.exp(log_gamma(m + a + p) - lg_ma - p * math.log(z + b))
        for c, p in g.terms
    )


def bsp_threshold(
    m: int,
    n: int,
    r: int | None,
    tau: float,
    costs: CostModel,
    g: AcceptanceCost,
    prior: GammaPrior,
) -> BayesDecisionThreshold:
    """Accept/reject cutoff on z at failure count m.

    ``r`` is None under plain Type-I censoring (m can then reach n).  When
    Cr <= a0 the acceptance cost exceeds the rejection cost for every z, the
    batch is never accepted, and the cutoff is the +inf sentinel.
    """
    cr = costs.c_reject
    a0 = g.constant
    if len(g.terms) == 1:
        # phi is constant a0: accept everywhere or nowhere
        root = -math.inf if a0 <= cr else math.inf
    elif cr <= a0:
        root = math.inf
    else:
        # phi decreases from +inf (as z + b -> 0) to a0 < Cr, so a unique
        # root exists in the shifted variable zb = z + b > 0 (it may sit
        # below b, i.e. at negative z, in which case the clamp rules apply)
        lg_ma = log_gamma(m + prior.a)

        def phi_shift(zb: float) -> float:
            return math.fsum(
                c if p == 0.0
                else c * math.exp(log_gamma(m + prior.a + p) - lg_ma - p * math.log(zb))
                for c, p in g.terms
            )

        hi_zb = 2.0 * prior.b
        while phi_shift(hi_zb) > cr:
            hi_zb *= 2.0
            if hi_zb > 1e300:
                raise RuntimeError("failed to bracket the posterior-cost root")
        lo_zb = 0.0
        while hi_zb - lo_zb > 1e-10:
            mid = 0.5 * (lo_zb + hi_zb)
            if phi_shift(mid) > cr:
                lo_zb = mid
            else:
                hi_zb = mid
        root = 0.5 * (lo_zb + hi_zb)  # this is z + b

    raw = root - prior.b if math.isfinite(root) else root
    if m == 0:
        cutoff = max(0.0, raw)
    else:
        cutoff = max(0.0, min(raw, n * tau))
    if not math.isfinite(root) and root > 0:
        cutoff = math.inf  # never accept, uncapped sentinel
    return BayesDecisionThreshold(m=m, root=root, cutoff=cutoff)


def bsp_bayes_risk_mc(
    n: int,
    r: int | None,
    tau: float,
    costs: CostModel,
    g: AcceptanceCost,
    prior: GammaPrior,
    trials: int,
    seed: int,
    cutoffs: Sequence[float] | None = None,
) -> MCEstimate:
    """Simulated Bayes risk of the BSP rule on the plan (n[, r], tau).

    ``cutoffs`` overrides the solved thresholds (index = failure count);
    forcing 0 accepts always, forcing +inf rejects always.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    m_top = n if r is None else r
    if cutoffs is None:
        cuts = np.array(
            [
                bsp_threshold(m, n, r, tau, costs, g, prior).cutoff
                for m in range(m_top + 1)
            ]
        )
    else:
        if len(cutoffs) != m_top + 1:
            raise ValueError(f"need {m_top + 1} cutoffs, got {len(cutoffs)}")
        cuts = np.asarray(cutoffs, dtype=float)

    plan = Type1Plan(n, tau, 0.0) if r is None else HybridPlan(n, r, tau, 0.0)
    mc = MCConfig(trials=trials, seed=seed)
    s1 = s2 = 0.0
    for _, u in _uniform_blocks(mc.seed, mc.trials, n + 1, mc.batch):
        lam = _draw_lambdas(u[:, 0], prior)
        if n >= 1:
            x = -np.log1p(-u[:, 1:]) / lam[:, None]
            m, z, dur = trial_statistics(plan, x)
        else:
            m = np.zeros(u.shape[0], dtype=int)
            z = np.zeros(u.shape[0])
            dur = np.zeros(u.shape[0])
        accept = z >= cuts[m]
        loss = (
            n * costs.c_sample
            - (n - m) * costs.salvage
            + dur * costs.c_time
            + np.where(accept, g(lam), costs.c_reject)
        )
        s1 += float(loss.sum())
        s2 += float((loss * loss).sum())
    return _moments(s1, s2, trials)
