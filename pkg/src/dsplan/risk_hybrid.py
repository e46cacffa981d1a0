"""Closed-form Bayes risk of the threshold plan under Type-I hybrid
censoring, together with the expected failure count E(M) and the expected
test duration E(tau*).

The threshold part of the risk is built from one kernel,

    R(p, j, m) = Gamma(a+p) / C_jm^(a+p) * I_{S*_jm}(m, a+p),

assembled in three groups: the mixture over m = 1..r-1 (fewer failures than
the budget), the exact-budget member with zero time offset (j = r-n, m = r),
and the order-statistic correction sum over k = 1..r.  The m-sum stops at
r - 1, matching the support of the estimator's conditional density; with
r = n the three groups collapse exactly onto the Type-I double sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special

from .model import AcceptanceCost, CostModel, HybridPlan
from .risk_type1 import (
    RiskBreakdown,
    StabilityCapError,
    _check_cap,
    _zeta_effective,
    marginal_q,
    threshold_weights,
)
from .specfun import GammaPrior

__all__ = [
    "HybridRiskTerm",
    "term_R",
    "expected_failures_hybrid",
    "expected_duration_hybrid",
    "tail_probability_hybrid",
    "bayes_risk_hybrid",
]


@dataclass(frozen=True)
class HybridRiskTerm:
    """One evaluated R kernel: indices, exponent shift and value."""

    exponent_shift: float
    j: int
    m: int
    value: float


def term_R(
    p: float,
    j: int,
    m: int,
    n: int,
    tau: float,
    zeta: float,
    prior: GammaPrior,
) -> float:
    """The tail-integral kernel R(p, j, m) for a plan geometry (n, tau).

    ``j`` may be negative (the zero-offset member uses j = r - n).  The beta
    argument is built from 1/zeta* - tau_jm clamped at zero, with
    zeta* = max(1/(n tau), zeta); an empty integration range gives exactly 0.
    """
    if m < 1:
        raise ValueError(f"term_R requires m >= 1, got {m}")
    s = n - m + j
    if s < 0 or tau < 0:
        raise ValueError("term_R requires tau >= 0 and n - m + j >= 0")
    a, b = prior.a, prior.b
    beta = a + p
    zeff = _zeta_effective(n, tau, zeta)
    c_jm = b + s * tau
    w = max(0.0, 1.0 / zeff - s * tau / m)
    cstar = m * w / c_jm
    sstar = cstar / (1.0 + cstar)
    return math.exp(special.gammaln(beta) - beta * math.log(c_jm)) * float(
        special.betainc(m, beta, sstar)
    )


def _pm_weights(n: int, r: int) -> list[int]:
    """Integer weights over s of tau * P(M <= r - 1): the plateau part of
    E(tau*).  P(M = k) expands into alternating binomials of the survival
    factors q_s = E exp(-lambda s tau)."""
    weights = [0] * (n + 1)
    for k in range(r):
        cnk = math.comb(n, k)
        for j in range(k + 1):
            s = n - k + j
            weights[s] += (-1) ** j * cnk * math.comb(k, j)
    return weights


def expected_failures_hybrid(n: int, r: int, tau: float, prior: GammaPrior) -> float:
    """E(M) = E min(failures by tau, r), via the displayed two-part sum.

    Integer binomial weights are aggregated exactly per survival factor
    before mixing, as in the Type-I E(M).
    """
    _check_cap(n)
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    if tau == 0.0:
        return 0.0
    weights = [0] * (n + 1)
    for m in range(1, r):
        cm = math.comb(n, m)
        for j in range(m + 1):
            weights[n - m + j] += (-1) ** j * m * cm * math.comb(m, j)
    for k in range(r, n + 1):
        ck = math.comb(n, k)
        for j in range(k + 1):
            weights[n - k + j] += (-1) ** j * r * ck * math.comb(k, j)
    return math.fsum(w * marginal_q(s, tau, prior) for s, w in enumerate(weights) if w)


def expected_duration_hybrid(n: int, r: int, tau: float, prior: GammaPrior) -> float:
    """E(tau*) = E min(X_(r), tau) under the prior-marginal lifetime law.

    Combines the truncated expectation of the r-th order statistic with the
    plateau term tau * P(X_(r) > tau).  The 1/(a-1) factors have a removable
    singularity at a = 1; each j-term is evaluated through expm1 (and its
    logarithmic limit at a = 1 exactly), so all a > 0 are supported.
    """
    _check_cap(n)
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    if tau == 0.0:
        return 0.0
    a, b = prior.a, prior.b
    parts = []
    for j in range(r):
        d = n - j
        big = b + d * tau
        if a == 1.0:
            w = math.log(big / b)
        else:
            w = -math.expm1((a - 1.0) * math.log(b / big)) / (a - 1.0)
        t_j = b * w / d**2 - tau * (b / big) ** a / d
        parts.append(math.comb(r - 1, j) * (-1.0) ** (r - 1 - j) * t_j)
    first = r * math.comb(n, r) * math.fsum(parts)
    plateau = tau * math.fsum(
        w * marginal_q(s, tau, prior) for s, w in enumerate(_pm_weights(n, r)) if w
    )
    return first + plateau


def tail_probability_hybrid(n: int, r: int, tau: float, zeta: float, lam: float) -> float:
    """P(lambda_hat >= zeta | lambda) under Type-I hybrid censoring.

    Three-part mixture: the m < r members, the exact-budget gamma term, and
    the order-statistic correction sum, each integrating to a gamma CDF.
    The no-failure atom is included only at zeta = 0.
    """
    if not (n >= r >= 1) or not tau > 0 or not lam > 0:
        raise ValueError("tail_probability_hybrid requires n >= r >= 1, tau > 0, lambda > 0")
    if zeta == 0.0:
        return 1.0
    zeff = _zeta_effective(n, tau, zeta)
    inv = 1.0 / zeff
    acc = []
    for m in range(1, r):
        for j in range(m + 1):
            s = n - m + j
            w = max(0.0, inv - s * tau / m)
            if w <= 0.0:
                continue
            acc.append(
                (-1.0) ** j
                * math.comb(n, m)
                * math.comb(m, j)
                * math.exp(-lam * s * tau)
                * special.gammainc(m, m * lam * w)
            )
    acc.append(float(special.gammainc(r, r * lam * inv)))
    cnr = math.comb(n, r)
    for k in range(1, r + 1):
        s = n - r + k
        w = max(0.0, inv - s * tau / r)
        if w <= 0.0:
            continue
        acc.append(
            r
            * cnr
            * math.comb(r - 1, k - 1)
            * (-1.0) ** k
            * math.exp(-lam * s * tau)
            / s
            * special.gammainc(r, r * lam * w)
        )
    return float(min(1.0, max(0.0, math.fsum(acc))))


def _threshold_geometry(n: int, r: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Flattened (m, s, signed weight) arrays of the three threshold groups."""
    ms: list[int] = []
    ss: list[int] = []
    ws: list[float] = []
    for m in range(1, r):
        cm = math.comb(n, m)
        for j in range(m + 1):
            ms.append(m)
            ss.append(n - m + j)
            ws.append((-1.0) ** j * cm * math.comb(m, j))
    ms.append(r)
    ss.append(0)
    ws.append(1.0)
    cnr = math.comb(n, r)
    for k in range(1, r + 1):
        ms.append(r)
        ss.append(n - r + k)
        ws.append(cnr * math.comb(r - 1, k - 1) * (-1.0) ** k * r / (n - r + k))
    return np.array(ms, dtype=float), np.array(ss, dtype=float), np.array(ws)


def bayes_risk_hybrid(
    plan: HybridPlan,
    costs: CostModel,
    g: AcceptanceCost,
    prior: GammaPrior,
) -> RiskBreakdown:
    """Exact Bayes risk of a hybrid plan for any (coefficient, exponent) loss."""
    n, r, tau, zeta = plan.n, plan.r, plan.tau, plan.zeta
    _check_cap(n)
    cl = threshold_weights(costs, g)
    acceptance = g.expectation(prior)
    a, b = prior.a, prior.b

    if n == 0 or tau == 0.0:
        threshold = (costs.c_reject - acceptance) if zeta == 0.0 else 0.0
        sampling = n * (costs.c_sample - costs.salvage)
        total = sampling + 0.0 + 0.0 + acceptance + threshold
        return RiskBreakdown(sampling, 0.0, 0.0, acceptance, threshold, total, cl)

    em = expected_failures_hybrid(n, r, tau, prior)
    etau = expected_duration_hybrid(n, r, tau, prior)
    sampling = n * (costs.c_sample - costs.salvage)
    salvage = em * costs.salvage
    time_term = etau * costs.c_time

    ms, ss, ws = _threshold_geometry(n, r)
    zeff = _zeta_effective(n, tau, zeta)
    c_jm = b + ss * tau
    w_arg = np.maximum(0.0, 1.0 / zeff - ss * tau / ms)
    cstar = ms * w_arg / c_jm
    sstar = cstar / (1.0 + cstar)
    log_cjm = np.log(c_jm)

    log_prior_norm = a * math.log(b) - special.gammaln(a)
    blocks = []
    for c_l, (_, p_l) in zip(cl, g.terms):
        beta = a + p_l
        atom = 0.0
        if zeta == 0.0:
            atom = math.exp(
                log_prior_norm + special.gammaln(beta) - beta * math.log(b + n * tau)
            )
        pref = np.exp(log_prior_norm + special.gammaln(beta) - beta * log_cjm)
        inc = special.betainc(ms, beta, sstar)
        blocks.append(c_l * (atom + math.fsum(ws * pref * inc)))
    threshold = math.fsum(blocks)

    total = sampling + salvage + time_term + acceptance + threshold
    return RiskBreakdown(sampling, salvage, time_term, acceptance, threshold, total, cl)
