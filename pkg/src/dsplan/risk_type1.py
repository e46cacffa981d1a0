"""Closed-form Bayes risk of the threshold plan under Type-I censoring.

The risk decomposes into fixed sampling/time costs, the prior expectation of
the acceptance cost, and a threshold term: a double alternating binomial sum
of incomplete-beta tail integrals, one block per acceptance-cost exponent.
The same structure serves quadratic, higher-degree polynomial and
fractional-power losses, since each term only consumes a + p_l as a real
number.

Alternating binomial sums limit the usable sample size: beyond
``MAX_SAMPLE_SIZE`` items the cancellation exceeds double precision and a
:class:`StabilityCapError` is raised instead of returning degraded values
(the published tables never exceed n = 14).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special

from .model import AcceptanceCost, CostModel, Type1Plan
from .specfun import GammaPrior

__all__ = [
    "MAX_SAMPLE_SIZE",
    "StabilityCapError",
    "MixtureTerm",
    "RiskBreakdown",
    "mixture_terms",
    "expected_failures_type1",
    "tail_probability_type1",
    "bayes_risk_type1",
]

# Alternating sums carry binomial weights up to C(n, n/2)*C(n/2, n/4); at
# n = 30 the cancellation still leaves ~9 significant digits, beyond that
# results silently degrade.
MAX_SAMPLE_SIZE = 30


class StabilityCapError(ValueError):
    """Raised when a plan's sample size exceeds the numerical stability cap."""


def _check_cap(n: int) -> None:
    if n > MAX_SAMPLE_SIZE:
        raise StabilityCapError(
            f"sample size {n} exceeds the stability cap {MAX_SAMPLE_SIZE} "
            "for the alternating-sum risk formulas"
        )


@dataclass(frozen=True)
class MixtureTerm:
    """One (j, m) member of the alternating mixture behind the risk formula.

    ``a_jm`` is the signed binomial weight (-1)^j C(n,m) C(m,j); ``tau_jm``
    the shifted time (n-m+j) tau / m; ``c_jm = b + m tau_jm`` the rate
    offset; ``cstar_jm`` and ``sstar_jm`` the scaled upper limit and the beta
    argument built from the effective threshold.
    """

    m: int
    j: int
    tau_jm: float
    a_jm: float
    c_jm: float
    cstar_jm: float
    sstar_jm: float


@dataclass(frozen=True)
class RiskBreakdown:
    """Itemized Bayes risk; ``total`` is the sum of the five terms."""

    sampling_term: float
    salvage_term: float
    time_term: float
    acceptance_term: float
    threshold_term: float
    total: float
    per_l_weights: tuple[float, ...]


def threshold_weights(costs: CostModel, g: AcceptanceCost) -> tuple[float, ...]:
    """The C_l weights: Cr - a0 for the constant term, -a_l afterwards."""
    out = [costs.c_reject - g.constant]
    out.extend(-c for c, _ in g.terms[1:])
    return tuple(out)


def _zeta_effective(n: int, tau: float, zeta: float) -> float:
    """Clamp the threshold to the estimator's support floor 1/(n tau)."""
    if tau <= 0.0:
        return math.inf
    return max(zeta, 1.0 / (n * tau))


def mixture_terms(n: int, tau: float, zeta: float, prior: GammaPrior) -> list[MixtureTerm]:
    """Enumerate the (j, m) mixture members for a plan geometry."""
    _check_cap(n)
    zeff = _zeta_effective(n, tau, zeta)
    out = []
    for m in range(1, n + 1):
        for j in range(m + 1):
            s = n - m + j
            tau_jm = s * tau / m
            a_jm = (-1.0) ** j * math.comb(n, m) * math.comb(m, j)
            c_jm = prior.b + s * tau
            cstar = max(0.0, m / zeff - s * tau) / c_jm
            out.append(
                MixtureTerm(
                    m=m,
                    j=j,
                    tau_jm=tau_jm,
                    a_jm=a_jm,
                    c_jm=c_jm,
                    cstar_jm=cstar,
                    sstar_jm=cstar / (1.0 + cstar),
                )
            )
    return out


def marginal_q(s: int, tau: float, prior: GammaPrior) -> float:
    """E exp(-lambda s tau) under the prior: (b / (b + s tau))^a."""
    return (prior.b / (prior.b + s * tau)) ** prior.a


def expected_failures_type1(n: int, tau: float, prior: GammaPrior) -> float:
    """Prior-expected failure count E(M) under Type-I censoring.

    Evaluates the double alternating binomial sum with the integer weight of
    each survival factor (b/(b+s tau))^a aggregated exactly before any
    floating-point mixing, so the massive binomial cancellations happen in
    integer arithmetic.  The result must (and does, to machine precision)
    equal the marginalized binomial mean n (1 - (b/(b+tau))^a).
    """
    _check_cap(n)
    if n == 0 or tau == 0.0:
        return 0.0
    weights = [0] * (n + 1)
    for m in range(1, n + 1):
        cm = math.comb(n, m)
        for j in range(m + 1):
            s = n - m + j
            weights[s] += (-1) ** j * m * cm * math.comb(m, j)
    return math.fsum(w * marginal_q(s, tau, prior) for s, w in enumerate(weights) if w)


def tail_probability_type1(n: int, tau: float, zeta: float, lam: float) -> float:
    """P(lambda_hat >= zeta | lambda) under Type-I censoring.

    For zeta = 0 this is 1 (the no-failure atom rejects too); for
    0 < zeta <= 1/(n tau) it is the whole continuous mass 1 - exp(-n lam tau);
    above the support floor each mixture member contributes a gamma CDF.
    """
    if n < 1 or not tau > 0 or not lam > 0:
        raise ValueError("tail_probability_type1 requires n >= 1, tau > 0, lambda > 0")
    if zeta == 0.0:
        return 1.0
    zeff = _zeta_effective(n, tau, zeta)
    acc = []
    for m in range(1, n + 1):
        for j in range(m + 1):
            s = n - m + j
            w = max(0.0, 1.0 / zeff - s * tau / m)
            if w <= 0.0:
                continue
            term = (
                (-1.0) ** j
                * math.comb(n, m)
                * math.comb(m, j)
                * math.exp(-lam * s * tau)
                * special.gammainc(m, m * lam * w)
            )
            acc.append(term)
    return float(min(1.0, max(0.0, math.fsum(acc))))


def bayes_risk_type1(
    plan: Type1Plan,
    costs: CostModel,
    g: AcceptanceCost,
    prior: GammaPrior,
) -> RiskBreakdown:
    """Exact Bayes risk of a Type-I plan for any (coefficient, exponent) loss.

    ``n = 0`` plans are the two no-sampling actions: reject (zeta = 0, risk
    Cr) or accept (any positive zeta, risk E g(lambda)), plus tau * Ctau.
    """
    n, tau, zeta = plan.n, plan.tau, plan.zeta
    _check_cap(n)
    cl = threshold_weights(costs, g)
    acceptance = g.expectation(prior)
    a, b = prior.a, prior.b

    if n == 0 or tau == 0.0:
        # no failures can occur: the estimator is 0, so the plan accepts
        # unless zeta = 0, in which case it rejects
        threshold = (costs.c_reject - acceptance) if zeta == 0.0 else 0.0
        sampling = n * (costs.c_sample - costs.salvage)
        time_term = tau * costs.c_time
        total = sampling + 0.0 + time_term + acceptance + threshold
        return RiskBreakdown(sampling, 0.0, time_term, acceptance, threshold, total, cl)

    em = expected_failures_type1(n, tau, prior)
    sampling = n * (costs.c_sample - costs.salvage)
    salvage = em * costs.salvage
    time_term = tau * costs.c_time

    # flattened (m, j) geometry shared by every l-block
    terms = mixture_terms(n, tau, zeta, prior)
    ms = np.array([t.m for t in terms], dtype=float)
    signed = np.array([t.a_jm for t in terms])
    log_cjm = np.log(np.array([t.c_jm for t in terms]))
    sstar = np.array([t.sstar_jm for t in terms])

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
        blocks.append(c_l * (atom + math.fsum(signed * pref * inc)))
    threshold = math.fsum(blocks)

    total = sampling + salvage + time_term + acceptance + threshold
    return RiskBreakdown(sampling, salvage, time_term, acceptance, threshold, total, cl)
