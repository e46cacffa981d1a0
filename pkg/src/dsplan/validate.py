"""Self-contained invariant suite behind the ``validate`` command.

Runs the cross-checks that tie the closed forms, the simulator and the
optimizer together: moment identities, oracle agreement at 3 standard
errors, threshold-term limits and search-bound postconditions.  Returns a
list of named results; any failure makes the command exit nonzero.

``quick`` trims Monte Carlo trial counts for smoke runs.  ``corrupt``
deliberately perturbs one expected value and is the negative control used
by the tests: a healthy suite must notice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import AcceptanceCost, CostModel, HybridPlan, Type1Plan
from .mc_oracle import MCConfig, simulate_dsp_risk, simulate_moments, simulate_tail_probability
from .risk_hybrid import (
    bayes_risk_hybrid,
    expected_duration_hybrid,
    expected_failures_hybrid,
    tail_probability_hybrid,
)
from .risk_type1 import bayes_risk_type1, expected_failures_type1, tail_probability_type1
from .search import GridSpec, optimize_type1
from .specfun import GammaPrior, prior_moment, reg_inc_beta

__all__ = ["CheckResult", "run_all"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail}"


def _check(name, passed, detail) -> CheckResult:
    return CheckResult(name=name, passed=bool(passed), detail=detail)


def run_all(quick: bool = False, seed: int = 20240801, corrupt: bool = False) -> list[CheckResult]:
    trials = 50_000 if quick else 1_000_000
    results: list[CheckResult] = []
    prior = GammaPrior(2.5, 0.8)
    quad = AcceptanceCost.polynomial([2.0, 2.0, 2.0])
    costs_t1 = CostModel(0.5, 0.5, 30.0, 0.0)
    costs_hy = CostModel(0.5, 5.0, 30.0, 0.3)
    rng = np.random.default_rng(seed)

    # E(M) double sum vs the marginalized binomial mean
    worst = 0.0
    for n in range(1, 26):
        a = rng.uniform(0.3, 6.0)
        b = rng.uniform(0.2, 3.0)
        tau = rng.uniform(0.05, 3.0)
        pr = GammaPrior(a, b)
        closed = n * (1.0 - (b / (b + tau)) ** a)
        # a deliberately broken oracle for the negative control
        if corrupt:
            closed *= 1.0 + 1e-6
        worst = max(worst, abs(expected_failures_type1(n, tau, pr) - closed))
    results.append(
        _check("type1 E(M) double sum vs closed form (n<=25)", worst <= 1e-9,
               f"max abs dev {worst:.3e}")
    )

    # incomplete beta symmetry
    worst = 0.0
    for _ in range(200):
        x = rng.random()
        al = rng.uniform(0.2, 20.0)
        be = rng.uniform(0.2, 20.0)
        worst = max(worst, abs(reg_inc_beta(x, al, be) - (1.0 - reg_inc_beta(1.0 - x, be, al))))
    results.append(
        _check("incomplete beta symmetry", worst <= 1e-12, f"max abs dev {worst:.3e}")
    )

    # prior moments vs quadrature
    from scipy.integrate import quad as _quad
    from .specfun import gamma_pdf

    worst = 0.0
    for p in (0.5, 1.0, 2.0, 2.5, 5.0):
        val, _ = _quad(lambda l: l**p * gamma_pdf(l, prior.a, prior.b), 0, 200, limit=200)
        worst = max(worst, abs(val / prior_moment(prior, p) - 1.0))
    results.append(
        _check("prior moments vs quadrature", worst <= 1e-8, f"max rel dev {worst:.3e}")
    )

    # closed-form risks vs the Monte Carlo oracle (3 sigma)
    plans = [
        (Type1Plan(3, 0.7250, 2.9750), costs_t1, None),
        (Type1Plan(5, 1.2, 1.5), costs_t1, None),
        (HybridPlan(6, 3, 0.2, 2.9750), costs_hy, None),
        (HybridPlan(4, 2, 0.5, 1.5), costs_hy, None),
    ]
    worst_sig = 0.0
    for i, (plan, costs, _) in enumerate(plans):
        if isinstance(plan, HybridPlan):
            exact = bayes_risk_hybrid(plan, costs, quad, prior).total
        else:
            exact = bayes_risk_type1(plan, costs, quad, prior).total
        est = simulate_dsp_risk(plan, costs, quad, prior, MCConfig(trials=trials, seed=seed + i))
        worst_sig = max(worst_sig, abs(est.mean - exact) / est.std_error)
    results.append(
        _check("closed-form risk vs MC oracle", worst_sig <= 3.0,
               f"worst deviation {worst_sig:.2f} sigma at {trials} trials")
    )

    # hybrid moments vs simulation
    em = expected_failures_hybrid(6, 3, 0.2, prior)
    et = expected_duration_hybrid(6, 3, 0.2, prior)
    em_est, et_est = simulate_moments(HybridPlan(6, 3, 0.2, 0.0), prior, MCConfig(trials=trials, seed=seed + 17))
    dev = max(abs(em_est.mean - em) / em_est.std_error, abs(et_est.mean - et) / et_est.std_error)
    ok = dev <= 3.0 and 0.0 <= em <= 3.0 and 0.0 <= et <= 0.2
    results.append(
        _check("hybrid E(M)/E(tau*) vs MC and bounds", ok, f"worst {dev:.2f} sigma")
    )

    # conditional tails vs simulation
    worst_sig = 0.0
    for i, lam in enumerate((0.5, 1.0, 3.0)):
        p1 = tail_probability_type1(3, 0.725, 2.975, lam)
        e1 = simulate_tail_probability(lam, Type1Plan(3, 0.725, 2.975), MCConfig(trials=trials, seed=seed + 23 + i))
        p2 = tail_probability_hybrid(6, 3, 0.2, 2.975, lam)
        e2 = simulate_tail_probability(lam, HybridPlan(6, 3, 0.2, 2.975), MCConfig(trials=trials, seed=seed + 31 + i))
        worst_sig = max(
            worst_sig,
            abs(e1.mean - p1) / max(e1.std_error, 1e-12),
            abs(e2.mean - p2) / max(e2.std_error, 1e-12),
        )
    results.append(
        _check("tail probabilities vs MC oracle", worst_sig <= 3.0,
               f"worst deviation {worst_sig:.2f} sigma")
    )

    # threshold-term limits
    b0 = bayes_risk_type1(Type1Plan(4, 1.1, 0.0), costs_hy, quad, prior)
    ident = (
        4 * (costs_hy.c_sample - costs_hy.salvage)
        + expected_failures_type1(4, 1.1, prior) * costs_hy.salvage
        + 1.1 * costs_hy.c_time
        + costs_hy.c_reject
    )
    big = bayes_risk_type1(Type1Plan(4, 1.1, 1e6), costs_hy, quad, prior)
    ok = abs(b0.total - ident) <= 1e-9 and abs(big.threshold_term) <= 1e-9
    results.append(
        _check("zeta=0 identity and zeta->inf limit", ok,
               f"zeta0 dev {abs(b0.total - ident):.2e}, zeta-inf term {big.threshold_term:.2e}")
    )

    # hybrid with r = n reduces to Type-I up to the duration term
    h = bayes_risk_hybrid(HybridPlan(5, 5, 0.9, 1.4), costs_hy, quad, prior)
    t = bayes_risk_type1(Type1Plan(5, 0.9, 1.4), costs_hy, quad, prior)
    dev = abs(h.threshold_term - t.threshold_term)
    results.append(
        _check("hybrid r=n matches Type-I threshold term", dev <= 1e-9, f"dev {dev:.2e}")
    )

    # optimizer bound postconditions on a coarse grid
    grid = GridSpec(zeta_step=0.1, tau_step=0.1, zeta_cap=6.0)
    rep = optimize_type1(costs_t1, quad, prior, grid)
    cap = min(costs_t1.c_reject, quad.expectation(prior))
    spend = rep.plan.n * (costs_t1.c_sample - costs_t1.salvage) + rep.plan.tau * costs_t1.c_time
    ok = rep.risk <= cap + 1e-9 and spend <= rep.risk + 1e-9
    results.append(
        _check("search bound postconditions (coarse grid)", ok,
               f"risk {rep.risk:.4f}, cap {cap:.4f}, fixed spend {spend:.4f}")
    )

    return results
