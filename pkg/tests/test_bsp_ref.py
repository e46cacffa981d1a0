import math

import pytest
from scipy import integrate

from dsplan import (
    AcceptanceCost,
    CostModel,
    GammaPrior,
    bayes_risk_hybrid,
    bayes_risk_type1,
    bsp_bayes_risk_mc,
    bsp_threshold,
    posterior_expected_cost,
)
from dsplan.model import HybridPlan, Type1Plan
from dsplan.specfun import gamma_pdf

PR = GammaPrior(2.5, 0.8)
COSTS = CostModel(0.5, 5.0, 30.0, 0.3)


def _phi_quadrature(m, z, g, prior):
    a, b = prior.a, prior.b
    val, _ = integrate.quad(
        lambda lam: g(lam) * gamma_pdf(lam, m + a, z + b), 0, 400.0 / (z + b), limit=400
    )
    return val


class TestPosteriorExpectedCost:
    def test_large_z_tends_to_constant(self, quad_loss):
        assert posterior_expected_cost(3, 1e12, quad_loss, PR) == pytest.approx(2.0, abs=1e-9)

    def test_prior_value_at_origin(self, quad_loss):
        assert posterior_expected_cost(0, 0.0, quad_loss, PR) == pytest.approx(35.59375, rel=1e-13)

    def test_matches_rising_factorial_form(self, quad_loss):
        m, z = 2, 1.7
        a, b = PR.a, PR.b
        want = 2 + 2 * (m + a) / (z + b) + 2 * (m + a) * (m + a + 1) / (z + b) ** 2
        assert posterior_expected_cost(m, z, quad_loss, PR) == pytest.approx(want, rel=1e-13)

    def test_randomized_against_quadrature(self, rng, frac_loss):
        for _ in range(8):
            m = int(rng.integers(0, 6))
            z = float(rng.uniform(0.0, 8.0))
            got = posterior_expected_cost(m, z, frac_loss, PR)
            assert got == pytest.approx(_phi_quadrature(m, z, frac_loss, PR), rel=1e-7)

    def test_strictly_decreasing_in_z(self, rng, quintic_loss):
        for _ in range(40):
            m = int(rng.integers(0, 6))
            z1, z2 = sorted(rng.uniform(0, 10, 2))
            if z1 == z2:
                continue
            assert posterior_expected_cost(m, float(z2), quintic_loss, PR) < \
                posterior_expected_cost(m, float(z1), quintic_loss, PR)

    def test_increasing_in_coefficients(self, rng):
        g1 = AcceptanceCost.polynomial([2, 2, 2])
        g2 = AcceptanceCost.polynomial([2, 3, 2])
        for _ in range(20):
            m = int(rng.integers(0, 5))
            z = float(rng.uniform(0, 5))
            assert posterior_expected_cost(m, z, g2, PR) > posterior_expected_cost(m, z, g1, PR)


class TestThreshold:
    def test_constant_loss_always_accepts(self):
        g = AcceptanceCost.polynomial([2.0])
        th = bsp_threshold(1, 6, 3, 0.2, COSTS, g, PR)
        assert th.cutoff == 0.0
        assert th.accepts(0.0)

    def test_never_accept_sentinel(self, quad_loss):
        costs = CostModel(0.5, 5.0, 1.5, 0.3)  # rejection cheaper than a0
        th = bsp_threshold(2, 6, 3, 0.2, costs, quad_loss, PR)
        assert math.isinf(th.cutoff)
        assert not th.accepts(1e12)

    def test_quadratic_matches_algebraic_root(self, quad_loss):
        for m in range(0, 4):
            rho1 = m + PR.a
            rho2 = (m + PR.a) * (m + PR.a + 1)
            u = (2 * rho1 + math.sqrt(4 * rho1**2 + 4 * 28.0 * 2 * rho2)) / (2 * 28.0)
            th = bsp_threshold(m, 6, 3, 2.0, COSTS, quad_loss, PR)
            assert th.root == pytest.approx(u, abs=1e-8)

    def test_root_brackets_cost_crossing(self, quintic_loss):
        th = bsp_threshold(2, 6, 3, 2.0, COSTS, quintic_loss, PR)
        z = th.root - PR.b
        assert posterior_expected_cost(2, z - 1e-6, quintic_loss, PR) > COSTS.c_reject
        assert posterior_expected_cost(2, z + 1e-6, quintic_loss, PR) < COSTS.c_reject

    def test_cutoff_clamped_to_test_range(self, quad_loss):
        # tiny n*tau forces the cap: no attainable z can accept
        th = bsp_threshold(1, 2, 1, 0.01, COSTS, quad_loss, PR)
        assert 0.0 <= th.cutoff <= 2 * 0.01

    def test_m_zero_uncapped(self, quad_loss):
        th0 = bsp_threshold(0, 2, 1, 0.01, COSTS, quad_loss, PR)
        assert th0.cutoff == pytest.approx(max(0.0, th0.root - PR.b))


class TestSimulatedRisk:
    def test_reject_only_configuration(self, quad_loss):
        est = bsp_bayes_risk_mc(0, None, 0.0, CostModel(0.5, 0.5, 30.0, 0.0), quad_loss, PR,
                                trials=1_000, seed=3)
        assert est.mean == 30.0 and est.std_error == 0.0

    def test_forced_always_accept_recovers_g_expectation(self, quad_loss):
        costs = CostModel(0.5, 0.5, 30.0, 0.0)
        est = bsp_bayes_risk_mc(3, None, 0.725, costs, quad_loss, PR,
                                trials=400_000, seed=5, cutoffs=[0.0] * 4)
        fixed = 3 * 0.5 + 0.725 * 0.5
        assert abs(est.mean - (fixed + 35.59375)) <= 3 * est.std_error

    def test_forced_always_reject(self, quad_loss):
        costs = CostModel(0.5, 0.5, 30.0, 0.0)
        est = bsp_bayes_risk_mc(3, None, 0.725, costs, quad_loss, PR,
                                trials=100_000, seed=5, cutoffs=[math.inf] * 4)
        assert est.mean == pytest.approx(3 * 0.5 + 0.725 * 0.5 + 30.0, abs=1e-12)

    def test_bayes_rule_beats_threshold_rule_in_sample(self, quad_loss, costs_hybrid_std):
        # at the same plan the posterior rule can only lower the risk
        est = bsp_bayes_risk_mc(6, 3, 0.2, costs_hybrid_std, quad_loss, PR,
                                trials=1_000_000, seed=7)
        dsp = bayes_risk_hybrid(HybridPlan(6, 3, 0.2, 2.975), costs_hybrid_std, quad_loss, PR).total
        assert est.mean <= dsp + 3 * est.std_error

    def test_type1_matches_paper_bsp_value(self, quad_loss, costs_type1_std):
        est = bsp_bayes_risk_mc(3, None, 0.7250, costs_type1_std, quad_loss, PR,
                                trials=1_000_000, seed=11)
        assert est.mean == pytest.approx(25.2777, abs=3 * est.std_error + 0.01)
