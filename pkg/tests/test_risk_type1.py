import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dsplan import (
    AcceptanceCost,
    CostModel,
    GammaPrior,
    MCConfig,
    StabilityCapError,
    Type1Plan,
    bayes_risk_type1,
    expected_failures_type1,
    mixture_terms,
    simulate_tail_probability,
    tail_probability_type1,
)

PR = GammaPrior(2.5, 0.8)


class TestExpectedFailures:
    def test_tau_zero(self):
        assert expected_failures_type1(5, 0.0, PR) == 0.0

    def test_single_item_closed_form(self):
        # 1 - (b/(b+tau))^a with b = tau = 0.8
        assert expected_failures_type1(1, 0.8, PR) == pytest.approx(1 - 0.5**2.5, abs=1e-9)

    def test_matches_closed_form_over_sizes(self, rng):
        for n in range(1, 26):
            a = rng.uniform(0.3, 6.0)
            b = rng.uniform(0.2, 3.0)
            tau = rng.uniform(0.05, 3.0)
            pr = GammaPrior(a, b)
            closed = n * (1 - (b / (b + tau)) ** a)
            assert expected_failures_type1(n, tau, pr) == pytest.approx(closed, abs=1e-9)

    def test_cap(self):
        with pytest.raises(StabilityCapError):
            expected_failures_type1(31, 1.0, PR)


class TestTailProbability:
    def test_zeta_zero_is_one(self):
        assert tail_probability_type1(3, 0.7, 0.0, 1.0) == 1.0

    def test_below_support_floor(self):
        # any zeta in (0, 1/(n tau)] catches the whole continuous part
        n, tau, lam = 3, 0.725, 1.3
        want = 1 - math.exp(-n * lam * tau)
        for zeta in (1e-6, 0.2, 1.0 / (n * tau)):
            assert tail_probability_type1(n, tau, zeta, lam) == pytest.approx(want, abs=1e-12)

    def test_against_monte_carlo(self):
        n, tau, zeta, lam = 3, 0.725, 2.975, 1.0
        p = tail_probability_type1(n, tau, zeta, lam)
        est = simulate_tail_probability(lam, Type1Plan(n, tau, zeta), MCConfig(trials=1_000_000, seed=314))
        assert abs(est.mean - p) <= 3 * est.std_error

    def test_monotone_in_zeta_and_bounded(self, rng):
        for _ in range(20):
            n = int(rng.integers(1, 9))
            tau = float(rng.uniform(0.1, 2.0))
            lam = float(rng.uniform(0.1, 4.0))
            zs = np.linspace(0.0, 8.0, 40)
            vals = [tail_probability_type1(n, tau, float(z), lam) for z in zs]
            assert all(0.0 <= v <= 1.0 for v in vals)
            assert all(b <= a + 1e-12 for a, b in zip(vals, vals[1:]))


class TestMixtureTerms:
    def test_geometry(self):
        terms = mixture_terms(3, 0.8, 1.5, PR)
        assert len(terms) == 3 * 6 // 2  # n (n + 3) / 2
        t = next(x for x in terms if x.m == 2 and x.j == 1)
        assert t.tau_jm == pytest.approx((3 - 2 + 1) * 0.8 / 2)
        assert t.a_jm == -3 * 2  # (-1)^1 C(3,2) C(2,1)
        assert t.c_jm == pytest.approx(0.8 + 2 * 0.8)
        assert 0.0 <= t.sstar_jm <= 1.0

    def test_empty_range_terms_vanish(self):
        # zeta far above every 1/tau_jm: all beta arguments clamp to zero
        for t in mixture_terms(4, 1.0, 1e9, PR):
            if t.tau_jm > 0:
                assert t.sstar_jm == 0.0


class TestBayesRisk:
    def test_paper_quadratic_anchor(self, quad_loss, costs_type1_std):
        bd = bayes_risk_type1(Type1Plan(3, 0.7250, 2.9750), costs_type1_std, quad_loss, PR)
        assert bd.total == pytest.approx(25.2777, abs=5e-5)

    def test_no_sampling_reject(self, quad_loss, costs_type1_std):
        bd = bayes_risk_type1(Type1Plan(0, 0.0, 0.0), costs_type1_std, quad_loss, PR)
        assert bd.total == 30.0

    def test_no_sampling_accept(self, quad_loss, costs_type1_std):
        bd = bayes_risk_type1(Type1Plan(0, 0.0, math.inf), costs_type1_std, quad_loss, PR)
        assert bd.total == pytest.approx(35.59375, rel=1e-13)

    def test_paper_fifth_degree_anchor(self, quintic_loss):
        costs = CostModel(0.5, 0.5, 30.0, 0.0)
        bd = bayes_risk_type1(Type1Plan(5, 1.7000, 0.9375), costs, quintic_loss, GammaPrior(1.5, 0.8))
        assert bd.total == pytest.approx(27.0038, abs=5e-5)

    def test_paper_fractional_anchor(self, frac_loss):
        costs = CostModel(0.5, 0.5, 30.0, 0.0)
        bd = bayes_risk_type1(Type1Plan(4, 1.0750, 2.0625), costs, frac_loss, PR)
        assert bd.total == pytest.approx(27.5603, abs=5e-5)

    def test_breakdown_sums_to_total(self, quad_loss, costs_type1_std):
        bd = bayes_risk_type1(Type1Plan(4, 1.2, 2.0), costs_type1_std, quad_loss, PR)
        parts = (
            bd.sampling_term + bd.salvage_term + bd.time_term
            + bd.acceptance_term + bd.threshold_term
        )
        assert bd.total == parts
        assert bd.per_l_weights == (30.0 - 2.0, -2.0, -2.0)

    def test_zeta_zero_identity(self, quad_loss):
        costs = CostModel(0.6, 0.4, 22.0, 0.25)
        n, tau = 5, 1.3
        bd = bayes_risk_type1(Type1Plan(n, tau, 0.0), costs, quad_loss, PR)
        want = (
            n * (0.6 - 0.25)
            + expected_failures_type1(n, tau, PR) * 0.25
            + tau * 0.4
            + 22.0
        )
        assert bd.total == pytest.approx(want, abs=1e-9)

    def test_zeta_large_kills_threshold(self, quad_loss, costs_type1_std):
        bd = bayes_risk_type1(Type1Plan(4, 1.1, 1e6), costs_type1_std, quad_loss, PR)
        assert abs(bd.threshold_term) <= 1e-9
        fixed = 4 * 0.5 + 1.1 * 0.5 + 35.59375
        assert bd.total == pytest.approx(fixed, abs=1e-9)

    def test_zero_coefficient_term_is_inert(self, costs_type1_std):
        g1 = AcceptanceCost.polynomial([2, 2, 2])
        g2 = AcceptanceCost(((2.0, 0.0), (2.0, 1.0), (2.0, 2.0), (0.0, 3.0)))
        p = Type1Plan(3, 0.9, 1.5)
        r1 = bayes_risk_type1(p, costs_type1_std, g1, PR).total
        r2 = bayes_risk_type1(p, costs_type1_std, g2, PR).total
        assert r1 == pytest.approx(r2, rel=1e-13)

    @given(st.floats(min_value=0.05, max_value=3.0), st.floats(min_value=0.0, max_value=7.0))
    @settings(max_examples=40, deadline=None)
    def test_risk_between_floor_and_cap(self, tau, zeta):
        costs = CostModel(0.5, 0.5, 30.0, 0.0)
        g = AcceptanceCost.polynomial([2, 2, 2])
        bd = bayes_risk_type1(Type1Plan(3, tau, zeta), costs, g, PR)
        assert bd.total >= 3 * 0.5 + tau * 0.5 - 1e-9
        assert bd.total <= 3 * 0.5 + tau * 0.5 + max(30.0, 35.59375) + 1e-9

    def test_stability_cap_raises(self, quad_loss, costs_type1_std):
        with pytest.raises(StabilityCapError):
            bayes_risk_type1(Type1Plan(31, 1.0, 1.0), costs_type1_std, quad_loss, PR)

    def test_tau_zero_plan(self, quad_loss, costs_type1_std):
        bd = bayes_risk_type1(Type1Plan(4, 0.0, 1.0), costs_type1_std, quad_loss, PR)
        # no failures possible: pay sampling then accept
        assert bd.total == pytest.approx(4 * 0.5 + 35.59375, rel=1e-13)
