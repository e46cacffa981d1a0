"""Decision-theoretic sampling plans for exponential life tests under
Type-I and Type-I hybrid censoring: exact Bayes risks, bounded grid-search
optimization, a Bayesian-plan reference, and a Monte Carlo oracle."""

from .specfun import GammaPrior, gamma_pdf, log_gamma, prior_moment, reg_inc_beta
from .model import (
    AcceptanceCost,
    CostModel,
    Decision,
    EstimatorLaw,
    HybridPlan,
    LifeTestOutcome,
    Type1Plan,
    decide,
    draw_life_test,
    estimator_law_type1,
    lambda_hat_hybrid,
    lambda_hat_type1,
    loss_of,
)
from .risk_type1 import (
    MAX_SAMPLE_SIZE,
    MixtureTerm,
    RiskBreakdown,
    StabilityCapError,
    bayes_risk_type1,
    expected_failures_type1,
    mixture_terms,
    tail_probability_type1,
)
from .risk_hybrid import (
    HybridRiskTerm,
    bayes_risk_hybrid,
    expected_duration_hybrid,
    expected_failures_hybrid,
    tail_probability_hybrid,
    term_R,
)
from .search import (
    GridSpec,
    OptimumReport,
    ScanEntry,
    SearchBounds,
    bounds_type1,
    optimize_hybrid,
    optimize_type1,
    tau_alpha,
)
from .mc_oracle import (
    MCConfig,
    MCEstimate,
    simulate_dsp_risk,
    simulate_moments,
    simulate_tail_probability,
)
from .bsp_ref import (
    BayesDecisionThreshold,
    bsp_bayes_risk_mc,
    bsp_threshold,
    posterior_expected_cost,
)

__version__ = "0.1.0"

__all__ = [
    "GammaPrior", "gamma_pdf", "log_gamma", "prior_moment", "reg_inc_beta",
    "AcceptanceCost", "CostModel", "Decision", "EstimatorLaw", "HybridPlan",
    "LifeTestOutcome", "Type1Plan", "decide", "draw_life_test",
    "estimator_law_type1", "lambda_hat_hybrid", "lambda_hat_type1", "loss_of",
    "MAX_SAMPLE_SIZE", "MixtureTerm", "RiskBreakdown", "StabilityCapError",
    "bayes_risk_type1", "expected_failures_type1", "mixture_terms",
    "tail_probability_type1",
    "HybridRiskTerm", "bayes_risk_hybrid", "expected_duration_hybrid",
    "expected_failures_hybrid", "tail_probability_hybrid", "term_R",
    "GridSpec", "OptimumReport", "ScanEntry", "SearchBounds", "bounds_type1",
    "optimize_hybrid", "optimize_type1", "tau_alpha",
    "MCConfig", "MCEstimate", "simulate_dsp_risk", "simulate_moments",
    "simulate_tail_probability",
    "BayesDecisionThreshold", "bsp_bayes_risk_mc", "bsp_threshold",
    "posterior_expected_cost",
]
