import numpy as np
import pytest

from dsplan import AcceptanceCost, CostModel, GammaPrior


@pytest.fixture(scope="session")
def quad_loss():
    return AcceptanceCost.polynomial([2.0, 2.0, 2.0])


@pytest.fixture(scope="session")
def quintic_loss():
    return AcceptanceCost.polynomial([2.0] * 6)


@pytest.fixture(scope="session")
def frac_loss():
    return AcceptanceCost(((2.0, 0.0), (2.0, 1.0), (2.0, 2.5)))


@pytest.fixture(scope="session")
def prior_std():
    return GammaPrior(2.5, 0.8)


@pytest.fixture(scope="session")
def costs_type1_std():
    return CostModel(c_sample=0.5, c_time=0.5, c_reject=30.0, salvage=0.0)


@pytest.fixture(scope="session")
def costs_hybrid_std():
    return CostModel(c_sample=0.5, c_time=5.0, c_reject=30.0, salvage=0.3)


@pytest.fixture()
def rng():
    return np.random.default_rng(987654321)
