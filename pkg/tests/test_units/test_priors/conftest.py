"""Pytest fixtures for the prior tests."""

__docformat__ = "restructuredtext"

import numpy as np
import pytest

from mixrates.priors import InverseGaussian, LocationBaseSpec, ScalePriorSpec


@pytest.fixture
def rng():
    """Fresh seeded stream per test."""
    return np.random.default_rng(20240601)


@pytest.fixture(scope="module")
def ig():
    """Inverse-Gaussian law with unit mean and shape."""
    return InverseGaussian(1.0, 1.0)


@pytest.fixture
def dp_spec():
    """Dirichlet process of unit concentration over the unit inverse-Gaussian."""
    return ScalePriorSpec.dirichlet_process(1.0)


@pytest.fixture
def pareto_base():
    """Fixed location base with quadratic small-ball decay."""
    return LocationBaseSpec.pareto(2.0)
