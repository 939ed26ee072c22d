"""Pytest fixtures for the hybrid-scheme tests."""

__docformat__ = "restructuredtext"

import numpy as np
import pytest

from mixrates.hybrid import HybridPlan, hybrid_approx
from mixrates.kernels import build_cutoff


def wide_gaussian(x):
    """Gaussian target of standard deviation 2."""
    x = np.asarray(x, dtype=float)
    return np.exp(-x * x / 8.0)


@pytest.fixture(scope="session")
def cutoff():
    """Default sampled cutoff."""
    return build_cutoff()


@pytest.fixture
def target():
    """Smooth target."""
    return wide_gaussian


@pytest.fixture(scope="module")
def plan():
    """Four levels with shrinking windows ``zeta_j = 2^(4 - j)``."""
    return HybridPlan.from_levels(4, 1.0, 2.0)


@pytest.fixture(scope="module")
def report(plan):
    """Report of the smooth target on the four-level plan."""
    return hybrid_approx(wide_gaussian, plan, build_cutoff())
