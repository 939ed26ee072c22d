"""Pytest fixtures for the location-scheme tests."""

__docformat__ = "restructuredtext"

import numpy as np
import pytest

from mixrates.kernels import build_cutoff


def wide_gaussian(x):
    """Gaussian target of standard deviation 2."""
    x = np.asarray(x, dtype=float)
    return np.exp(-x * x / 8.0)


@pytest.fixture(scope="session")
def cutoff():
    """Default sampled cutoff; the schemes only need its closed form."""
    return build_cutoff()


@pytest.fixture
def target():
    """Smooth target with negligible spectrum beyond a few radians."""
    return wide_gaussian
