"""Pytest fixtures for the sieve tests."""

__docformat__ = "restructuredtext"

import numpy as np
import pytest

from mixrates._enums import MixtureKind
from mixrates.sieve import SieveSpec


@pytest.fixture
def rng():
    """Fresh seeded stream per test."""
    return np.random.default_rng(7)


@pytest.fixture
def covariates():
    """Twenty evenly spread covariates."""
    return np.linspace(-1.0, 1.0, 20)


@pytest.fixture
def location_sieve():
    """n = 100, H = 1, epsilon = 1/2: five big weights, scales in (0.01, 100]."""
    return SieveSpec(100, 1.0, 0.5)


@pytest.fixture
def location_scale_sieve():
    """Location-scale sieve with the same parameters."""
    return SieveSpec(100, 1.0, 0.5, kind=MixtureKind.LOCATION_SCALE)
