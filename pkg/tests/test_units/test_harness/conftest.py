"""Pytest fixtures for the harness tests."""

__docformat__ = "restructuredtext"

import numpy as np
import pytest

from mixrates.harness import ExperimentConfig
from mixrates.kernels import build_cutoff


@pytest.fixture
def rng():
    """Fresh seeded stream per test."""
    return np.random.default_rng(11)


@pytest.fixture(scope="session")
def cutoff():
    """Default sampled cutoff."""
    return build_cutoff()


@pytest.fixture
def small_config(tmp_path):
    """Tent on the Pareto(2) design at two coarse scales."""
    return ExperimentConfig(
        resolution_grid=(0.25, 0.125),
        design_samples=200,
        seed=3,
        output_dir=str(tmp_path / "results"),
    )
