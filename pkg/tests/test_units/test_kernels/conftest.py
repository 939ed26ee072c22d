"""Pytest fixtures for the kernel tests."""

__docformat__ = "restructuredtext"

import pytest

from mixrates.kernels import build_cutoff, default_x_grid, invert_to_space


@pytest.fixture(scope="session")
def cutoff():
    """Default sampled cutoff."""
    return build_cutoff()


@pytest.fixture(scope="session")
def small_table(cutoff):
    """Kernel table on ``[-64, 64]`` with 2049 nodes."""
    return invert_to_space(cutoff, default_x_grid(64.0, 2049))
