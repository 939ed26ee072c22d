"""Pytest fixtures for the pipeline engine tests."""

__docformat__ = "restructuredtext"

import pytest

from test_pipeline._helpers import RecordingCache


@pytest.fixture
def recording_cache():
    """Provide a fresh RecordingCache for each test."""
    return RecordingCache()


@pytest.fixture(params=["bfs", "dfs"])
def sort_strategy(request):
    """Run a test under both sort strategies."""
    return request.param
