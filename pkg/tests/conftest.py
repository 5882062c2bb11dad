from __future__ import annotations

import os

import pytest
from hypothesis import HealthCheck, settings

from rpkernel import reset_leaf_coverage

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(autouse=True)
def _fresh_leaf_counter():
    reset_leaf_coverage()
    yield
