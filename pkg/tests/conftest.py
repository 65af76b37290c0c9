from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from cdgraph import KnowledgeBase, load_seed_kb

# First calls pay one-off costs (the trial-division sieve, cached class lists),
# so per-example deadlines would flake; the example counts stay the default.
settings.register_profile(
    "suite", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def seed_kb() -> KnowledgeBase:
    return load_seed_kb()


@pytest.fixture
def empty_kb() -> KnowledgeBase:
    return KnowledgeBase.empty()
