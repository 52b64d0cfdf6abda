from __future__ import annotations

import pytest

from scoutbench.features import build_catalogue
from scoutbench.ingest import generate_synthetic
from scoutbench.roles import default_zone_map
from scoutbench.scoring import default_profile
from scoutbench.service import AnalyticsService

FIXTURE_SEED = 7
FIXTURE_PLAYERS = 20
FIXTURE_MATCHES = 10


@pytest.fixture(scope="session")
def fixture_dataset():
    return generate_synthetic(FIXTURE_SEED, FIXTURE_PLAYERS, FIXTURE_MATCHES)


@pytest.fixture(scope="session")
def fixture_catalogue(fixture_dataset):
    return build_catalogue(fixture_dataset)


@pytest.fixture(scope="session")
def fixture_profile(fixture_catalogue):
    return default_profile(fixture_catalogue)


@pytest.fixture(scope="session")
def zone_map():
    return default_zone_map()


@pytest.fixture(scope="session")
def fixture_service(fixture_dataset):
    return AnalyticsService(fixture_dataset)
