import pytest
from loguru import logger

from conebarrel.config import SampleConfig


@pytest.fixture(autouse=True)
def drop_log_sinks():
    # sinks added by cli.main point at streams captured for one test only
    yield
    logger.remove()


@pytest.fixture
def seed():
    return 7


@pytest.fixture
def cfg(seed):
    """Desk-scale counts shrunk so every suite finishes in about a second."""
    return SampleConfig(seed=seed, sample_count=300, max_index=4, max_numerator=16,
                        max_denominator=16, pool_size=24, outer_count=20, inner_count=200,
                        center_count=8, u_grid_size=50)
