import os

import pytest
from hypothesis import HealthCheck, settings

from rrw.channel import ChannelParams

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def ch():
    return ChannelParams(10.0, 1.0, 2.0, 4.0)
