import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from ecom_sdk.settings import SharedSettings  # noqa: E402


@pytest.fixture(autouse=True)
def fresh_settings():
    """Every test starts from the packaged config.yml."""
    SharedSettings.reset()
    yield
    SharedSettings.reset()
