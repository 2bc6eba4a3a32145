import sys
from pathlib import Path

import pytest

from lieid.lie_core import DEFAULT_DEGREE_CAP, set_degree_cap

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture
def degree_cap_guard():
    """Restore the global degree cap after a test that changes it."""
    yield set_degree_cap
    set_degree_cap(DEFAULT_DEGREE_CAP)
