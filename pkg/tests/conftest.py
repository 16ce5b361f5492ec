"""
Shared fixtures for the hvec test suite.
"""

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from hvec.catalog import default_catalog  # noqa: E402
from hvec.schemas import HvecSettings  # noqa: E402

BIG_PRIME = 2147483647


@pytest.fixture
def big_prime():
    return BIG_PRIME


@pytest.fixture
def settings():
    """Default settings, independent of the hvec_config.yaml on disk."""
    return HvecSettings()


@pytest.fixture(scope="session")
def shipped_catalog():
    return default_catalog()


@pytest.fixture
def data_dir():
    return ROOT / "data"
