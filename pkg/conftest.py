import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from graphs.catalog import build_catalog  # noqa: E402


@pytest.fixture(scope="session")
def catalog():
    return {entry.key: entry for entry in build_catalog()}


@pytest.fixture(scope="session")
def integral_entries(catalog):
    return [entry for entry in catalog.values() if entry.integral]
