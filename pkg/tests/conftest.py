import random

import pytest

from szq import build_field
from szq.szstd import sz_elements


@pytest.fixture(scope="session")
def F8():
    return build_field(1)


@pytest.fixture(scope="session")
def F32():
    return build_field(2)


@pytest.fixture(scope="session")
def F128():
    return build_field(3)


@pytest.fixture(scope="session")
def sz8(F8):
    """All 29120 elements of the standard copy at q = 8."""
    return sz_elements(F8)


@pytest.fixture(scope="session")
def sz8_set(sz8):
    return set(sz8)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
