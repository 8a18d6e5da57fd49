from __future__ import annotations

import pytest

from resint.residual import build_instance
from resint.ring import GF


@pytest.fixture(scope="session")
def inst42():
    return build_instance(4, 2)


@pytest.fixture(scope="session")
def inst33():
    return build_instance(3, 3)


@pytest.fixture(scope="session")
def inst32():
    return build_instance(3, 2)


@pytest.fixture(scope="session")
def inst22():
    return build_instance(2, 2)


@pytest.fixture(scope="session")
def fp():
    return GF(32003)
