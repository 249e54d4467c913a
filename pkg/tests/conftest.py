import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from polylcm.polyring import IntPoly


@pytest.fixture(scope="session")
def x3():
    return IntPoly((0, 0, 0, 1))


@pytest.fixture(scope="session")
def x3_plus_2x():
    return IntPoly((0, 2, 0, 1))


@pytest.fixture(scope="session")
def x4():
    return IntPoly((0, 0, 0, 0, 1))


@pytest.fixture(scope="session")
def x2_plus_1():
    return IntPoly((1, 0, 1))
