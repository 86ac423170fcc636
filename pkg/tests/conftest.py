import pytest
from hypothesis import settings

from agclcp import catalog

settings.register_profile("repro", deadline=None, derandomize=True, print_blob=True)
settings.load_profile("repro")


@pytest.fixture(scope="session")
def f4():
    return catalog.f4_curve()


@pytest.fixture(scope="session")
def f4_pts(f4):
    return catalog.f4_points(f4)


@pytest.fixture(scope="session")
def f8():
    return catalog.f8_curve()
