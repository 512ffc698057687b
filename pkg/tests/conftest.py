import pytest

from nglab.generators import fixture_catalog


@pytest.fixture(scope="session")
def fixtures():
    return fixture_catalog()
