import pytest

from lexseg import fixture


@pytest.fixture(scope="session")
def example2():
    return fixture("example2")


@pytest.fixture(scope="session")
def remark3():
    return fixture("remark3")
