import pytest

from singequiv.fixtures import build_fixture, fixture_presentation


@pytest.fixture(scope="session")
def dual():
    return build_fixture("dual")


@pytest.fixture(scope="session")
def a2():
    return build_fixture("a2")


@pytest.fixture(scope="session")
def e31():
    return build_fixture("e31")


@pytest.fixture(scope="session")
def e32():
    return build_fixture("e32")


@pytest.fixture(scope="session")
def e33():
    return build_fixture("e33", 2)


@pytest.fixture(scope="session")
def e31_pres():
    return fixture_presentation("e31")
