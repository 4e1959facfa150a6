import pytest

from haarcp import builders


@pytest.fixture(scope="session")
def s3():
    return builders.symmetric(3)


@pytest.fixture(scope="session")
def s4():
    return builders.symmetric(4)


@pytest.fixture(scope="session")
def q8():
    return builders.quaternion8()


@pytest.fixture(scope="session")
def d4():
    return builders.dihedral(4)


@pytest.fixture(scope="session")
def a5():
    return builders.alternating(5)
