import pytest

from quatpoly.syzygy import gb_multilinear, gb_vector


@pytest.fixture(scope="session")
def base_v33():
    return gb_vector(3, 3)


@pytest.fixture(scope="session")
def base_v36():
    return gb_vector(3, 6)


@pytest.fixture(scope="session")
def base_v45():
    return gb_vector(4, 5)


@pytest.fixture(scope="session")
def base_v46():
    return gb_vector(4, 6)


@pytest.fixture(scope="session")
def base_m4():
    return gb_multilinear(4)


@pytest.fixture(scope="session")
def base_m5():
    return gb_multilinear(5)
