import pytest

from crdom import oracle


@pytest.fixture(scope="session")
def table5():
    return oracle.brute_table(5)


@pytest.fixture(scope="session")
def table6():
    return oracle.brute_table(6)


@pytest.fixture(scope="session")
def table7():
    return oracle.brute_table(7)
