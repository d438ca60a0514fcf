import pytest

from strategies import quotient_model


@pytest.fixture(scope="session")
def qmodel():
    return quotient_model()
