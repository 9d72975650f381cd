import pytest

from besselseries import PrecisionContext


@pytest.fixture(scope="session")
def ctx():
    return PrecisionContext()


@pytest.fixture(scope="session")
def ctx_double():
    return PrecisionContext(working_digits=128, display_digits=34)
