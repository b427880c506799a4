import pytest

from sporadica.codes import golay_lexicode
from sporadica.mathieu import chain_m12, chain_m24, m12_build, m24_from_file


@pytest.fixture(scope="session")
def golay():
    return golay_lexicode()


@pytest.fixture(scope="session")
def m24(golay):
    return m24_from_file(code=golay)


@pytest.fixture(scope="session")
def m24_chain(m24):
    return chain_m24(m24)


@pytest.fixture(scope="session")
def m12(m24, golay):
    return m12_build(m24, golay)


@pytest.fixture(scope="session")
def m12_chain(m12):
    return chain_m12(m12)
