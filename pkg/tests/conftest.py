import pytest

from attoclock.atom import catalog_lookup


@pytest.fixture
def he_clementi():
    return catalog_lookup("He:clementi")


@pytest.fixture
def he_kullie():
    return catalog_lookup("He:kullie")
