import pytest

from qtop.cli.catalog import build_catalog


@pytest.fixture(scope="session")
def catalog():
    return build_catalog()


@pytest.fixture(scope="session")
def catalog_bases(catalog):
    return {k: v.value for k, v in catalog.items() if v.kind == "base"}


@pytest.fixture(scope="session")
def catalog_monoids(catalog):
    return {k: v.value for k, v in catalog.items() if v.kind == "monoid"}


@pytest.fixture(scope="session")
def catalog_spaces(catalog):
    return {k: v.value for k, v in catalog.items() if v.kind == "space"}
