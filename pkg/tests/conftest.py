import pytest

from oddcycles import certify_ndl, paley
from oddcycles.corpus import certified_corpus, small_corpus


@pytest.fixture(scope="session")
def small_graphs():
    return small_corpus()


@pytest.fixture(scope="session")
def certified_graphs():
    return [(name, G, certify_ndl(G)) for name, G in certified_corpus()]


@pytest.fixture(scope="session")
def paley101():
    G = paley(101)
    return G, certify_ndl(G)
