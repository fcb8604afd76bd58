import pytest

from sposet import corpus, corpus_names, from_facets

FIELD_LABELS = ("q", "fp:2", "fp:3")


@pytest.fixture(scope="session")
def corpus_posets():
    return {name: corpus(name) for name in corpus_names()}


@pytest.fixture(scope="session")
def torus7(corpus_posets):
    return corpus_posets["torus7"]


@pytest.fixture(scope="session")
def bd_triangle(corpus_posets):
    return corpus_posets["boundary_simplex(2)"]


@pytest.fixture(scope="session")
def full_triangle():
    return from_facets([{"v1", "v2", "v3"}], name="triangle")
