import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from aspectminer.conllu import load_conllu
from aspectminer.embeddings import load_glove

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def corpus_path():
    return os.path.join(FIXTURES, "corpus.conllu")


@pytest.fixture(scope="session")
def embeddings_path():
    return os.path.join(FIXTURES, "toy_embeddings.vec")


@pytest.fixture(scope="session")
def fixture_corpus(corpus_path):
    return load_conllu(corpus_path)


@pytest.fixture(scope="session")
def toy_store(embeddings_path):
    return load_glove(embeddings_path)
