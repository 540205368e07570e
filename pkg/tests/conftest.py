from __future__ import annotations

import pytest

from arrcoh.arrangement import build_intersection_poset
from arrcoh.corpus import CORPUS_NAMES, corpus_arrangement


@pytest.fixture(scope="session")
def corpus():
    return {name: corpus_arrangement(name) for name in CORPUS_NAMES}


@pytest.fixture(scope="session")
def corpus_posets(corpus):
    return {name: build_intersection_poset(a) for name, a in corpus.items()}
