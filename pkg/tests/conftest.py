import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from bigraded_lc.families import corpus_bigraded, corpus_monomial


@pytest.fixture(scope="session")
def corpus():
    return corpus_bigraded()


@pytest.fixture(scope="session")
def monomial_corpus():
    return corpus_monomial()
