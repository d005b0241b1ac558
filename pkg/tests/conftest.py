import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ringlab.constructions import cyclic_ring, matrix_ring, upper_triangular_ring  # noqa: E402
from ringlab.corpus import load_corpus  # noqa: E402


@pytest.fixture(scope="session")
def corpus_entries():
    return load_corpus()


@pytest.fixture(scope="session")
def corpus(corpus_entries):
    """Default corpus rings by name."""
    return {e.ring.name: e.ring for e in corpus_entries}


@pytest.fixture(scope="session")
def small_corpus(corpus):
    return {n: R for n, R in corpus.items() if R.order <= 16}


@pytest.fixture
def Z2():
    return cyclic_ring(2)


@pytest.fixture
def Z4():
    return cyclic_ring(4)


@pytest.fixture
def T2():
    return upper_triangular_ring(cyclic_ring(2), 2)


@pytest.fixture
def M2():
    return matrix_ring(cyclic_ring(2), 2)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
