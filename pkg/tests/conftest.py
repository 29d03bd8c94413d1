import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from curvesci.corpus import random_corpus
from curvesci.words import SignedWord

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE_LINES: list[str] = []


@st.composite
def signed_words(draw, min_n=0, max_n=5):
    n = draw(st.integers(min_n, max_n))
    seq = draw(st.permutations([i for i in range(1, n + 1) for _ in range(2)]))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))
    return SignedWord([x * signs[x - 1] for x in seq])


@pytest.fixture(scope="session")
def corpus_200():
    return random_corpus(200, 5, seed=20240601)


@pytest.fixture(scope="session")
def corpus_100():
    return random_corpus(100, 4, seed=7, min_n=1)


@pytest.fixture(scope="session")
def rng():
    return random.Random(12345)


@pytest.fixture
def criterion(request):
    """Record a named acceptance criterion's outcome for the summary."""

    def record(name: str, ok: bool, detail: str = ""):
        line = f"[{'PASS' if ok else 'FAIL'}] {name}" + (f" -- {detail}" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
