import functools
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from degseq.graph_core import build_graph, complement  # noqa: E402
from degseq.hunt import auto_signatures  # noqa: E402
from degseq.transform import enumerate_class  # noqa: E402

settings.register_profile("default", max_examples=120, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_order=0, max_order=9):
    n = draw(st.integers(min_order, max_order))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [p for p, b in zip(pairs, bits) if b])


@functools.lru_cache(maxsize=None)
def class_members(m, n):
    return tuple(enumerate_class((m, n)).members())


@functools.lru_cache(maxsize=None)
def corpus(max_order=10):
    """(signature, member) for every two-clique class up to the given order."""
    return tuple((sig, g) for sig in auto_signatures(max_order) for g in class_members(*sig))


@functools.lru_cache(maxsize=None)
def complement_corpus(max_order=10):
    return tuple((sig, complement(g)) for sig, g in corpus(max_order))


ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
