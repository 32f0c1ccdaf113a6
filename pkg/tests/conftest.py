import itertools
import sys
from pathlib import Path

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from dicolour import MultiDigraph, MultiGraph  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def digraphs(draw, max_n=5, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, w) for u in range(n) for w in range(n) if u != w]
    arcs = draw(st.lists(st.sampled_from(pairs), max_size=2 * len(pairs))) if pairs else []
    return MultiDigraph(n, tuple(arcs))


@st.composite
def graphs(draw, max_n=5, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), max_size=2 * len(pairs))) if pairs else []
    return MultiGraph(n, tuple(edges))


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
