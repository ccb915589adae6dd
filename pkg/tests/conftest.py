import sys
from itertools import combinations

from hypothesis import strategies as st

from hyperberge.core import Hypergraph


@st.composite
def hypergraphs(draw, r=None, max_n=7, max_e=7, multi=None):
    """Random valid r-graphs on 1..n, optionally with repeated edges."""
    r = draw(st.integers(2, 4)) if r is None else r
    n = draw(st.integers(r, max_n))
    simple = not draw(st.booleans()) if multi is None else not multi
    pool = list(combinations(range(1, n + 1), r))
    if simple:
        edges = draw(st.lists(st.sampled_from(pool), unique=True, max_size=min(max_e, len(pool))))
    else:
        edges = draw(st.lists(st.sampled_from(pool), max_size=max_e))
    return Hypergraph(r, n, tuple(edges), simple)


def relabel(h: Hypergraph, perm) -> Hypergraph:
    """Apply ``v -> perm[v - 1]`` to every edge."""
    return h.with_edges(tuple(sorted(perm[v - 1] for v in e)) for e in h.edges)


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.SUMMARY:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(acceptance.SUMMARY):
        terminalreporter.write_line(acceptance.SUMMARY[number])
