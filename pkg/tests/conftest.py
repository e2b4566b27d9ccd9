from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from tree_einstein.algebra import RationalMatrix
from tree_einstein.trees import Tree, iter_params

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def small_fractions(bound=6, denom=4):
    return st.builds(Fraction, st.integers(-bound, bound), st.integers(1, denom))


@st.composite
def rational_matrices(draw, min_n=1, max_n=5, symmetric=False):
    n = draw(st.integers(min_n, max_n))
    rows = [[draw(small_fractions()) for _ in range(n)] for _ in range(n)]
    if symmetric:
        for i in range(n):
            for j in range(i):
                rows[i][j] = rows[j][i]
    return RationalMatrix(rows)


@st.composite
def random_trees(draw, max_vertices=12):
    """Random labelled tree by attaching each new vertex to an earlier one."""
    n = draw(st.integers(2, max_vertices))
    edges = tuple((draw(st.integers(0, v - 1)), v) for v in range(1, n))
    return Tree(n, edges)


@st.composite
def caterpillar_params(draw, max_m=7, max_leaves=4):
    m = draw(st.integers(2, max_m))
    a = [draw(st.integers(0, max_leaves)) for _ in range(m)]
    a[0] = max(a[0], 1)
    a[-1] = max(a[-1], 1)
    return tuple(a)


def small_sweep():
    """All canonical parameters with m <= 6 and at most 8 leaves (902 in total)."""
    return [p for m in range(1, 7) for p in iter_params(m, 8)]


@pytest.fixture(scope="session")
def sweep():
    return small_sweep()


def _rooted_code(adj, v, parent):
    return "(" + "".join(sorted(_rooted_code(adj, u, v) for u in adj[v] if u != parent)) + ")"


def _centers(adj):
    n = len(adj)
    deg = [len(x) for x in adj]
    layer = [v for v in range(n) if deg[v] <= 1]
    left = n
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            for u in adj[v]:
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        layer = nxt
    return layer


def tree_code(edges, n):
    adj = [[] for _ in range(n)]
    for x, y in edges:
        adj[x].append(y)
        adj[y].append(x)
    return min(_rooted_code(adj, c, -1) for c in _centers(adj))


def all_trees(n_max):
    """Unlabelled trees by leaf growth with a center-rooted canonical code."""
    level = {tree_code((), 1): ()}
    out = {1: [()]}
    for n in range(2, n_max + 1):
        nxt = {}
        for edges in level.values():
            for v in range(n - 1):
                e = edges + ((v, n - 1),)
                nxt.setdefault(tree_code(e, n), e)
        level = nxt
        out[n] = list(nxt.values())
    return out


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
