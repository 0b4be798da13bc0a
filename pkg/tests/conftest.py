from itertools import product

import pytest

from edgebalance.graph import crown_graph


def brute_force_ebi(p, edges, both_splits=True):
    """Histogram of |v0 - v1| over every edge-friendly labeling of all 2^q.

    Written without the package so it can serve as an oracle. With
    ``both_splits`` false only labelings with ceil(q/2) 1-edges count.
    """
    q = len(edges)
    deg = [0] * p
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    hist = {}
    for lab in product((0, 1), repeat=q):
        e1 = sum(lab)
        if abs(q - 2 * e1) > 1 or (not both_splits and e1 != (q + 1) // 2):
            continue
        d1 = [0] * p
        for (u, v), x in zip(edges, lab):
            d1[u] += x
            d1[v] += x
        v1 = sum(2 * d1[i] > deg[i] for i in range(p))
        v0 = sum(2 * d1[i] < deg[i] for i in range(p))
        hist[abs(v0 - v1)] = hist.get(abs(v0 - v1), 0) + 1
    return dict(sorted(hist.items()))


def crown_ones(n, pairs):
    """(a_i, b_j) pairs -> vertex pairs of crown_graph(n)."""
    return [(i, n + j) for i, j in pairs]


@pytest.fixture(scope="session")
def crown4():
    return crown_graph(4)


@pytest.fixture(scope="session")
def crown5():
    return crown_graph(5)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
