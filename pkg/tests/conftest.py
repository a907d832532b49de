import itertools

import numpy as np
import pytest

from eccspectra.enumerate import free_trees

ACCEPTANCE_RESULTS = []


def floyd_warshall(n, edges):
    """Independent all-pairs distance oracle."""
    inf = 10**9
    d = np.full((n, n), inf, dtype=np.int64)
    np.fill_diagonal(d, 0)
    for u, v in edges:
        d[u, v] = d[v, u] = 1
    for k in range(n):
        d = np.minimum(d, d[:, [k]] + d[[k], :])
    return d


def ecc_matrix_bruteforce(n, edges):
    """ε(G) straight from the defining rule, one entry at a time."""
    d = floyd_warshall(n, edges)
    e = d.max(axis=1)
    m = np.zeros((n, n), dtype=np.int64)
    for u, v in itertools.product(range(n), repeat=2):
        if u != v and d[u, v] == min(e[u], e[v]):
            m[u, v] = d[u, v]
    return m


@pytest.fixture(scope="session")
def trees_upto_10():
    return [g for n in range(1, 11) for g in free_trees(n)]


@pytest.fixture(scope="session")
def trees_upto_12():
    return [g for n in range(1, 13) for g in free_trees(n)]


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)
