"""Connected simple graphs, shortest-path data and tree canonical codes."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import kernels
from .errors import (
    DisconnectedInput,
    DuplicateEdge,
    IndexOutOfRange,
    NotATree,
    OrderTooSmall,
    SelfLoop,
)


@dataclass(frozen=True)
class Graph:
    """Undirected, simple, connected graph on vertices ``0..n-1``.

    Build instances with :func:`graph_from_edges`; the constructor itself
    does not validate.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        indptr[1:] = np.cumsum([len(a) for a in self.adjacency])
        indices = np.fromiter((v for a in self.adjacency for v in a), dtype=np.int64, count=int(indptr[-1]))
        return indptr, indices

    def relabel(self, perm) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return graph_from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges])


def graph_from_edges(n: int, edges) -> Graph:
    if n < 1:
        raise OrderTooSmall(f"a graph needs at least one vertex, got n={n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u}, {v}) outside [0, {n})")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        if v in nbrs[u]:
            raise DuplicateEdge(f"edge ({u}, {v}) given twice")
        nbrs[u].add(v)
        nbrs[v].add(u)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in nbrs[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    if len(seen) != n:
        raise DisconnectedInput(f"graph has {n} vertices but only {len(seen)} reachable from vertex 0")
    return Graph(n, tuple(tuple(sorted(a)) for a in nbrs))


@dataclass(frozen=True)
class DistanceProfile:
    dist: np.ndarray
    ecc: np.ndarray
    diameter: int

    @property
    def radius(self) -> int:
        return int(self.ecc.min())


def distance_profile(g: Graph) -> DistanceProfile:
    indptr, indices = g.csr
    dist = kernels.bfs_all_pairs(indptr, indices, g.n)
    dist.setflags(write=False)
    ecc = dist.max(axis=1)
    ecc.setflags(write=False)
    return DistanceProfile(dist, ecc, int(ecc.max()))


def is_tree(g: Graph) -> bool:
    return g.num_edges == g.n - 1


def centers(g: Graph) -> list[int]:
    """Centre vertices of a tree (one or two), by repeated leaf stripping."""
    if not is_tree(g):
        raise NotATree("centres are only defined here for trees")
    deg = g.degrees()
    layer = [v for v in range(g.n) if deg[v] <= 1]
    remaining = g.n
    removed = [False] * g.n
    while remaining > 2:
        nxt = []
        for v in layer:
            removed[v] = True
        remaining -= len(layer)
        for v in layer:
            for w in g.adjacency[v]:
                if not removed[w]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    return [v for v in range(g.n) if not removed[v]]


def _rooted_code(g: Graph, root: int) -> bytes:
    parent = [-1] * g.n
    order = [root]
    for u in order:
        for v in g.adjacency[u]:
            if v != parent[u]:
                parent[v] = u
                order.append(v)
    children: list[list[bytes]] = [[] for _ in range(g.n)]
    code = b""
    for u in reversed(order):
        code = b"(" + b"".join(sorted(children[u])) + b")"
        if parent[u] >= 0:
            children[parent[u]].append(code)
    return code


def ahu_canonical(g: Graph) -> bytes:
    """Isomorphism-complete code of a tree: AHU parenthesis string rooted at
    the centre, taking the smaller string when there are two centres."""
    if not is_tree(g):
        raise NotATree(f"graph with n={g.n}, |E|={g.num_edges} is not a tree")
    return min(_rooted_code(g, c) for c in centers(g))
