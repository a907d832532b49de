"""Exhaustive generation of non-isomorphic free trees.

Trees are produced as canonical level sequences rooted at a centre, walking
rooted trees in Beyer-Hedetniemi order and keeping only the centre-rooted
canonical representative (the Wright-Richmond-Odlyzko-McKay condition).
Whenever the first root branch rules a candidate out, every rooted tree that
keeps that branch is also ruled out, so the walk jumps past them.
"""

from __future__ import annotations

from collections.abc import Iterator

from . import kernels
from .errors import OrderOutOfRange
from .graph import Graph, ahu_canonical, distance_profile, graph_from_edges

MAX_ORDER = 20
ORACLE_MAX_ORDER = 9


def _successor(levels: list[int], p: int | None = None) -> list[int] | None:
    """Next rooted tree in Beyer-Hedetniemi order, changing positions >= p."""
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p <= 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    out = levels[:p]
    for i in range(p, len(levels)):
        out.append(out[i - p + q])
    return out


def _first_branch_end(levels: list[int]) -> int:
    """Index one past the first subtree of the root."""
    for i in range(2, len(levels)):
        if levels[i] == 1:
            return i
    return len(levels)


def _is_centre_canonical(levels: list[int]) -> bool:
    m = _first_branch_end(levels)
    left = [x - 1 for x in levels[1:m]]
    rest = [0] + levels[m:]
    hl, hr = max(left), max(rest)
    if hl != hr:
        return hl < hr
    if len(left) != len(rest):
        return len(left) < len(rest)
    return left <= rest


def level_sequences(n: int) -> Iterator[tuple[int, ...]]:
    if not 1 <= n <= MAX_ORDER:
        raise OrderOutOfRange(f"free-tree enumeration supports 1 <= n <= {MAX_ORDER}, got {n}")
    if n <= 2:
        yield tuple(range(n))
        return
    levels: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        if _is_centre_canonical(levels):
            yield tuple(levels)
            levels = _successor(levels)
        else:
            p = _first_branch_end(levels) - 1
            levels = _successor(levels, p if levels[p] > 1 else None)


def tree_from_levels(levels) -> Graph:
    last_at: dict[int, int] = {}
    edges = []
    for v, lv in enumerate(levels):
        if lv > 0:
            edges.append((last_at[lv - 1], v))
        last_at[lv] = v
    return graph_from_edges(len(levels), edges)


def free_trees(n: int) -> Iterator[Graph]:
    """Every tree on ``n`` vertices up to isomorphism, once each, deterministic order."""
    for levels in level_sequences(n):
        yield tree_from_levels(levels)


def trees_with_diameter(n: int, d: int) -> Iterator[Graph]:
    if not 1 <= n <= MAX_ORDER:
        raise OrderOutOfRange(f"free-tree enumeration supports 1 <= n <= {MAX_ORDER}, got {n}")
    if not (0 if n == 1 else 1) <= d <= n - 1:
        raise OrderOutOfRange(f"diameter {d} impossible for a tree on {n} vertices")
    for g in free_trees(n):
        if distance_profile(g).diameter == d:
            yield g


def labeled_tree_oracle(n: int) -> set[bytes]:
    """Canonical codes of all labelled trees on ``n`` vertices (via Pruefer codes).

    The compiled path buckets the n^(n-2) labelled trees by an integer AHU
    code and canonicalises one representative per bucket with
    :func:`~eccspectra.graph.ahu_canonical`.
    """
    if not 2 <= n <= ORACLE_MAX_ORDER:
        raise OrderOutOfRange(f"labelled oracle is capped at 2 <= n <= {ORACLE_MAX_ORDER}, got {n}")
    codes = set()
    for idx in kernels.prufer_class_representatives(n):
        seq = kernels.prufer_unrank(idx, n)
        codes.add(ahu_canonical(graph_from_edges(n, kernels.prufer_decode(seq, n))))
    return codes
