"""graph6 (short form, no header) and JSON edge-list I/O."""

from __future__ import annotations

import json
from pathlib import Path

from .errors import MalformedGraph6, ParseError, UnsupportedOrder
from .graph import Graph, graph_from_edges

MAX_ORDER = 62


def graph6_encode(g: Graph) -> str:
    n = g.n
    if n > MAX_ORDER:
        raise UnsupportedOrder(f"short graph6 form holds n <= {MAX_ORDER}, got {n}")
    bits = []
    for j in range(1, n):
        row = g.adjacency[j]
        for i in range(j):
            bits.append(1 if i in row else 0)
    bits.extend([0] * (-len(bits) % 6))
    chars = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        word = 0
        for b in bits[k:k + 6]:
            word = (word << 1) | b
        chars.append(chr(word + 63))
    return "".join(chars)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if not s:
        raise MalformedGraph6("empty graph6 string")
    if any(not 63 <= ord(ch) <= 126 for ch in s):
        raise MalformedGraph6(f"graph6 characters must lie in '?'..'~': {s!r}")
    n = ord(s[0]) - 63
    if n == 63:
        raise UnsupportedOrder("graph6 orders above 62 are not supported")
    m = n * (n - 1) // 2
    if len(s) - 1 != (m + 5) // 6:
        raise MalformedGraph6(f"graph6 of order {n} needs {(m + 5) // 6} data bytes, got {len(s) - 1}")
    bits = []
    for ch in s[1:]:
        word = ord(ch) - 63
        bits.extend((word >> k) & 1 for k in range(5, -1, -1))
    if any(bits[m:]):
        raise MalformedGraph6("non-zero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return graph_from_edges(n, edges)


def edge_list_to_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges]})


def edge_list_from_json(text: str) -> Graph:
    try:
        data = json.loads(text)
        n = data["n"]
        edges = data["edges"]
        if not isinstance(n, int) or not all(len(e) == 2 for e in edges):
            raise TypeError("bad shape")
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"not a JSON edge list: {exc}") from exc
    return graph_from_edges(n, edges)


def read_graph_file(path) -> Graph:
    """Read a ``.json`` edge list, or the first non-empty line of a graph6 file."""
    path = Path(path)
    text = path.read_text()
    if path.suffix.lower() == ".json":
        return edge_list_from_json(text)
    for line in text.splitlines():
        if line.strip():
            return graph6_decode(line)
    raise MalformedGraph6(f"{path} holds no graph6 line")
