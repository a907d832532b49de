"""Named trees with fixed vertex layouts.

Layouts
-------
``path(n)``
    vertices ``0..n-1`` in path order.
``star(n)``
    centre ``0``, leaves ``1..n-1``.
``double_broom(n, d, a, b)``
    spine ``v_0..v_d`` at ``0..d``; pendants ``u_1..u_a`` on ``v_1`` at
    ``d+1..d+a``; pendants ``w_1..w_b`` on ``v_{d-1}`` at ``d+a+1..n-1``.
``spider_h(p, q)``
    centre ``w = 0``; ``a_1..a_p`` at ``1..p``; ``b_1..b_q`` at
    ``p+1..p+q``; ``c_1..c_q`` at ``p+q+1..p+2q`` with ``c_i`` hanging from
    ``b_i``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import OrderTooSmall, ParameterMismatch, ParameterOutOfRange, ParseError
from .graph import Graph, graph_from_edges


def path(n: int) -> Graph:
    if n < 1:
        raise OrderTooSmall(f"path needs n >= 1, got {n}")
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    if n < 2:
        raise OrderTooSmall(f"star needs n >= 2, got {n}")
    return graph_from_edges(n, [(0, i) for i in range(1, n)])


def double_broom(n: int, d: int, a: int, b: int) -> Graph:
    """D_{n,d}^{a,b}: a path of length ``d`` with ``a`` leaves on its second
    vertex and ``b`` leaves on its penultimate vertex."""
    if d < 2:
        raise OrderTooSmall(f"double broom needs d >= 2, got {d}")
    if a < 0 or b < 0:
        raise ParameterOutOfRange(f"pendant counts must be non-negative, got a={a}, b={b}")
    if a + b != n - d - 1:
        raise ParameterMismatch(f"a + b must equal n - d - 1 = {n - d - 1}, got {a + b}")
    edges = [(i, i + 1) for i in range(d)]
    edges += [(1, d + 1 + k) for k in range(a)]
    edges += [(d - 1, d + 1 + a + k) for k in range(b)]
    return graph_from_edges(n, edges)


def spider_h(p: int, q: int) -> Graph:
    """H_{p,q}: star on p+q+1 vertices with a pendant added to q of its leaves."""
    if p < 0 or q < 2:
        raise ParameterOutOfRange(f"H_(p,q) needs p >= 0 and q >= 2, got p={p}, q={q}")
    n = p + 2 * q + 1
    edges = [(0, i) for i in range(1, p + q + 1)]
    edges += [(p + 1 + i, p + q + 1 + i) for i in range(q)]
    return graph_from_edges(n, edges)


_ARITY = {"path": 1, "star": 1, "broom": 4, "spider": 2}
_BUILDERS = {"path": path, "star": star, "broom": double_broom, "spider": spider_h}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        """Parse ``path:n``, ``star:n``, ``broom:n,d,a,b`` or ``spider:p,q``."""
        m = re.fullmatch(r"\s*(\w+)\s*:\s*([-\d,\s]+)", text)
        if not m or m.group(1) not in _ARITY:
            raise ParseError(f"unrecognised family spec {text!r}")
        kind = m.group(1)
        try:
            params = tuple(int(x) for x in m.group(2).split(","))
        except ValueError as exc:
            raise ParseError(f"bad parameters in {text!r}") from exc
        if len(params) != _ARITY[kind]:
            raise ParseError(f"{kind} takes {_ARITY[kind]} parameter(s), got {len(params)}")
        return cls(kind, params)

    def build(self) -> Graph:
        return _BUILDERS[self.kind](*self.params)

    def __str__(self) -> str:
        return f"{self.kind}:{','.join(map(str, self.params))}"
