"""Vertex-labelled graphs with input/output, and homomorphism search."""
from __future__ import annotations

from dataclasses import dataclass

from .gstring import GuardedString
from .syntax import TOP


@dataclass(frozen=True)
class Graph:
    labels: tuple[str, ...]
    edges: frozenset[tuple[int, str, int]]
    input: int = 0
    output: int = 0

    def __post_init__(self):
        n = len(self.labels)
        if not (0 <= self.input < n and 0 <= self.output < n):
            raise ValueError("input/output out of range")
        for s, x, t in self.edges:
            if x == TOP or not (0 <= s < n and 0 <= t < n):
                raise ValueError(f"bad edge {(s, x, t)}")

    @property
    def size(self) -> int:
        return len(self.labels)


def graph_of(u: GuardedString) -> Graph:
    edges = frozenset((i, x, i + 1) for i, x in enumerate(u.symbols) if x != TOP)
    return Graph(u.atoms, edges, 0, len(u))


def hom_exists(g: Graph, h: Graph) -> bool:
    """Is there a map from the vertices of ``g`` to those of ``h`` preserving
    labels, labelled edges, input and output?"""
    out_h: dict[tuple[int, str], set[int]] = {}
    in_h: dict[tuple[int, str], set[int]] = {}
    for s, x, t in h.edges:
        out_h.setdefault((s, x), set()).add(t)
        in_h.setdefault((t, x), set()).add(s)

    adj: list[list[tuple[str, int, bool]]] = [[] for _ in range(g.size)]
    for s, x, t in g.edges:
        adj[s].append((x, t, True))
        adj[t].append((x, s, False))

    domains = [{w for w in range(h.size) if h.labels[w] == g.labels[v]} for v in range(g.size)]
    for v, target in ((g.input, h.input), (g.output, h.output)):
        domains[v] &= {target}
    if any(not d for d in domains):
        return False

    # most constrained first, then neighbours of assigned vertices
    order: list[int] = []
    placed: set[int] = set()
    while len(order) < g.size:
        frontier = [v for v in range(g.size) if v not in placed]
        v = min(frontier, key=lambda v: (not any(w in placed for _, w, _ in adj[v]), len(domains[v]), v))
        order.append(v)
        placed.add(v)

    mapping: dict[int, int] = {}

    def consistent(v, w):
        for x, other, outgoing in adj[v]:
            if other in mapping:
                table = out_h if outgoing else in_h
                if mapping[other] not in table.get((w, x), ()):
                    return False
            elif other == v:
                if w not in out_h.get((w, x), ()):
                    return False
        return True

    def search(k):
        if k == len(order):
            return True
        v = order[k]
        for w in sorted(domains[v]):
            if consistent(v, w):
                mapping[v] = w
                if search(k + 1):
                    return True
                del mapping[v]
        return False

    return search(0)


def dominated(u: GuardedString, v: GuardedString) -> bool:
    """``g(u) <| g(v)``: a homomorphism from the graph of ``v`` to that of ``u``."""
    return hom_exists(graph_of(v), graph_of(u))
