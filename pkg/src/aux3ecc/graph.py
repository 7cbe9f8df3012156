"""Immutable undirected multigraph with stable edge identities."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input."""


class Multigraph:
    """Undirected multigraph over vertices ``0..n-1``.

    Edge ``i`` is ``edges[i]``. Parallel edges keep distinct ids. Self-loops
    stay in the edge table but are kept out of ``adj`` and listed per vertex
    in ``loops``, since they never take part in a cut.

    ``adj[v]`` holds ``(edge_id, other_endpoint)`` half-edges in input order;
    that order drives the depth-first traversal of the decomposer.
    """

    __slots__ = ("n", "edges", "adj", "loops")

    def __init__(self, n: int, edges: Sequence[tuple[int, int]]):
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(edges)
        self.adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        self.loops: list[list[int]] = [[] for _ in range(n)]
        for eid, (u, v) in enumerate(self.edges):
            if u == v:
                self.loops[u].append(eid)
            else:
                self.adj[u].append((eid, v))
                self.adj[v].append((eid, u))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        # a self-loop contributes two half-edges
        return len(self.adj[v]) + 2 * len(self.loops[v])

    def endpoints(self, eid: int) -> tuple[int, int]:
        return self.edges[eid]

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Multigraph:
    """Build a multigraph; edge id ``i`` is ``pairs[i]``.

    Raises GraphError naming the index of the first pair with an endpoint
    outside ``[0, n)``.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    edges = []
    for i, pair in enumerate(pairs):
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"pair {i} ({u}, {v}) has an endpoint outside [0, {n})")
        edges.append((int(u), int(v)))
    return Multigraph(n, edges)


def degree(g: Multigraph, v: int) -> int:
    return g.degree(v)


def connected_components(g: Multigraph) -> list[list[int]]:
    """Vertex sets of the connected components, ordered by smallest vertex.

    Each set is returned sorted.
    """
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for _, y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comp.sort()
        comps.append(comp)
    return comps
