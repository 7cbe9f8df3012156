"""Brute-force reference for small graphs.

Everything here is deliberately naive: bridges and 2-cuts by exhaustive
deletion, 3-edge-connectivity by unit-capacity augmenting paths, and the
auxiliary subgraphs by replacing every 2-cut directly. None of it shares code
with the decomposer.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from .decomposer import Auxiliary, Decomposition, Original
from .graph import Multigraph, from_edge_list

DEFAULT_MAX_EDGES = 64


class OracleSizeError(ValueError):
    """The instance is too large for exhaustive checking."""


@dataclass
class CutReport:
    bridges: list[int]
    two_cuts: list[tuple[int, int]]


@dataclass
class ReferencePartition:
    """3-edge-connected classes plus, per class, the original edge ids with
    both ends inside it and the auxiliary endpoint pairs (u <= v)."""

    classes: list[list[int]]
    original_edges: list[list[int]]
    aux_pairs: list[list[tuple[int, int]]]


@dataclass
class Verdict:
    ok: bool
    diff: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        return "PASS" if self.ok else "FAIL: " + "; ".join(self.diff)


def _guard(g: Multigraph, max_edges: int) -> None:
    if g.m > max_edges:
        raise OracleSizeError(f"{g.m} edges exceeds the oracle limit of {max_edges}")


def _labels(g: Multigraph, removed: Iterable[int] = ()) -> list[int]:
    """Connected-component label of every vertex after deleting edges."""
    gone = set(removed)
    nbrs = [[] for _ in range(g.n)]
    for eid, (u, v) in enumerate(g.edges):
        if eid not in gone and u != v:
            nbrs[u].append(v)
            nbrs[v].append(u)
    label = [-1] * g.n
    for s in range(g.n):
        if label[s] >= 0:
            continue
        label[s] = s
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in nbrs[x]:
                if label[y] < 0:
                    label[y] = s
                    queue.append(y)
    return label


def _separates(g: Multigraph, removed: Iterable[int]) -> bool:
    """Whether deleting the edges separates the ends of one of them."""
    removed = list(removed)
    after = _labels(g, removed)
    return any(after[g.edges[e][0]] != after[g.edges[e][1]] for e in removed)


def max_flow_value(g: Multigraph, s: int, t: int, cap: int = 3) -> int:
    """Number of edge-disjoint s-t paths, counted up to ``cap``."""
    if s == t:
        raise ValueError("source and sink must differ")
    nbrs = [[] for _ in range(g.n)]
    for eid, (a, b) in enumerate(g.edges):
        if a != b:
            nbrs[a].append(eid)
            nbrs[b].append(eid)
    flow = [0] * g.m  # +1: a -> b, -1: b -> a
    value = 0
    while value < cap:
        prev: list[Optional[tuple[int, int]]] = [None] * g.n
        prev[s] = (-1, -1)
        queue = deque([s])
        while queue and prev[t] is None:
            x = queue.popleft()
            for eid in nbrs[x]:
                a, b = g.edges[eid]
                if x == a:
                    y, ok = b, flow[eid] < 1
                else:
                    y, ok = a, flow[eid] > -1
                if ok and prev[y] is None:
                    prev[y] = (x, eid)
                    queue.append(y)
        if prev[t] is None:
            break
        y = t
        while y != s:
            x, eid = prev[y]
            flow[eid] += 1 if g.edges[eid][0] == x else -1
            y = x
        value += 1
    return value


def enumerate_cuts(g: Multigraph, max_edges: int = DEFAULT_MAX_EDGES) -> CutReport:
    """All bridges and all minimal 2-cuts (pairs without a bridge)."""
    _guard(g, max_edges)
    candidates = [e for e, (u, v) in enumerate(g.edges) if u != v]
    bridges = [e for e in candidates if _separates(g, [e])]
    rest = [e for e in candidates if e not in set(bridges)]
    two_cuts = [(e, f) for e, f in combinations(rest, 2) if _separates(g, [e, f])]
    return CutReport(bridges, two_cuts)


def three_ecc_classes(g: Multigraph, max_edges: int = DEFAULT_MAX_EDGES) -> list[list[int]]:
    """Classes of u ~ v iff three edge-disjoint u-v paths exist.

    Pairs are tested exhaustively, so transitivity is checked rather than
    assumed.
    """
    _guard(g, max_edges)
    label = _labels(g)
    three = {}
    for u, v in combinations(range(g.n), 2):
        three[u, v] = label[u] == label[v] and max_flow_value(g, u, v, 3) == 3
    cls = list(range(g.n))
    for (u, v), ok in three.items():
        if ok and cls[v] == v:
            cls[v] = cls[u]
    classes: dict[int, list[int]] = {}
    for v in range(g.n):
        classes.setdefault(cls[v], []).append(v)
    out = sorted(classes.values())
    for c in out:
        for u, v in combinations(c, 2):
            if not three[u, v]:
                raise AssertionError(f"3-edge-connectivity not transitive at {u}, {v}")
    for u, v in combinations(range(g.n), 2):
        if three[u, v] and cls[u] != cls[v]:
            raise AssertionError(f"{u} and {v} are 3-edge-connected but split")
    return out


def reference_aux_subgraphs(g: Multigraph, max_edges: int = DEFAULT_MAX_EDGES) -> ReferencePartition:
    """Replace every 2-cut {(v, w), (v2, w2)} by (v, v2) and (w, w2) wherever
    the same-side endpoints differ and share a class."""
    classes = three_ecc_classes(g, max_edges)
    owner = [0] * g.n
    for i, c in enumerate(classes):
        for v in c:
            owner[v] = i
    original = [[] for _ in classes]
    for eid, (u, v) in enumerate(g.edges):
        if owner[u] == owner[v]:
            original[owner[u]].append(eid)
    aux: list[list[tuple[int, int]]] = [[] for _ in classes]
    for e, f in enumerate_cuts(g, max_edges).two_cuts:
        side = _labels(g, [e, f])
        (a, b), (c, d) = g.edges[e], g.edges[f]
        for x in (a, b):
            y = c if side[c] == side[x] else d
            if x != y and owner[x] == owner[y]:
                aux[owner[x]].append((min(x, y), max(x, y)))
    return ReferencePartition(classes, original, aux)


def subgraph_is_3ec(vertices: list[int], pairs: list[tuple[int, int]]) -> bool:
    """Whether the graph on ``vertices`` with edge list ``pairs`` is
    3-edge-connected (pairwise flow)."""
    index = {v: i for i, v in enumerate(vertices)}
    h = from_edge_list(len(vertices), [(index[a], index[b]) for a, b in pairs])
    return all(max_flow_value(h, s, t, 3) == 3 for s, t in combinations(range(h.n), 2))


def check_equivalence(dec: Decomposition, ref: ReferencePartition,
                      check_connectivity: bool = True) -> Verdict:
    """Compare a decomposition with the reference construction."""
    diff = []
    mine = sorted(sorted(c.sigma) for c in dec.components)
    if mine != sorted(ref.classes):
        diff.append(f"partition {mine} != reference {sorted(ref.classes)}")
        return Verdict(False, diff)
    by_class = {tuple(c): i for i, c in enumerate(ref.classes)}
    for comp in dec.components:
        key = tuple(sorted(comp.sigma))
        i = by_class[key]
        orig = Counter(e.edge_id for e in comp.alpha if isinstance(e, Original))
        want = Counter(ref.original_edges[i])
        for eid in sorted((want - orig).elements()):
            diff.append(f"component {list(key)}: missing original edge {eid} {dec.edges[eid]}")
        for eid in sorted((orig - want).elements()):
            diff.append(f"component {list(key)}: unexpected original edge {eid} {dec.edges[eid]}")
        aux = Counter((min(e.u, e.v), max(e.u, e.v)) for e in comp.alpha if isinstance(e, Auxiliary))
        want_aux = Counter(ref.aux_pairs[i])
        for p in sorted((want_aux - aux).elements()):
            diff.append(f"component {list(key)}: missing auxiliary edge {p}")
        for p in sorted((aux - want_aux).elements()):
            diff.append(f"component {list(key)}: unexpected auxiliary edge {p}")
        if check_connectivity and len(comp.sigma) >= 2:
            pairs = [dec.endpoints(e) for e in comp.alpha]
            if not subgraph_is_3ec(sorted(comp.sigma), pairs):
                diff.append(f"component {list(key)}: auxiliary subgraph not 3-edge-connected")
    return Verdict(not diff, diff)


def verify(g: Multigraph, dec: Decomposition, max_edges: int = DEFAULT_MAX_EDGES) -> Verdict:
    return check_equivalence(dec, reference_aux_subgraphs(g, max_edges))
