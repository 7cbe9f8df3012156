"""Single-pass 3-edge-connected decomposition with auxiliary subgraphs.

One depth-first search per connected component. Supervertices are grown by
absorb-eject contraction; every supervertex that ends up with degree one or
two in the contracted graph is ejected as a finished 3-edge-connected
component together with the edge set of its auxiliary subgraph.

Internally every edge that can land in an output edge set gets an integer
uid: original edges keep their ``EdgeId`` and auxiliary edges are numbered
from ``m`` upward. The per-vertex sets sigma (vertices) and alpha (edges) are
singly linked lists threaded through flat arrays so both concatenation and
insertion are O(1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Union

from .graph import Multigraph


class InvariantViolation(AssertionError):
    """A debug-mode structural check failed."""


class Original(NamedTuple):
    edge_id: int


class Auxiliary(NamedTuple):
    u: int
    v: int
    cut: int  # index into Decomposition.two_cuts of the generating 2-cut


OutputEdge = Union[Original, Auxiliary]


class Ear(NamedTuple):
    """A back-edge ``tail -> head`` standing in as an ear; ``via`` is the uid
    of the concrete edge currently embodying it."""

    tail: int
    head: int
    via: int


# ear value of a vertex whose parent edge is a bridge, or of a root
INFINITY = None

EarValue = Optional[Ear]


@dataclass
class WorkCounters:
    dfs_steps: int = 0
    path_link_traversals: int = 0
    alpha_insertions: int = 0
    ear_comparisons: int = 0

    def as_dict(self) -> dict[str, int]:
        return {
            "dfs_steps": self.dfs_steps,
            "path_link_traversals": self.path_link_traversals,
            "alpha_insertions": self.alpha_insertions,
            "ear_comparisons": self.ear_comparisons,
        }


@dataclass
class Component:
    sigma: list[int]
    alpha: list[OutputEdge]


@dataclass
class Decomposition:
    """Result of :func:`decompose`.

    ``components`` are in ejection order (a DFS root's component closes its
    connected component). ``two_cuts`` lists the 2-cuts met at ejection time,
    as the embodiments current at that moment.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    components: list[Component] = field(default_factory=list)
    bridges: list[int] = field(default_factory=list)
    two_cuts: list[tuple[OutputEdge, OutputEdge]] = field(default_factory=list)

    def endpoints(self, e: OutputEdge) -> tuple[int, int]:
        if isinstance(e, Original):
            return self.edges[e.edge_id]
        return (e.u, e.v)

    def component_of(self) -> list[int]:
        """Index of the owning component for every vertex."""
        owner = [-1] * self.n
        for i, comp in enumerate(self.components):
            for v in comp.sigma:
                owner[v] = i
        return owner


class DecompState:
    """Per-run DFS bookkeeping for the contraction algorithm.

    Vertex-indexed arrays use ``-1`` for "none". ``next_`` links form the
    current w-paths. ``ear`` holds :class:`Ear` values or ``INFINITY``.
    """

    def __init__(self, g: Multigraph, debug: bool = False):
        n, m = g.n, g.m
        self.g = g
        self.debug = debug
        self.m = m
        self.cnt = 1
        self.dfs = [0] * n
        self.nd = [1] * n
        self.parent = [-1] * n
        self.tree_edge = [-1] * n  # original tree edge, skipped once in L[w]
        self.parent_edge = [-1] * n  # uid of the current embodiment of the parent edge
        self.deg = [0] * n
        self.next_ = [-1] * n
        self.ear: list[EarValue] = [INFINITY] * n
        self.inc: list[Optional[list[int]]] = [None] * n
        self.open = [False] * n
        self.pos = [0] * n
        # sigma lists: head of sigma(w) is w itself
        self.sig_next = [-1] * n
        self.sig_tail = list(range(n))
        # alpha lists threaded through uid links
        self.alpha_head = [-1] * n
        self.alpha_tail = [-1] * n
        self.link = [-1] * m
        self.aux: list[tuple[int, int, int]] = []
        self.inserted = bytearray(m) if debug else None
        self.counters = WorkCounters()
        self.components: list[tuple[list[int], list[int]]] = []
        self.bridges: list[int] = []
        self.two_cuts: list[tuple[int, int]] = []

    # ---- edge bags -------------------------------------------------------

    def new_aux(self, u: int, v: int, cut: int) -> int:
        uid = self.m + len(self.aux)
        self.aux.append((u, v, cut))
        self.link.append(-1)
        if self.inserted is not None:
            self.inserted.append(0)
        return uid

    def alpha_add(self, w: int, uid: int) -> None:
        self.counters.alpha_insertions += 1
        if self.inserted is not None:
            if self.inserted[uid]:
                raise InvariantViolation(f"edge uid {uid} inserted into alpha twice")
            self.inserted[uid] = 1
        self.link[uid] = -1
        tail = self.alpha_tail[w]
        if tail < 0:
            self.alpha_head[w] = uid
        else:
            self.link[tail] = uid
        self.alpha_tail[w] = uid

    def merge(self, w: int, x: int) -> None:
        """Move sigma(x) and alpha(x) into w; x's bags become empty."""
        sig_tail = self.sig_tail
        self.sig_next[sig_tail[w]] = x
        sig_tail[w] = sig_tail[x]
        head = self.alpha_head[x]
        if head >= 0:
            tail = self.alpha_tail[w]
            if tail < 0:
                self.alpha_head[w] = head
            else:
                self.link[tail] = head
            self.alpha_tail[w] = self.alpha_tail[x]
            self.alpha_head[x] = self.alpha_tail[x] = -1

    def emit(self, u: int) -> None:
        sigma = []
        x = u
        while x >= 0:
            sigma.append(x)
            x = self.sig_next[x]
        alpha = []
        e = self.alpha_head[u]
        while e >= 0:
            alpha.append(e)
            e = self.link[e]
        self.alpha_head[u] = self.alpha_tail[u] = -1
        self.components.append((sigma, alpha))

    # ---- tree order and ear ranking ---------------------------------------

    def is_ancestor(self, a: int, b: int) -> bool:
        """True iff a is an ancestor of b (reflexive) in the DFS tree."""
        da, db = self.dfs[a], self.dfs[b]
        if self.open[a]:
            return da <= db
        return da <= db < da + self.nd[a]

    def ear_less(self, a: EarValue, b: EarValue, w: int) -> bool:
        """Strict lexicographic back-edge order, with INFINITY ranked
        relative to the context vertex w."""
        self.counters.ear_comparisons += 1
        if a is None:
            return b is not None and self.is_ancestor(w, b.head)
        if b is None:
            return (a.head != w and self.is_ancestor(a.head, w)
                    and self.is_ancestor(w, a.tail))
        if a.head != b.head:
            return self.dfs[a.head] < self.dfs[b.head]
        ta, tb = a.tail, b.tail
        if ta == tb:
            return a.via < b.via
        if self.is_ancestor(tb, ta):
            return True
        if self.is_ancestor(ta, tb):
            return False
        return self.dfs[ta] < self.dfs[tb]

    def ear_le(self, a: EarValue, b: EarValue, w: int) -> bool:
        if a is None or b is None:
            if a is b:
                return True
        elif a.via == b.via:
            return True
        return self.ear_less(a, b, w)

    # ---- contraction procedures -------------------------------------------

    def gen_aux_edges(self, w: int, u: int) -> tuple[int, bool]:
        """Eject u (deg(u) <= 2) and finish its auxiliary subgraph.

        Returns the new head of the u-path (``u`` itself is removed from it)
        and the Null flag, true when the u-path vanished.
        """
        ejected = u
        null = False
        if self.deg[u] == 1:
            if self.debug and self.ear[u] is not INFINITY:
                raise InvariantViolation(f"bridge child {u} has a finite ear")
            self.bridges.append(self.parent_edge[u])
            # the bridge leaves the contracted graph, so w loses one edge end
            self.deg[w] -= 1
            null = True
        elif self.next_[u] < 0:
            # 2-cut {(w -> u), ear(u)}
            e = self.ear[u]
            cut = len(self.two_cuts)
            self.two_cuts.append((self.parent_edge[u], e.via))
            uu, d = e.tail, e.head
            if w != d:
                self.ear[u] = Ear(w, d, self.new_aux(w, d, cut))
            if u != uu:
                self.alpha_add(u, self.new_aux(u, uu, cut))
            null = True
        else:
            # 2-cut {(w -> u), (parent(u1) -> u1)}
            u1 = self.next_[u]
            uu = self.parent[u1]
            cut = len(self.two_cuts)
            self.two_cuts.append((self.parent_edge[u], self.parent_edge[u1]))
            self.parent[u1] = w
            self.parent_edge[u1] = self.new_aux(w, u1, cut)
            if u != uu:
                self.alpha_add(u, self.new_aux(u, uu, cut))
            u = u1
        self.emit(ejected)
        return u, null

    def absorb_ear(self, w: int, u: int, null: bool) -> None:
        """w absorbs the path starting at u, or just ear(w) when u is none."""
        if null:
            return
        if u < 0:
            e = self.ear[w]
            if e is not None:
                self.alpha_add(w, e.via)
            return
        deg, next_ = self.deg, self.next_
        x = u
        while x >= 0:
            self.merge(w, x)
            self.alpha_add(w, self.parent_edge[x])
            deg[w] += deg[x] - 2
            x = next_[x]
            self.counters.path_link_traversals += 1
        self.alpha_add(w, self.ear[u].via)

    def absorb_subpath(self, w: int, u: int) -> None:
        """Handle a stored incoming back-edge from u: absorb the prefix of the
        w-path whose supervertices are ancestors of u."""
        deg, next_, dfs, nd = self.deg, self.next_, self.dfs, self.nd
        deg[w] -= 2
        du = dfs[u]
        x = next_[w]
        while x >= 0 and dfs[x] <= du < dfs[x] + nd[x]:
            self.merge(w, x)
            self.alpha_add(w, self.parent_edge[x])
            deg[w] += deg[x] - 2
            x = next_[x]
            self.counters.path_link_traversals += 1
        next_[w] = x

    # ---- traversal --------------------------------------------------------

    def backtrack(self, w: int, u: int) -> None:
        """Post-processing of child u once its adjacency list is done."""
        self.nd[w] += self.nd[u]
        null = False
        if self.deg[u] <= 2:
            u, null = self.gen_aux_edges(w, u)
        eu = self.ear[u]
        if self.ear_le(self.ear[w], eu, w):
            self.absorb_ear(w, u, null)
            if null and eu is not None and eu.head != w and self.is_ancestor(eu.head, w):
                # u-path replaced by the embodiment (w -> t(ear(u)))
                self.alpha_add(w, eu.via)
        else:
            self.absorb_ear(w, self.next_[w], False)
            self.next_[w] = -1 if null else u
            self.ear[w] = eu

    def finish(self, w: int) -> None:
        inc = self.inc[w]
        if inc is not None:
            for u in inc:
                self.absorb_subpath(w, u)
            self.inc[w] = None
        if self.debug:
            self.check_path(w, inc or [])
        self.open[w] = False

    def visit(self, w: int, v: int = -1) -> None:
        """Run the DFS from w (parent v) until w's adjacency list is done.

        Entering a vertex, the outgoing back-edge test and finishing a vertex
        without stored incoming back-edges are inlined here; they run once
        per adjacency entry.
        """
        if self.dfs[w]:
            raise ValueError(f"vertex {w} already visited")
        adj = self.g.adj
        dfs, deg, pos, inc, opened = self.dfs, self.deg, self.pos, self.inc, self.open
        parent, tree_edge, parent_edge = self.parent, self.tree_edge, self.parent_edge
        ear, next_ = self.ear, self.next_
        alpha_head, alpha_tail, link = self.alpha_head, self.alpha_tail, self.link
        backtrack, finish, absorb_ear = self.backtrack, self.finish, self.absorb_ear
        debug = self.debug
        new = tuple.__new__
        steps = comparisons = insertions = 0
        cnt = self.cnt

        dfs[w] = cnt
        cnt += 1
        parent[w] = v
        opened[w] = True
        stack = [w]
        while stack:
            x = stack[-1]
            lst = adj[x]
            i = pos[x]
            if i < len(lst):
                pos[x] = i + 1
                steps += 1
                eid, y = lst[i]
                deg[x] += 1
                if dfs[y] == 0:
                    dfs[y] = cnt
                    cnt += 1
                    parent[y] = x
                    tree_edge[y] = parent_edge[y] = eid
                    opened[y] = True
                    stack.append(y)
                elif eid == tree_edge[x]:
                    pass
                elif dfs[y] < dfs[x]:
                    # outgoing back-edge x -> y, ranked against ear(x); the
                    # tail x is an ancestor of every other candidate tail
                    comparisons += 1
                    cur = ear[x]
                    if cur is None:
                        less = True
                    else:
                        dh = dfs[cur[1]]
                        if dfs[y] != dh:
                            less = dfs[y] < dh
                        else:
                            less = cur[0] == x and eid < cur[2]
                    if debug:
                        if less != self.ear_less(Ear(x, y, eid), cur, x):
                            raise InvariantViolation(f"fast ear test disagrees at {x} -> {y}")
                    if less:
                        absorb_ear(x, next_[x], False)
                        next_[x] = -1
                        ear[x] = new(Ear, (x, y, eid))
                    elif debug:
                        self.alpha_add(x, eid)
                    else:
                        insertions += 1
                        link[eid] = -1
                        tail = alpha_tail[x]
                        if tail < 0:
                            alpha_head[x] = eid
                        else:
                            link[tail] = eid
                        alpha_tail[x] = eid
                else:
                    bucket = inc[x]
                    if bucket is None:
                        inc[x] = [y]
                    else:
                        bucket.append(y)
            else:
                if debug or inc[x] is not None:
                    finish(x)
                else:
                    opened[x] = False
                stack.pop()
                if stack:
                    backtrack(stack[-1], x)
        self.cnt = cnt
        c = self.counters
        c.dfs_steps += steps
        c.ear_comparisons += comparisons
        c.alpha_insertions += insertions

    # ---- debug checks -----------------------------------------------------

    def check_path(self, w: int, inc: list[int]) -> None:
        """Structural properties of the w-path when L[w] is complete."""
        if self.parent[w] >= 0 and self.deg[w] < 1:
            raise InvariantViolation(f"deg({w}) = {self.deg[w]} < 1 at completion")
        prev = self.dfs[w]
        x = self.next_[w]
        seen = 0
        while x >= 0:
            if self.deg[x] < 3:
                raise InvariantViolation(f"path vertex {x} of {w} has deg {self.deg[x]} < 3")
            if self.dfs[x] <= prev:
                raise InvariantViolation(f"dfs numbers do not increase along the path of {w}")
            if self.ear[x] is not self.ear[w]:
                raise InvariantViolation(f"path vertex {x} does not share ear({w})")
            prev = self.dfs[x]
            x = self.next_[x]
            seen += 1
            if seen > len(self.dfs):
                raise InvariantViolation(f"cycle in next links from {w}")
        first = self.next_[w]
        if first >= 0:
            for u in inc:
                if self.is_ancestor(first, u):
                    raise InvariantViolation(
                        f"drain of Inc({w}) stopped before ancestor {first} of {u}")

    # ---- result -----------------------------------------------------------

    def output_edge(self, uid: int) -> OutputEdge:
        if uid < self.m:
            return tuple.__new__(Original, (uid,))
        return tuple.__new__(Auxiliary, self.aux[uid - self.m])

    def result(self) -> Decomposition:
        g = self.g
        m, aux, new = self.m, self.aux, tuple.__new__
        comps = []
        owner = [-1] * g.n
        for idx, (sigma, alpha) in enumerate(self.components):
            for v in sigma:
                owner[v] = idx
            comps.append(Component(sigma, [new(Original, (e,)) if e < m else new(Auxiliary, aux[e - m])
                                           for e in alpha]))
        for v in range(g.n):
            for eid in g.loops[v]:
                comps[owner[v]].alpha.append(Original(eid))
        return Decomposition(
            n=g.n,
            edges=g.edges,
            components=comps,
            bridges=list(self.bridges),
            two_cuts=[(self.output_edge(a), self.output_edge(b)) for a, b in self.two_cuts],
        )


def run(g: Multigraph, debug: bool = False) -> DecompState:
    state = DecompState(g, debug=debug)
    for r in range(g.n):
        if state.dfs[r] == 0:
            state.visit(r)
            state.emit(r)
    return state


def decompose(g: Multigraph, debug: bool = False) -> Decomposition:
    """3-edge-connected components of g with their auxiliary subgraphs.

    With ``debug`` set, path and bookkeeping invariants are checked as the
    search proceeds and :class:`InvariantViolation` is raised on failure.
    """
    return run(g, debug=debug).result()
