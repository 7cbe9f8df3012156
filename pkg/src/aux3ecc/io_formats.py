"""Edge-list files, canonical decomposition documents and DOT export.

Edge-list format::

    # optional comments
    n m
    u v        (m lines, 0-based endpoints)

Decompositions are written in a canonical order so equal decompositions give
identical bytes: components by smallest vertex, sigma sorted, and edges with
originals first (by endpoints, then id) and auxiliaries after (by endpoints,
then cut index).
"""

from __future__ import annotations

import json
import os
from typing import Iterable, Union

from .decomposer import Auxiliary, Component, Decomposition, Original, OutputEdge
from .graph import GraphError, Multigraph, from_edge_list

PathLike = Union[str, "os.PathLike[str]"]
FORMATS = ("text", "json")


class FormatError(GraphError):
    """Malformed file contents; ``line`` is 1-based (0 when unknown)."""

    def __init__(self, message: str, line: int = 0):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


# ---- edge lists -------------------------------------------------------------

def _ints(parts: list[str], lineno: int) -> list[int]:
    try:
        vals = [int(p) for p in parts]
    except ValueError:
        raise FormatError(f"expected integers, got {' '.join(parts)!r}", lineno) from None
    if any(v < 0 for v in vals):
        raise FormatError("negative value", lineno)
    return vals


def parse_edge_list(text: str) -> Multigraph:
    header = None
    pairs: list[tuple[int, int]] = []
    n = m = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            what = "header 'n m'" if header is None else "edge 'u v'"
            raise FormatError(f"expected {what}, got {line!r}", lineno)
        a, b = _ints(parts, lineno)
        if header is None:
            header = lineno
            n, m = a, b
            continue
        if len(pairs) == m:
            raise FormatError(f"more than the {m} edges declared in the header", lineno)
        if a >= n or b >= n:
            raise FormatError(f"endpoint out of range for n = {n}: {a} {b}", lineno)
        pairs.append((a, b))
    if header is None:
        raise FormatError("missing header 'n m'")
    if len(pairs) != m:
        raise FormatError(f"header declares {m} edges but {len(pairs)} were given", header)
    return from_edge_list(n, pairs)


def read_edge_list(path: PathLike) -> Multigraph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: Multigraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def write_edge_list(g: Multigraph, path: PathLike) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_edge_list(g))


# ---- decompositions ---------------------------------------------------------

def _edge_key(d: Decomposition, e: OutputEdge):
    a, b = d.endpoints(e)
    if isinstance(e, Original):
        return (0, min(a, b), max(a, b), e.edge_id)
    return (1, min(a, b), max(a, b), e.cut)


def _norm(e: OutputEdge, renumber=None) -> OutputEdge:
    if isinstance(e, Auxiliary):
        cut = renumber[e.cut] if renumber is not None else e.cut
        return Auxiliary(min(e.u, e.v), max(e.u, e.v), cut)
    return e


def canonical(d: Decomposition) -> Decomposition:
    """Equal decompositions in canonical order.

    Auxiliary endpoints become (low, high); each 2-cut is ordered by edge key
    and the cut list is sorted, with auxiliary cut indices renumbered to match.
    """
    keyed = []
    for i, (e, f) in enumerate(d.two_cuts):
        pair = sorted((_norm(e), _norm(f)), key=lambda x: _edge_key(d, x))
        keyed.append(([_edge_key(d, x) for x in pair], i, pair))
    keyed.sort(key=lambda t: (t[0], t[1]))
    renumber = {old: new for new, (_, old, _) in enumerate(keyed)}
    # auxiliary edges inside cuts point at cuts too
    cuts = [tuple(_norm(x, renumber) for x in pair) for _, _, pair in keyed]
    comps = [Component(sorted(c.sigma),
                       sorted((_norm(e, renumber) for e in c.alpha), key=lambda e: _edge_key(d, e)))
             for c in d.components]
    comps.sort(key=lambda c: c.sigma[0] if c.sigma else -1)
    return Decomposition(d.n, tuple(d.edges), comps, sorted(d.bridges), cuts)


def _edge_doc(d: Decomposition, e: OutputEdge) -> dict:
    a, b = d.endpoints(e)
    if isinstance(e, Original):
        return {"kind": "original", "endpoints": [a, b], "edge_id": e.edge_id}
    return {"kind": "auxiliary", "endpoints": [a, b], "cut": e.cut}


def to_document(d: Decomposition) -> dict:
    c = canonical(d)
    return {
        "n": c.n,
        "m": len(c.edges),
        "edges": [list(e) for e in c.edges],
        "components": [
            {"index": i, "sigma": comp.sigma, "edges": [_edge_doc(c, e) for e in comp.alpha]}
            for i, comp in enumerate(c.components)
        ],
        "bridges": c.bridges,
        "two_cuts": [[_edge_doc(c, e), _edge_doc(c, f)] for e, f in c.two_cuts],
    }


def _fmt_edge(d: Decomposition, e: OutputEdge) -> str:
    a, b = d.endpoints(e)
    if isinstance(e, Original):
        return f"e{e.edge_id}({a},{b})"
    return f"aux({a},{b})/cut{e.cut}"


def _text(d: Decomposition) -> str:
    c = canonical(d)
    out = [f"n {c.n} m {len(c.edges)} components {len(c.components)}"]
    for i, comp in enumerate(c.components):
        n_aux = sum(isinstance(e, Auxiliary) for e in comp.alpha)
        out.append(f"component {i}: sigma {' '.join(map(str, comp.sigma))}")
        out.append(f"  edges {len(comp.alpha) - n_aux} original {n_aux} auxiliary")
        out.extend(f"  {_fmt_edge(c, e)}" for e in comp.alpha)
    out.append("bridges " + " ".join(f"e{b}" for b in c.bridges) if c.bridges else "bridges -")
    for e, f in c.two_cuts:
        out.append(f"2-cut {_fmt_edge(c, e)} {_fmt_edge(c, f)}")
    return "\n".join(out) + "\n"


def write_decomposition(d: Decomposition, format: str = "json") -> bytes:
    if format == "json":
        return (json.dumps(to_document(d), indent=2, sort_keys=True) + "\n").encode("utf-8")
    if format == "text":
        return _text(d).encode("utf-8")
    raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")


def _edge_from(doc: dict) -> OutputEdge:
    if doc["kind"] == "original":
        return Original(int(doc["edge_id"]))
    if doc["kind"] == "auxiliary":
        u, v = doc["endpoints"]
        return Auxiliary(int(u), int(v), int(doc["cut"]))
    raise FormatError(f"unknown edge kind {doc['kind']!r}")


def from_document(doc: dict) -> Decomposition:
    try:
        comps = [Component([int(v) for v in c["sigma"]], [_edge_from(e) for e in c["edges"]])
                 for c in doc["components"]]
        return Decomposition(
            n=int(doc["n"]),
            edges=tuple((int(u), int(v)) for u, v in doc["edges"]),
            components=comps,
            bridges=[int(b) for b in doc["bridges"]],
            two_cuts=[(_edge_from(e), _edge_from(f)) for e, f in doc["two_cuts"]],
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed decomposition document: {exc}") from None


def read_decomposition(data: Union[bytes, str]) -> Decomposition:
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise FormatError(exc.msg, exc.lineno) from None
    return from_document(doc)


# ---- DOT --------------------------------------------------------------------

def _dot_lines(g: Multigraph, d: Decomposition) -> Iterable[str]:
    c = canonical(d)
    yield "graph decomposition {"
    yield "  node [shape=circle];"
    inside = set()
    for i, comp in enumerate(c.components):
        yield f"  subgraph cluster_{i} {{"
        yield f'    label="C{i}";'
        for v in comp.sigma:
            yield f"    {v};"
        for e in comp.alpha:
            a, b = c.endpoints(e)
            if isinstance(e, Original):
                inside.add(e.edge_id)
                yield f'    {a} -- {b} [label="e{e.edge_id}"];'
            else:
                yield f'    {a} -- {b} [style=dashed, label="aux"];'
        yield "  }"
    bridges = set(c.bridges)
    for eid, (a, b) in enumerate(g.edges):
        if eid in inside:
            continue
        kind = "bridge" if eid in bridges else "cut"
        color = "red" if kind == "bridge" else "blue"
        yield f'  {a} -- {b} [color={color}, penwidth=2, label="e{eid} {kind}"];'
    yield "}"


def export_dot(g: Multigraph, d: Decomposition) -> bytes:
    """One cluster per component; auxiliary edges dashed; edges between
    components drawn outside the clusters, bridges red and 2-cut edges blue."""
    return ("\n".join(_dot_lines(g, d)) + "\n").encode("utf-8")
