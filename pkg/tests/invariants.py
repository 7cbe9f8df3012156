"""Structural checks shared by the unit and acceptance tests."""

from collections import Counter

from aux3ecc.decomposer import Auxiliary, Decomposition, Original


def check_invariants(d: Decomposition) -> list[str]:
    """Partition, edge conservation, endpoint locality and auxiliary
    non-degeneracy. Returns a list of problems (empty when all hold)."""
    problems = []
    seen = Counter(v for c in d.components for v in c.sigma)
    if sorted(seen) != list(range(d.n)) or any(k != 1 for k in seen.values()):
        problems.append("sigma sets do not partition the vertices")

    in_alpha = Counter(e.edge_id for c in d.components for e in c.alpha if isinstance(e, Original))
    in_cuts = Counter(e.edge_id for pair in d.two_cuts for e in pair if isinstance(e, Original))
    bridges = Counter(d.bridges)
    accounted = in_alpha + in_cuts + bridges
    for eid in range(len(d.edges)):
        if accounted[eid] != 1:
            problems.append(f"edge {eid} accounted {accounted[eid]} times "
                            f"(alpha {in_alpha[eid]}, cuts {in_cuts[eid]}, bridges {bridges[eid]})")

    for i, c in enumerate(d.components):
        members = set(c.sigma)
        for e in c.alpha:
            a, b = d.endpoints(e)
            if a not in members or b not in members:
                problems.append(f"component {i}: edge {e} leaves sigma")
            if isinstance(e, Auxiliary) and e.u == e.v:
                problems.append(f"component {i}: auxiliary self-loop {e}")
    return problems
