"""Seeded random and planted multigraphs.

All randomness comes from :class:`random.Random` (Mersenne Twister, MT19937)
seeded with the given integer, so a seed reproduces the same graph on every
platform and Python version that keeps ``random``'s integer-seeding and
``randrange`` contracts (3.2 onward).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from .graph import Multigraph, from_edge_list

BLOCK_KINDS = {"K": "complete", "W": "wheel", "D": "doubled cycle"}
SKELETONS = ("tree", "cycle", "path")
CONNECTORS = ("bridge", "bundle")


@dataclass(frozen=True)
class Block:
    """A 3-edge-connected building block.

    ``K`` k: complete graph (k == 1 or k >= 4); ``W`` k: wheel with a k-vertex
    rim (k >= 3); ``D`` k: cycle on k vertices with every edge doubled
    (k >= 2).
    """

    kind: str
    size: int

    def __post_init__(self):
        if self.kind not in BLOCK_KINDS:
            raise ValueError(f"unknown block kind {self.kind!r}")
        low = {"K": 4, "W": 3, "D": 2}[self.kind]
        if self.size < low and not (self.kind == "K" and self.size == 1):
            raise ValueError(f"{self.kind}{self.size} is not 3-edge-connected")

    @property
    def order(self) -> int:
        return self.size + 1 if self.kind == "W" else self.size

    def edges(self) -> list[tuple[int, int]]:
        k = self.size
        if self.kind == "K":
            return [(i, j) for i in range(k) for j in range(i + 1, k)]
        if self.kind == "W":
            rim = [(1 + i, 1 + (i + 1) % k) for i in range(k)]
            return rim + [(0, 1 + i) for i in range(k)]
        cyc = [(i, (i + 1) % k) for i in range(k)]
        return [e for e in cyc for _ in range(2)]

    @classmethod
    def parse(cls, text: str) -> "Block":
        text = text.strip()
        return cls(text[0].upper(), int(text[1:]))

    def __str__(self) -> str:
        return f"{self.kind}{self.size}"


@dataclass(frozen=True)
class PlantSpec:
    """Blocks joined along a skeleton by single edges or two-edge bundles.

    A cycle skeleton only takes single-edge connectors; bundles around a
    cycle would merge neighbouring blocks into one component.
    """

    blocks: tuple[Block, ...]
    skeleton: str = "path"
    connector: str = "bridge"
    seed: int = 0
    shuffle: bool = True

    def __post_init__(self):
        if not self.blocks:
            raise ValueError("at least one block is required")
        if self.skeleton not in SKELETONS:
            raise ValueError(f"unknown skeleton {self.skeleton!r}")
        if self.connector not in CONNECTORS:
            raise ValueError(f"unknown connector {self.connector!r}")
        if self.skeleton == "cycle" and self.connector != "bridge":
            raise ValueError("a cycle skeleton needs single-edge connectors")


class Planted(NamedTuple):
    graph: Multigraph
    partition: list[list[int]]
    aux_pairs: list[tuple[int, int]]


def gen_random_multigraph(n: int, m: int, seed: int) -> Multigraph:
    """m edges drawn uniformly, with replacement, from the n(n+1)/2 unordered
    vertex pairs (self-loops included)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = random.Random(seed)
    total = n * (n + 1) // 2
    pairs = []
    for _ in range(m):
        # row u holds the pairs (u, u), (u, u+1), ..., (u, n-1)
        idx = rng.randrange(total)
        u = 0
        while idx >= n - u:
            idx -= n - u
            u += 1
        pairs.append((u, u + idx))
    return from_edge_list(n, pairs)


def gen_planted(spec: PlantSpec) -> Planted:
    """Build the planted graph with its ground-truth partition and the
    auxiliary endpoint pairs each block should receive."""
    rng = random.Random(spec.seed)
    offsets = []
    edges: list[tuple[int, int]] = []
    n = 0
    for b in spec.blocks:
        offsets.append(n)
        edges.extend((n + a, n + c) for a, c in b.edges())
        n += b.order

    k = len(spec.blocks)
    if spec.skeleton == "tree":
        links = [(rng.randrange(i), i) for i in range(1, k)]
    else:
        links = [(i - 1, i) for i in range(1, k)]
        if spec.skeleton == "cycle" and k >= 2:
            links.append((k - 1, 0))

    def pick(block: int) -> int:
        return offsets[block] + rng.randrange(spec.blocks[block].order)

    aux: list[tuple[int, int]] = []
    if spec.connector == "bundle":
        for a, b in links:
            e1 = (pick(a), pick(b))
            e2 = (pick(a), pick(b))
            edges += [e1, e2]
            for x, y in ((e1[0], e2[0]), (e1[1], e2[1])):
                if x != y:
                    aux.append((x, y))
    else:
        attach: list[list[int]] = [[] for _ in range(k)]
        for a, b in links:
            x, y = pick(a), pick(b)
            edges.append((x, y))
            attach[a].append(x)
            attach[b].append(y)
        if spec.skeleton == "cycle" and k >= 2:
            for pts in attach:
                x, y = pts
                if x != y:
                    aux.append((x, y))

    partition = [list(range(offsets[i], offsets[i] + b.order)) for i, b in enumerate(spec.blocks)]
    if spec.shuffle:
        perm = list(range(n))
        rng.shuffle(perm)
        rng.shuffle(edges)
        edges = [(perm[u], perm[v]) if rng.random() < 0.5 else (perm[v], perm[u]) for u, v in edges]
        partition = [[perm[v] for v in c] for c in partition]
        aux = [(perm[x], perm[y]) for x, y in aux]
    partition = sorted(sorted(c) for c in partition)
    aux = sorted((min(x, y), max(x, y)) for x, y in aux)
    return Planted(from_edge_list(n, edges), partition, aux)


SCALING_BLOCK = Block("K", 5)


def gen_scaling_instance(target_edges: int) -> Multigraph:
    """A path of K5 blocks joined by two-edge bundles: 12 edges per block,
    so m lands within one block of the target."""
    per_block = len(SCALING_BLOCK.edges()) + 2
    blocks = max(1, round((target_edges + 2) / per_block))
    spec = PlantSpec((SCALING_BLOCK,) * blocks, "path", "bundle", seed=blocks, shuffle=False)
    return gen_planted(spec).graph


def random_corpus(count: int, seed: int, max_n: int = 10, max_m: int = 16) -> Iterator[tuple[int, Multigraph]]:
    """``count`` random multigraphs with 1 <= n <= max_n, 0 <= m <= max_m.

    Instance i uses seed ``seed + i``; yields ``(instance_seed, graph)``.
    """
    for i in range(count):
        s = seed + i
        rng = random.Random(s)
        n = rng.randint(1, max_n)
        m = rng.randint(0, max_m)
        yield s, gen_random_multigraph(n, m, s)


def planted_corpus(count: int, seed: int) -> Iterator[tuple[PlantSpec, Planted]]:
    """Small planted instances that stay inside the oracle's size guard."""
    menu = [Block("K", 1), Block("K", 4), Block("W", 3), Block("W", 4), Block("D", 2), Block("D", 3)]
    for i in range(count):
        rng = random.Random(seed + i)
        skeleton = rng.choice(SKELETONS)
        connector = "bridge" if skeleton == "cycle" else rng.choice(CONNECTORS)
        k = rng.randint(1, 4)
        blocks = tuple(rng.choice(menu) for _ in range(k))
        spec = PlantSpec(blocks, skeleton, connector, seed=seed + i)
        yield spec, gen_planted(spec)
