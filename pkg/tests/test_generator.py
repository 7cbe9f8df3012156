import pytest

from aux3ecc.generator import (SCALING_BLOCK, Block, PlantSpec, gen_planted, gen_random_multigraph,
                               gen_scaling_instance, planted_corpus, random_corpus)
from aux3ecc.oracle import reference_aux_subgraphs, subgraph_is_3ec


@pytest.mark.parametrize("text, order, m", [
    ("K1", 1, 0), ("K4", 4, 6), ("K5", 5, 10), ("W3", 4, 6), ("W5", 6, 10), ("D2", 2, 4), ("D3", 3, 6),
])
def test_blocks(text, order, m):
    b = Block.parse(text)
    assert str(b) == text
    assert b.order == order and len(b.edges()) == m
    if order > 1:
        assert subgraph_is_3ec(list(range(order)), b.edges())


@pytest.mark.parametrize("text", ["K2", "K3", "W2", "D1", "X4"])
def test_bad_blocks(text):
    with pytest.raises(ValueError):
        Block.parse(text)


def test_cycle_needs_bridges():
    with pytest.raises(ValueError):
        PlantSpec((Block("K", 4),) * 3, "cycle", "bundle")


def test_random_is_seeded():
    a = gen_random_multigraph(8, 20, 42)
    assert a == gen_random_multigraph(8, 20, 42)
    assert a != gen_random_multigraph(8, 20, 43)
    assert a.m == 20 and a.n == 8


@pytest.mark.parametrize("n, m, seed", [(4, 5, 1), (7, 30, 2024), (1, 3, 0)])
def test_random_matches_explicit_pair_table(n, m, seed):
    import random
    table = [(u, v) for u in range(n) for v in range(u, n)]
    rng = random.Random(seed)
    want = tuple(table[rng.randrange(len(table))] for _ in range(m))
    assert gen_random_multigraph(n, m, seed).edges == want


def test_random_covers_loops_and_all_pairs():
    g = gen_random_multigraph(3, 600, 5)
    seen = {tuple(sorted(e)) for e in g.edges}
    assert seen == {(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)}


def test_corpus_seeds():
    items = list(random_corpus(5, 100, 6, 9))
    assert [s for s, _ in items] == [100, 101, 102, 103, 104]
    assert all(1 <= g.n <= 6 and g.m <= 9 for _, g in items)


@pytest.mark.parametrize("skeleton, connector", [
    ("path", "bridge"), ("path", "bundle"), ("tree", "bridge"), ("tree", "bundle"), ("cycle", "bridge"),
])
@pytest.mark.parametrize("seed", range(4))
def test_planted_matches_oracle(skeleton, connector, seed):
    blocks = (Block("K", 4), Block("W", 3), Block("D", 2), Block("K", 1))
    p = gen_planted(PlantSpec(blocks, skeleton, connector, seed=seed))
    ref = reference_aux_subgraphs(p.graph)
    assert p.partition == sorted(ref.classes)
    got = sorted(pair for pairs in ref.aux_pairs for pair in pairs)
    assert got == p.aux_pairs


def test_planted_corpus_within_guard():
    for spec, p in planted_corpus(50, 9):
        assert p.graph.m <= 64
        assert sorted(v for c in p.partition for v in c) == list(range(p.graph.n))


@pytest.mark.parametrize("target", [1000, 10**4, 123457])
def test_scaling_size(target):
    g = gen_scaling_instance(target)
    assert abs(g.m - target) <= 0.05 * target
    assert g.n % SCALING_BLOCK.order == 0
