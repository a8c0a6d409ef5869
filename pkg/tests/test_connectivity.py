"""Connectivity structure against networkx as an independent oracle.

Blocks of a multigraph have the same vertex sets as blocks of its
underlying simple graph, so nx comparisons run on the simplification
while edge-level invariants are checked directly.
"""

import random

import networkx as nx
import pytest

import helpers
from sgties import (
    NotTwoConnected,
    SignedGraph,
    blocks,
    components,
    find_proper_2_separation,
    is_2_connected,
    is_3_connected,
    side_vertices,
)


def to_nx(g: SignedGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(tuple(sorted(g.endpoints(e))) for e in range(g.m))
    return h


def random_multigraph(rng: random.Random, n: int, m: int) -> SignedGraph:
    items = []
    for _ in range(m):
        u = rng.randrange(n)
        v = rng.randrange(n - 1)
        if v >= u:
            v += 1
        items.append((u, v, rng.choice((1, -1))))
    return SignedGraph.build(n, items)


def test_components_match_nx():
    rng = random.Random(3)
    for _ in range(80):
        n = rng.randrange(2, 9)
        g = random_multigraph(rng, n, rng.randrange(0, n + 3))
        mine = sorted(sorted(c) for c in components(g))
        ref = sorted(sorted(c) for c in nx.connected_components(to_nx(g)))
        assert mine == ref


def test_blocks_vertex_sets_and_cuts_match_nx():
    rng = random.Random(17)
    for _ in range(120):
        n = rng.randrange(3, 9)
        g = random_multigraph(rng, n, rng.randrange(2, n + 4))
        bt = blocks(g)
        ref = to_nx(g)
        want_blocks = sorted(
            sorted(set(v for e in comp for v in e))
            for comp in nx.biconnected_component_edges(ref)
        )
        got_blocks = sorted(
            sorted(side_vertices(g, blk)) for blk in bt.blocks
        )
        assert got_blocks == want_blocks
        assert sorted(bt.cut_vertices) == sorted(nx.articulation_points(ref))


def test_blocks_partition_the_edges():
    rng = random.Random(29)
    for _ in range(60):
        n = rng.randrange(2, 8)
        g = random_multigraph(rng, n, rng.randrange(1, n + 4))
        bt = blocks(g)
        seen = [e for blk in bt.blocks for e in sorted(blk)]
        assert sorted(seen) == list(range(g.m))
        for e in range(g.m):
            assert e in bt.block_of(e)


def test_parallel_edges_share_a_block():
    g = SignedGraph.build(3, [(0, 1, 1), (0, 1, -1), (1, 2, 1)])
    bt = blocks(g)
    assert bt.block_of(0) == bt.block_of(1) == frozenset({0, 1})
    assert bt.block_of(2) == frozenset({2})
    assert bt.cut_vertices == frozenset({1})


def test_two_triangles_give_two_blocks():
    bt = blocks(helpers.two_triangles_shared_vertex())
    assert len(bt.blocks) == 2
    assert bt.cut_vertices == frozenset({2})
    assert bt.block_of(0) == frozenset({0, 1, 2})
    assert bt.block_of(4) == frozenset({3, 4, 5})


def test_is_2_connected():
    assert is_2_connected(helpers.prism())
    assert is_2_connected(SignedGraph.build(2, [(0, 1, 1), (0, 1, -1)]))
    assert not is_2_connected(SignedGraph.build(2, [(0, 1, 1)]))
    assert not is_2_connected(helpers.two_triangles_shared_vertex())
    assert not is_2_connected(SignedGraph.build(3, [(0, 1, 1), (1, 2, 1)]))


def test_is_2_connected_matches_nx_on_simple_graphs():
    rng = random.Random(31)
    for _ in range(80):
        n = rng.randrange(3, 9)
        ref = nx.gnp_random_graph(n, rng.choice((0.3, 0.5, 0.7)), seed=rng.randrange(10**6))
        g = SignedGraph.build(n, [(u, v, 1) for u, v in ref.edges()])
        assert is_2_connected(g) == (ref.number_of_nodes() > 2 and nx.is_biconnected(ref))


def test_is_3_connected_matches_nx_on_simple_graphs():
    rng = random.Random(37)
    hits = 0
    for _ in range(60):
        n = rng.randrange(4, 8)
        ref = nx.gnp_random_graph(n, rng.choice((0.5, 0.7, 0.9)), seed=rng.randrange(10**6))
        g = SignedGraph.build(n, [(u, v, 1) for u, v in ref.edges()])
        want = nx.node_connectivity(ref) >= 3 if ref.number_of_edges() else False
        got = is_3_connected(g)
        assert got == want
        hits += got
    assert hits > 0  # the sample actually exercises both answers


def test_parallel_edges_do_not_make_a_graph_3_connected():
    g = SignedGraph.build(2, [(0, 1, 1), (0, 1, -1), (0, 1, 1)])
    assert not is_3_connected(g)
    assert not is_3_connected(helpers.cycle_graph(4))
    assert is_3_connected(helpers.k4())
    assert is_3_connected(helpers.wheel(5))
    assert is_3_connected(helpers.prism())


def test_separation_none_iff_3_connected():
    rng = random.Random(41)
    for _ in range(60):
        n = rng.randrange(4, 8)
        g = helpers.random_2_connected(rng, n, rng.randrange(0, 6))
        sep = find_proper_2_separation(g)
        assert (sep is None) == is_3_connected(g)


def test_separation_is_proper():
    rng = random.Random(43)
    found = 0
    for _ in range(60):
        g = helpers.random_2_connected(rng, rng.randrange(4, 8), rng.randrange(0, 5))
        sep = find_proper_2_separation(g)
        if sep is None:
            continue
        found += 1
        assert sorted(sep.side1 | sep.side2) == list(range(g.m))
        assert not (sep.side1 & sep.side2)
        u, v = sep.boundary
        assert u != v
        v1 = side_vertices(g, sep.side1)
        v2 = side_vertices(g, sep.side2)
        assert v1 & v2 == {u, v}
        # proper: both sides hide at least one private vertex
        assert v1 - {u, v}
        assert v2 - {u, v}
    assert found > 10


def test_separation_is_deterministic():
    g = helpers.two_k4_on_boundary()
    a = find_proper_2_separation(g)
    b = find_proper_2_separation(g)
    assert a == b
    assert set(a.boundary) == {0, 1}


def test_separation_requires_2_connected():
    with pytest.raises(NotTwoConnected):
        find_proper_2_separation(helpers.two_triangles_shared_vertex())
    with pytest.raises(NotTwoConnected):
        find_proper_2_separation(SignedGraph.build(3, [(0, 1, 1), (1, 2, 1)]))


def test_small_graphs_have_no_proper_separation():
    assert find_proper_2_separation(helpers.triangle()) is None
    g = SignedGraph.build(2, [(0, 1, 1), (0, 1, -1), (0, 1, 1)])
    assert find_proper_2_separation(g) is None
