import pytest

import helpers
from sgties import (
    Cycle,
    LoopRejected,
    BadEdge,
    BadParams,
    BadVertex,
    NotACycle,
    SignedGraph,
    add_edge,
    build_hat,
    build_hedgehog,
    build_target,
    contract_edge,
    cycle_sign,
    delete_edge,
    delete_edges,
    delete_vertex,
    new_graph,
    parallel_class,
    switch,
)


def test_build_basic():
    g = helpers.triangle()
    assert g.n == 3
    assert g.m == 3
    assert g.endpoints(0) == frozenset({0, 1})
    assert g.sign(2) == 1
    assert g.degree(1) == 2


def test_build_rejects_loops():
    with pytest.raises(LoopRejected):
        SignedGraph.build(3, [(1, 1, 1)])


def test_build_rejects_bad_vertex():
    with pytest.raises(BadVertex):
        SignedGraph.build(2, [(0, 2, 1)])
    with pytest.raises(BadVertex):
        SignedGraph.build(2, [(-1, 0, 1)])


def test_build_rejects_bad_sign():
    with pytest.raises(BadParams):
        SignedGraph.build(2, [(0, 1, 0)])
    with pytest.raises(BadParams):
        SignedGraph.build(2, [(0, 1, 2)])


def test_edge_id_out_of_range():
    g = helpers.triangle()
    with pytest.raises(BadEdge):
        g.edge(3)
    with pytest.raises(BadEdge):
        g.sign(-1)


def test_add_edge_appends():
    g = new_graph(3)
    assert g.m == 0
    g, e = add_edge(g, 0, 1, -1)
    assert e == 0
    assert g.sign(0) == -1
    g, e = add_edge(g, 0, 1, 1)
    assert e == 1
    assert parallel_class(g, 0) == frozenset({0, 1})


def test_adjacency_lists_every_incidence():
    g = helpers.theta()
    adj = g.adjacency
    assert sorted(eid for eid, _ in adj[0]) == [0, 1, 3]
    assert {w for _, w in adj[0]} == {1, 2, 3}
    assert g.degree(0) == 3


def test_parallel_class_includes_self():
    g = helpers.triangle()
    assert parallel_class(g, 1) == frozenset({1})


def test_switch_empty_is_identity():
    g = helpers.k4(signs=[1, -1, 1, -1, 1, 1])
    assert switch(g, ()) == g


def test_switch_is_an_involution():
    g = helpers.prism(signs=[1, -1, 1, 1, 1, -1, 1, 1, -1])
    assert switch(switch(g, {0, 4}), {0, 4}) == g


def test_switch_flips_exactly_the_cut():
    g = helpers.triangle(1, 1, 1)
    h = switch(g, {0})
    # edges 0 and 2 touch vertex 0, edge 1 does not
    assert h.sign(0) == -1
    assert h.sign(1) == 1
    assert h.sign(2) == -1


def test_switch_preserves_every_cycle_sign():
    """Signs of edge subsets forming cycles are switching invariants."""
    g = helpers.wheel(4, spoke_signs=[1, -1, 1, -1], rim_signs=[-1, 1, 1, 1])
    h = switch(g, {0, 2, 3})
    before = {s: helpers.set_sign(g, s) for s in helpers.subset_cycles(g)}
    after = {s: helpers.set_sign(h, s) for s in helpers.subset_cycles(h)}
    assert before == after


def test_delete_edge_map():
    g = helpers.k4()
    h, emap = delete_edge(g, 2)
    assert h.m == 5
    assert 2 not in emap
    assert emap[3] == 2
    assert h.endpoints(emap[5]) == g.endpoints(5)


def test_delete_edges_map():
    g = helpers.k4()
    h, emap = delete_edges(g, {0, 4})
    assert h.m == 4
    assert set(emap) == {1, 2, 3, 5}
    for old, new in emap.items():
        assert h.endpoints(new) == g.endpoints(old)
        assert h.sign(new) == g.sign(old)


def test_delete_vertex_compacts_ids():
    g = helpers.prism()
    h, vmap, emap = delete_vertex(g, 2)
    assert h.n == 5
    assert vmap == {0: 0, 1: 1, 3: 2, 4: 3, 5: 4}
    # edges 1, 2, 8 touch vertex 2 and must be gone
    assert set(emap) == {0, 3, 4, 5, 6, 7}
    for old, new in emap.items():
        u, v = g.endpoints(old)
        assert h.endpoints(new) == frozenset({vmap[u], vmap[v]})


def test_contract_positive_edge_merges_and_drops_parallels():
    g = SignedGraph.build(3, [(0, 1, 1), (0, 1, -1), (1, 2, 1), (2, 0, 1)])
    h, vmap, emap = contract_edge(g, 0)
    assert h.n == 2
    assert vmap[0] == vmap[1] == 0
    # the whole parallel class at 0-1 disappears, not just edge 0
    assert set(emap) == {2, 3}
    assert h.m == 2


def test_contract_negative_edge_keeps_cycle_signs():
    """Contracting one triangle edge leaves a 2-cycle of the same sign."""
    g = helpers.triangle(1, -1, 1)  # triangle sign -1
    h, _, emap = contract_edge(g, 1)
    assert h.n == 2
    rest = frozenset(emap.values())
    assert helpers.is_cycle_set(h, rest)
    assert helpers.set_sign(h, rest) == -1


def test_contract_preserves_subset_cycle_signs():
    g = helpers.wheel(4, spoke_signs=[1, 1, -1, 1], rim_signs=[1, -1, 1, 1])
    h, _, emap = contract_edge(g, 2)
    survivors = set(emap)
    for old_set in helpers.subset_cycles(g):
        if not old_set <= survivors:
            continue
        new_set = frozenset(emap[e] for e in old_set)
        if helpers.is_cycle_set(h, new_set):
            assert helpers.set_sign(h, new_set) == helpers.set_sign(g, old_set)


def test_cycle_from_edges_triangle():
    g = helpers.triangle()
    c = Cycle.from_edges(g, [1, 2, 0])
    assert c.edges[0] == 0
    assert len(c) == 3
    assert 1 in c
    assert set(c.vertices) == {0, 1, 2}


def test_cycle_canonical_under_rotation_and_reflection():
    g = helpers.cycle_graph(5)
    base = Cycle.from_edges(g, [0, 1, 2, 3, 4])
    for rot in range(5):
        seq = [(i + rot) % 5 for i in range(5)]
        assert Cycle.from_edges(g, seq) == base
        assert Cycle.from_edges(g, list(reversed(seq))) == base


def test_cycle_vertex_alignment():
    # edges[i] joins vertices[i] to vertices[i+1], cyclically
    g = helpers.cycle_graph(4)
    c = Cycle.from_edges(g, [0, 1, 2, 3])
    k = len(c)
    for i in range(k):
        ends = g.endpoints(c.edges[i])
        assert ends == frozenset({c.vertices[i], c.vertices[(i + 1) % k]})


def test_two_parallel_edges_form_a_cycle():
    g = SignedGraph.build(2, [(0, 1, 1), (0, 1, -1)])
    c = Cycle.from_edges(g, [1, 0])
    assert c.edges == (0, 1)
    assert cycle_sign(g, c) == -1


def test_cycle_rejections():
    g = helpers.theta()
    with pytest.raises(NotACycle):
        Cycle.from_edges(g, [0])
    with pytest.raises(NotACycle):
        Cycle.from_edges(g, [0, 0])
    with pytest.raises(NotACycle):
        Cycle.from_edges(g, [0, 2])  # not parallel
    with pytest.raises(NotACycle):
        Cycle.from_edges(g, [1, 2, 3])  # does not close
    g2 = SignedGraph.build(6, [(i, (i + 1) % 3, 1) for i in range(3)]
                           + [(i + 3, (i + 1) % 3 + 3, 1) for i in range(3)])
    with pytest.raises(NotACycle):
        Cycle.from_edge_set(g2, range(6))  # two disjoint triangles


def test_cycle_from_edge_set_matches_subset_oracle():
    g = helpers.k4(signs=[1, 1, -1, 1, -1, 1])
    for s in helpers.subset_cycles(g):
        c = Cycle.from_edge_set(g, s)
        assert frozenset(c.edges) == s
        assert cycle_sign(g, c) == helpers.set_sign(g, s)


def test_cycle_sign_validates_graph_match():
    g = helpers.triangle()
    other = helpers.cycle_graph(4)
    c = Cycle.from_edges(other, [0, 1, 2, 3])
    with pytest.raises((NotACycle, BadEdge)):
        cycle_sign(g, c)


def test_hat_gadget_layout():
    gi = build_hat()
    g = gi.graph
    assert (g.n, g.m) == (3, 4)
    assert parallel_class(g, 0) == frozenset({0, 1})
    assert {g.sign(0), g.sign(1)} == {1, -1}
    assert (gi.e1, gi.e2) == (2, 3)
    assert g.endpoints(gi.e1) == frozenset({0, 2})
    assert g.endpoints(gi.e2) == frozenset({1, 2})
    assert cycle_sign(g, gi.distinguished_cycle) == -1


def test_target_gadget_layout():
    gi = build_target()
    g = gi.graph
    assert (g.n, g.m) == (4, 6)
    assert (gi.e1, gi.e2) == (4, 5)
    # the rim 4-cycle is negative, the two chords cross it
    rim = frozenset({0, 1, 2, 3})
    assert helpers.is_cycle_set(g, rim)
    assert helpers.set_sign(g, rim) == -1
    assert frozenset(gi.distinguished_cycle.edges) == rim
    assert g.endpoints(4) & g.endpoints(5) == frozenset()


def test_hedgehog_gadget_layout():
    gi = build_hedgehog()
    g = gi.graph
    assert (g.n, g.m) == (5, 9)
    tri = frozenset({0, 1, 2})
    assert helpers.is_cycle_set(g, tri)
    assert helpers.set_sign(g, tri) == -1
    assert frozenset(gi.distinguished_cycle.edges) == tri
    # three spokes to each of the two apex vertices
    assert g.degree(3) == 3
    assert g.degree(4) == 3
    assert g.endpoints(gi.e1) <= frozenset({0, 1, 2, 3})
    assert g.endpoints(gi.e2) <= frozenset({0, 1, 2, 4})
