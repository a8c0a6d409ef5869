"""Connectivity structure: components, blocks, 2-separations, 3-connectivity.

All routines treat the graph as a multigraph; parallel edges matter for
blocks (a doubled edge is a 2-connected block) but never for vertex cuts.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import EdgeId, SignedGraph, VertexId
from .errors import NotTwoConnected


def components(g: SignedGraph) -> list[frozenset[VertexId]]:
    """Connected components as vertex sets, ordered by smallest member."""
    seen = [False] * g.n
    out: list[frozenset[int]] = []
    for root in range(g.n):
        if seen[root]:
            continue
        comp = [root]
        seen[root] = True
        queue = [root]
        while queue:
            v = queue.pop()
            for _, w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(frozenset(comp))
    return out


@dataclass(frozen=True)
class BlockTree:
    """Blocks (edge-id sets partitioning E), cut vertices, and incidence.

    attachments[i] holds the cut vertices lying on blocks[i].  Isolated
    vertices belong to no block.
    """

    blocks: tuple[frozenset[EdgeId], ...]
    cut_vertices: frozenset[VertexId]
    attachments: tuple[frozenset[VertexId], ...]

    def block_of(self, e: EdgeId) -> frozenset[EdgeId]:
        for b in self.blocks:
            if e in b:
                return b
        raise KeyError(f"edge {e} is in no block")


def blocks(g: SignedGraph) -> BlockTree:
    """Biconnected components via iterative lowpoint search.

    Parallel edges back to the discovery edge's endpoint count as genuine
    back edges; only the single discovery edge id itself is skipped.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    cuts: set[int] = set()
    estack: list[int] = []
    out: list[frozenset[int]] = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        root_children = 0
        # frame: [vertex, entry edge id, adjacency index, entry skipped?]
        stack = [[root, -1, 0, True]]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            frame = stack[-1]
            v = frame[0]
            adj = g.adjacency[v]
            advanced = False
            while frame[2] < len(adj):
                eid, w = adj[frame[2]]
                frame[2] += 1
                if eid == frame[1] and not frame[3]:
                    frame[3] = True  # skip the discovery edge exactly once
                    continue
                if disc[w] == -1:
                    estack.append(eid)
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append([w, eid, 0, False])
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    estack.append(eid)
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if advanced:
                continue
            stack.pop()
            if not stack:
                break
            p = stack[-1][0]
            if low[v] < low[p]:
                low[p] = low[v]
            if low[v] >= disc[p]:
                # v's subtree hangs off p: pop one block.
                tree_eid = frame[1]
                block: set[int] = set()
                while estack:
                    top = estack.pop()
                    block.add(top)
                    if top == tree_eid:
                        break
                out.append(frozenset(block))
                if p == root:
                    root_children += 1
                else:
                    cuts.add(p)
        if root_children > 1:
            cuts.add(root)
    out.sort(key=min)
    attach = tuple(
        frozenset(x for e in b for x in g.endpoints(e) if x in cuts) for b in out
    )
    return BlockTree(tuple(out), frozenset(cuts), attach)


def is_2_connected(g: SignedGraph) -> bool:
    """Connected, at least 2 vertices, and a single cycle-bearing block."""
    if g.n < 2:
        return False
    if len(components(g)) != 1:
        return False
    bt = blocks(g)
    return len(bt.blocks) == 1 and len(bt.blocks[0]) >= 2


@dataclass(frozen=True)
class Separation:
    """An edge bipartition meeting only at the two boundary vertices."""

    side1: frozenset[EdgeId]
    side2: frozenset[EdgeId]
    boundary: tuple[VertexId, VertexId]


def side_vertices(g: SignedGraph, side: frozenset[EdgeId]) -> frozenset[VertexId]:
    return frozenset(x for e in side for x in g.endpoints(e))


def _components_without(g: SignedGraph, u: int, v: int) -> list[frozenset[int]]:
    seen = [False] * g.n
    seen[u] = seen[v] = True
    out = []
    for root in range(g.n):
        if seen[root]:
            continue
        comp = [root]
        seen[root] = True
        queue = [root]
        while queue:
            x = queue.pop()
            for _, w in g.adjacency[x]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(frozenset(comp))
    return out


def find_proper_2_separation(g: SignedGraph) -> Optional[Separation]:
    """Deterministic proper 2-separation of a 2-connected graph, if any.

    Scans boundary pairs in lexicographic order; side1 is the smallest
    single-component side (fewest edges, then smallest ids).  Returns None
    exactly when no cut pair exists, i.e. when g is 3-connected or too
    small to separate properly.
    """
    if not is_2_connected(g):
        raise NotTwoConnected("find_proper_2_separation needs a 2-connected graph")
    if g.n < 4:
        return None
    for u in range(g.n):
        for v in range(u + 1, g.n):
            comps = _components_without(g, u, v)
            if len(comps) < 2:
                continue
            sides = []
            for comp in comps:
                side = frozenset(
                    i for i, e in enumerate(g.edges) if e.u in comp or e.v in comp
                )
                sides.append(side)
            side1 = min(sides, key=lambda s: (len(s), sorted(s)))
            side2 = frozenset(range(g.m)) - side1
            return Separation(side1, side2, (u, v))
    return None


def is_3_connected(g: SignedGraph) -> bool:
    """At least 4 vertices and no vertex cut of size <= 2."""
    if g.n < 4:
        return False
    if len(components(g)) != 1:
        return False
    for u in range(g.n):
        if len(_components_without_one(g, u)) != 1:
            return False
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if len(_components_without(g, u, v)) != 1:
                return False
    return True


def _components_without_one(g: SignedGraph, u: int) -> list[frozenset[int]]:
    seen = [False] * g.n
    seen[u] = True
    out = []
    for root in range(g.n):
        if seen[root]:
            continue
        comp = [root]
        seen[root] = True
        queue = [root]
        while queue:
            x = queue.pop()
            for _, w in g.adjacency[x]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(frozenset(comp))
    return out
