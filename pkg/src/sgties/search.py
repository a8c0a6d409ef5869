"""Budgeted depth-first path enumeration.

Shared by the balance layer (signed path search) and the oracle
(exhaustive common-cycle enumeration).  Everything here is exact: the
enumerator visits each simple path at most once, in a deterministic
order, and the budget only caps how much of the space gets explored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .core import EdgeId, SignedGraph, VertexId

DEFAULT_BUDGET = 1_000_000


@dataclass
class SearchBudget:
    """Mutable step counter capping exhaustive searches.

    One unit is charged per edge considered during path enumeration.
    Once ``spent`` passes ``limit`` the search stops early and the
    caller must treat its result as incomplete.
    """

    limit: int = DEFAULT_BUDGET
    spent: int = field(default=0, compare=False)

    def charge(self, amount: int = 1) -> bool:
        """Consume budget; False means the budget is now exhausted."""
        self.spent += amount
        return self.spent <= self.limit

    @property
    def exhausted(self) -> bool:
        return self.spent > self.limit


def iter_paths(
    g: SignedGraph,
    start: VertexId,
    goal: VertexId,
    *,
    banned_vertices: frozenset[VertexId] = frozenset(),
    banned_edges: frozenset[EdgeId] = frozenset(),
    budget: SearchBudget,
) -> Iterator[tuple[tuple[EdgeId, ...], tuple[VertexId, ...]]]:
    """Yield every simple start..goal path as (edge ids, vertex sequence).

    Paths are generated in depth-first order following adjacency lists,
    which are sorted by edge id, so the order is deterministic.  Parallel
    edges give distinct paths.  ``start == goal`` is not supported.
    Stops yielding once ``budget`` is exhausted; check ``budget.exhausted``
    afterwards to learn whether the enumeration was complete.
    """
    if start in banned_vertices or goal in banned_vertices:
        return
    on_path = [False] * g.n
    on_path[start] = True
    path_verts: list[VertexId] = [start]
    path_edges: list[EdgeId] = []
    cursors = [0]  # adjacency index per path vertex
    while cursors:
        v = path_verts[-1]
        adj = g.adjacency[v]
        i = cursors[-1]
        if i >= len(adj):
            cursors.pop()
            on_path[v] = False
            path_verts.pop()
            if path_edges:
                path_edges.pop()
            continue
        cursors[-1] = i + 1
        eid, w = adj[i]
        if eid in banned_edges:
            continue
        if not budget.charge():
            return
        if w == goal:
            yield tuple(path_edges) + (eid,), tuple(path_verts) + (w,)
            continue
        if on_path[w] or w in banned_vertices:
            continue
        on_path[w] = True
        path_verts.append(w)
        path_edges.append(eid)
        cursors.append(0)
