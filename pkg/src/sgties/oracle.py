"""Brute-force ground truth and certificate verification.

The oracle enumerates every simple cycle containing both distinguished
edges by case analysis on how their endpoints meet: a mutually parallel
pair has exactly one common cycle (their 2-cycle); edges sharing one
vertex v need a path between their far endpoints avoiding v; disjoint
edges need two vertex-disjoint paths pairing up their endpoints, in one
of two patterns.  Every qualifying cycle is produced exactly once, so
the report doubles as a reference count.

verify_certificate replays a tied certificate bottom-up against the
input graph using only primitive checks (cut arithmetic, sign
arithmetic, block recomputation, small re-enumeration), trusting
nothing from the decision procedure that produced it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Union

from . import certificate as cert
from .certificate import Verdict
from .connectivity import blocks, is_3_connected
from .core import (
    Cycle,
    EdgeId,
    NEGATIVE,
    POSITIVE,
    Sign,
    SignedGraph,
    delete_edges,
    parallel_class,
    switch,
)
from .errors import BudgetExhausted, SameEdge, SgError
from .search import DEFAULT_BUDGET, SearchBudget, iter_paths

__all__ = [
    "DEFAULT_BUDGET",
    "SearchBudget",
    "CommonCycleReport",
    "enumerate_common_cycles",
    "find_common_cycle",
    "oracle_tied",
    "cycle_through_three",
    "verify_certificate",
]


@dataclass(frozen=True)
class CommonCycleReport:
    """All cycles through both distinguished edges, classified by sign.

    complete=False means the search budget ran out; the list is then a
    subset and the counts are lower bounds.
    """

    cycles: tuple[Cycle, ...]
    positive_count: int
    negative_count: int
    complete: bool


def _edge_set_sign(g: SignedGraph, edge_ids) -> Sign:
    s = 1
    for eid in edge_ids:
        s *= g.sign(eid)
    return s


def _iter_common_cycles(
    g: SignedGraph, e1: EdgeId, e2: EdgeId, budget: SearchBudget
) -> Iterator[Cycle]:
    if e1 == e2:
        raise SameEdge(f"need two distinct edges, got {e1} twice")
    d1, d2 = g.edge(e1), g.edge(e2)
    ends1, ends2 = d1.endpoints(), d2.endpoints()
    banned = frozenset((e1, e2))
    if ends1 == ends2:
        # mutually parallel: a simple cycle cannot visit their shared
        # endpoints twice, so the 2-cycle is the only candidate
        yield Cycle.from_edges(g, (e1, e2))
        return
    shared = ends1 & ends2
    if len(shared) == 1:
        (v,) = shared
        a = d1.other(v)
        b = d2.other(v)
        for edges, _ in iter_paths(
            g, a, b, banned_vertices=frozenset((v,)), banned_edges=banned, budget=budget
        ):
            yield Cycle.from_edge_set(g, frozenset(edges) | banned)
        return
    a1, b1 = d1.u, d1.v
    for t1, t2 in ((d2.u, d2.v), (d2.v, d2.u)):
        # first path from a1 to t1, second from b1 to t2, disjoint
        for pe, pv in iter_paths(
            g,
            a1,
            t1,
            banned_vertices=frozenset((b1, t2)),
            banned_edges=banned,
            budget=budget,
        ):
            for qe, _ in iter_paths(
                g,
                b1,
                t2,
                banned_vertices=frozenset(pv),
                banned_edges=banned,
                budget=budget,
            ):
                yield Cycle.from_edge_set(g, frozenset(pe) | frozenset(qe) | banned)


def enumerate_common_cycles(
    g: SignedGraph,
    e1: EdgeId,
    e2: EdgeId,
    budget: Optional[SearchBudget] = None,
) -> CommonCycleReport:
    """Enumerate all simple cycles containing both edges.

    Deterministic: the report lists cycles in lexicographic order of
    their sorted edge-id tuples.
    """
    b = budget if budget is not None else SearchBudget()
    found = set(_iter_common_cycles(g, e1, e2, b))
    cycles = tuple(sorted(found, key=lambda c: tuple(sorted(c.edges))))
    pos = sum(1 for c in cycles if _edge_set_sign(g, c.edges) == POSITIVE)
    return CommonCycleReport(cycles, pos, len(cycles) - pos, not b.exhausted)


def find_common_cycle(
    g: SignedGraph,
    e1: EdgeId,
    e2: EdgeId,
    *,
    sign: Optional[Sign] = None,
    budget: Optional[SearchBudget] = None,
) -> tuple[Optional[Cycle], bool]:
    """First common cycle (optionally of a required sign), lazily.

    Returns (cycle, completeness); cycle None with complete True is a
    proof of absence, with complete False just a budget failure.
    """
    b = budget if budget is not None else SearchBudget()
    for c in _iter_common_cycles(g, e1, e2, b):
        if sign is None or _edge_set_sign(g, c.edges) == sign:
            return c, True
    return None, not b.exhausted


def oracle_tied(
    g: SignedGraph,
    e1: EdgeId,
    e2: EdgeId,
    budget: Optional[SearchBudget] = None,
) -> Verdict:
    """Ground-truth verdict by exhaustive enumeration.

    Raises BudgetExhausted unless the enumeration provably covered the
    whole cycle space.
    """
    rep = enumerate_common_cycles(g, e1, e2, budget)
    if not rep.complete:
        raise BudgetExhausted(
            f"common-cycle enumeration for edges {e1},{e2} hit its budget"
        )
    if rep.positive_count and rep.negative_count:
        pos = next(c for c in rep.cycles if _edge_set_sign(g, c.edges) == POSITIVE)
        neg = next(c for c in rep.cycles if _edge_set_sign(g, c.edges) == NEGATIVE)
        return Verdict(kind=cert.KIND_UNTIED, witness=(pos, neg))
    if not rep.cycles:
        return Verdict(kind=cert.KIND_VACUOUS, reason="no cycle contains both edges")
    s = _edge_set_sign(g, rep.cycles[0].edges)
    return Verdict(kind=cert.KIND_TIED, common_sign=s, witness=(rep.cycles[0],))


def cycle_through_three(
    g: SignedGraph,
    e1: EdgeId,
    e2: EdgeId,
    e3: EdgeId,
    budget: Optional[SearchBudget] = None,
) -> tuple[Optional[Cycle], bool]:
    """Search for a simple cycle through three given edges.

    Returns (cycle, completeness); absence is proven only when the
    underlying enumeration completed.
    """
    if len({e1, e2, e3}) != 3:
        raise SameEdge(f"need three distinct edges, got {e1},{e2},{e3}")
    g.edge(e3)
    b = budget if budget is not None else SearchBudget()
    for c in _iter_common_cycles(g, e1, e2, b):
        if e3 in c.edges:
            return c, True
    return None, not b.exhausted


# --- certificate verification -------------------------------------------

Ref = Union[int, str]


class _Fail(Exception):
    pass


def _need(cond: bool, reason: str) -> None:
    if not cond:
        raise _Fail(reason)


@dataclass(frozen=True)
class _Slice:
    """A replayed subgraph: local graph plus maps back to references."""

    g: SignedGraph
    eref: tuple[Ref, ...]  # local edge id -> original id or marker name
    vref: tuple[int, ...]  # local vertex id -> original vertex id

    def edge_index(self) -> dict[Ref, int]:
        return {r: i for i, r in enumerate(self.eref)}

    def vert_index(self) -> dict[int, int]:
        return {r: i for i, r in enumerate(self.vref)}


def _resolve_edges(sl: _Slice, refs, what: str) -> list[int]:
    idx = sl.edge_index()
    out = []
    for r in refs:
        _need(r in idx, f"{what}: unknown edge reference {r!r}")
        out.append(idx[r])
    return out


def _resolve_verts(sl: _Slice, refs, what: str) -> list[int]:
    idx = sl.vert_index()
    out = []
    for r in refs:
        _need(r in idx, f"{what}: unknown vertex reference {r!r}")
        out.append(idx[r])
    return out


def _side_vertices(g: SignedGraph, side) -> set[int]:
    return {x for eid in side for x in g.endpoints(eid)}


def _switched_positive(
    g: SignedGraph,
    skip_edges: set[int],
    skip_vertices: set[int],
    switch_local: set[int],
    what: str,
) -> None:
    # balance claim: after switching, every surviving edge is positive
    for eid in range(g.m):
        if eid in skip_edges:
            continue
        e = g.edge(eid)
        if e.u in skip_vertices or e.v in skip_vertices:
            continue
        s = e.sign
        if (e.u in switch_local) != (e.v in switch_local):
            s = -s
        _need(s == POSITIVE, f"{what}: signing violated at edge {eid}")


def _sub_slice(sl: _Slice, keep_edges: list[int], extra_markers: list[dict]) -> _Slice:
    """Slice of sl induced by an edge subset, plus marker edges."""
    verts = sorted(_side_vertices(sl.g, keep_edges))
    for md in extra_markers:
        for key in ("u", "v"):
            _need(
                md[key] in set(sl.vref), f"marker {md.get('name')!r}: bad endpoint"
            )
    vidx = sl.vert_index()
    marker_verts = {vidx[md[k]] for md in extra_markers for k in ("u", "v")}
    verts = sorted(set(verts) | marker_verts)
    vmap = {old: new for new, old in enumerate(verts)}
    items: list[tuple[int, int, int]] = []
    eref: list[Ref] = []
    for eid in sorted(keep_edges):
        e = sl.g.edge(eid)
        items.append((vmap[e.u], vmap[e.v], e.sign))
        eref.append(sl.eref[eid])
    for md in extra_markers:
        _need(md["sign"] in (POSITIVE, NEGATIVE), "marker: bad sign")
        _need(md["u"] != md["v"], "marker: loop endpoints")
        items.append((vmap[vidx[md["u"]]], vmap[vidx[md["v"]]], md["sign"]))
        eref.append(md["name"])
    g = SignedGraph.build(len(verts), items)
    return _Slice(g, tuple(eref), tuple(sl.vref[v] for v in verts))


def _endpoint_refs(sl: _Slice, eid: int) -> frozenset[int]:
    return frozenset(sl.vref[x] for x in sl.g.endpoints(eid))


def _apply_removed(sl: _Slice, pair: tuple[int, int], removed) -> tuple[_Slice, tuple[int, int]]:
    """Drop recorded parallel-to-pair edges from a child slice."""
    if not removed:
        return sl, pair
    ids = _resolve_edges(sl, removed, "removed")
    pair_ends = {_endpoint_refs(sl, pair[0]), _endpoint_refs(sl, pair[1])}
    for eid in ids:
        _need(eid not in pair, "removed: lists a distinguished edge")
        _need(
            _endpoint_refs(sl, eid) in pair_ends,
            f"removed: edge {sl.eref[eid]!r} is not parallel to the pair",
        )
    keep = [i for i in range(sl.g.m) if i not in set(ids)]
    sub = _sub_slice(sl, keep, [])
    idx = sub.edge_index()
    return sub, (idx[sl.eref[pair[0]]], idx[sl.eref[pair[1]]])


def _replay_node(sl: _Slice, e1: int, e2: int, node: dict) -> None:
    kind = node.get("kind")
    if kind == cert.NODE_SPLIT:
        _replay_split(sl, e1, e2, node)
    elif kind in (cert.NODE_CASE1, cert.NODE_CASE2, cert.NODE_CASE3):
        _replay_case(sl, e1, e2, node)
    elif kind == cert.NODE_ENUM:
        _replay_enum(sl, e1, e2, node)
    elif kind == cert.NODE_PARALLEL_PAIR:
        _need(
            sl.g.endpoints(e1) == sl.g.endpoints(e2),
            "parallel-pair: edges are not mutually parallel",
        )
        _need(
            node.get("sign") == sl.g.sign(e1) * sl.g.sign(e2),
            "parallel-pair: recorded sign mismatch",
        )
    else:
        raise _Fail(f"unexpected node kind {kind!r}")


def _replay_split(sl: _Slice, e1: int, e2: int, node: dict) -> None:
    part = node.get("part")
    _need(part in (1, 2, 3), f"split: unknown part {part!r}")
    bu, bv = _resolve_verts(sl, node["boundary"], "split boundary")
    _need(bu != bv, "split: boundary vertices coincide")
    side1 = _resolve_edges(sl, node["side1"], "side1")
    side2 = _resolve_edges(sl, node["side2"], "side2")
    _need(
        not (set(side1) & set(side2)) and len(side1) + len(side2) == sl.g.m,
        "split: sides do not partition the edges",
    )
    _need(len(side1) >= 1 and len(side2) >= 1, "split: empty side")
    v1 = _side_vertices(sl.g, side1)
    v2 = _side_vertices(sl.g, side2)
    _need(v1 & v2 == {bu, bv}, "split: sides meet outside the boundary pair")
    _need(v1 - {bu, bv} and v2 - {bu, bv}, "split: separation is not proper")
    sides = {1: side1, 2: side2}
    children = node.get("children") or []

    def child_slice(side: list[int], child: dict, base: _Slice) -> tuple[_Slice, tuple[int, int]]:
        markers = child.get("markers") or []
        for md in markers:
            _need(
                {md["u"], md["v"]} == {sl.vref[bu], sl.vref[bv]},
                "marker endpoints differ from the split boundary",
            )
        sub = _sub_slice(base, side, markers)
        idx = sub.edge_index()
        pair = child.get("pair") or []
        _need(len(pair) == 2 and pair[0] != pair[1], "child: malformed pair")
        for r in pair:
            _need(r in idx, f"child pair reference {r!r} missing from child")
        return _apply_removed(sub, (idx[pair[0]], idx[pair[1]]), child.get("removed"))

    if part == 1:
        _need(len(children) == 2, "part 1 needs two children")
        real = []
        for cnum, child in enumerate(children, start=1):
            markers = child.get("markers") or []
            _need(len(markers) == 1, "part 1: each child carries one marker")
            _need(markers[0]["sign"] == POSITIVE, "part 1: marker must be positive")
            pair = child.get("pair") or []
            _need(len(pair) == 2, "child: malformed pair")
            _need(pair[1] == markers[0]["name"], "part 1: pair must end with the marker")
            eidx = sl.edge_index()
            _need(pair[0] in eidx, f"part 1: unknown child edge {pair[0]!r}")
            own = eidx[pair[0]]
            _need(own in set(sides[cnum]), "part 1: child edge on the wrong side")
            real.append(own)
        _need(set(real) == {e1, e2}, "part 1: children do not cover the pair")
        for cnum, child in enumerate(children, start=1):
            sub, pair = child_slice(sides[cnum], child, sl)
            _replay_node(sub, pair[0], pair[1], child["node"])
        return

    kept = node.get("kept")
    _need(kept in (1, 2), f"split: bad kept side {kept!r}")
    keep_side = sides[kept]
    drop_side = sides[3 - kept]
    _need(
        e1 in set(keep_side) and e2 in set(keep_side),
        "split: kept side must contain both distinguished edges",
    )
    _need(len(children) == 1, "parts 2 and 3 take a single child")
    child = children[0]
    _need(
        (child.get("pair") or []) == [sl.eref[e1], sl.eref[e2]],
        "split: child pair must repeat the distinguished pair",
    )
    markers = child.get("markers") or []
    if part == 2:
        raw = node.get("switch")
        _need(isinstance(raw, list), "part 2: missing resign switch")
        switch_local = set(_resolve_verts(sl, raw, "resign switch"))
        h = switch(sl.g, switch_local)
        for eid in drop_side:
            _need(
                h.sign(eid) == POSITIVE,
                "part 2: discarded side is not all-positive after the switch",
            )
        _need(len(markers) == 1, "part 2 adds one marker")
        _need(markers[0]["sign"] == POSITIVE, "part 2: marker must be positive")
        base = _Slice(h, sl.eref, sl.vref)
    else:
        nc = node.get("neg_cycle")
        _need(isinstance(nc, dict), "part 3: missing negative cycle")
        ids = _resolve_edges(sl, nc.get("edges") or [], "neg_cycle")
        _need(set(ids) <= set(drop_side), "part 3: cycle leaves the discarded side")
        cyc = Cycle.from_edge_set(sl.g, frozenset(ids))
        _need(
            _edge_set_sign(sl.g, cyc.edges) == NEGATIVE,
            "part 3: recorded cycle is not negative",
        )
        _need(
            {sl.vref[x] for x in cyc.vertices} == set(nc.get("vertices") or []),
            "part 3: cycle vertices mismatch",
        )
        _need(len(markers) == 2, "part 3 adds two markers")
        _need(
            {markers[0]["sign"], markers[1]["sign"]} == {POSITIVE, NEGATIVE},
            "part 3: markers must carry both signs",
        )
        base = sl
    sub, pair = child_slice(keep_side, child, base)
    _replay_node(sub, pair[0], pair[1], child["node"])


def _leaf_preconditions(sl: _Slice, e1: int, e2: int, what: str) -> None:
    _need(is_3_connected(sl.g), f"{what}: leaf graph is not 3-connected")
    _need(e1 != e2, f"{what}: distinguished edges coincide")
    _need(
        parallel_class(sl.g, e1) == frozenset((e1,)),
        f"{what}: first edge has parallel companions",
    )
    _need(
        parallel_class(sl.g, e2) == frozenset((e2,)),
        f"{what}: second edge has parallel companions",
    )


def _replay_case(sl: _Slice, e1: int, e2: int, node: dict) -> None:
    kind = node["kind"]
    _leaf_preconditions(sl, e1, e2, kind)
    switch_local = set(_resolve_verts(sl, node.get("switch") or [], f"{kind} switch"))
    if kind == cert.NODE_CASE1:
        f_ids = _resolve_edges(sl, node.get("F") or [], "case1 F")
        _need(len(f_ids) >= 2, "case1: F needs at least two edges")
        _need(not ({e1, e2} & set(f_ids)), "case1: F contains a distinguished edge")
        _need(
            set(f_ids) == set(parallel_class(sl.g, f_ids[0])),
            "case1: F is not a full parallel class",
        )
        signs = {sl.g.sign(i) for i in f_ids}
        _need(signs == {POSITIVE, NEGATIVE}, "case1: F lacks one of the signs")
        x = set(_resolve_verts(sl, node.get("X") or [], "case1 X"))
        fplus = set(f_ids) | {e1, e2}
        cut = {
            eid
            for eid in range(sl.g.m)
            if len(sl.g.endpoints(eid) & x) == 1
        }
        _need(cut == fplus, "case1: F plus the pair is not the cut of X")
        _switched_positive(sl.g, fplus, set(), switch_local, "case1")
    elif kind == cert.NODE_CASE2:
        (v,) = _resolve_verts(sl, [node.get("v")], "case2 v")
        _need(
            v in sl.g.endpoints(e1) and v in sl.g.endpoints(e2),
            "case2: v is not shared by both edges",
        )
        _need(v not in switch_local, "case2: switch mentions the deleted vertex")
        _switched_positive(sl.g, set(), {v}, switch_local, "case2")
    else:
        _switched_positive(sl.g, {e1, e2}, set(), switch_local, "case3")


def _replay_enum(sl: _Slice, e1: int, e2: int, node: dict) -> None:
    rep = enumerate_common_cycles(sl.g, e1, e2)
    _need(rep.complete, "enum: re-enumeration hit its budget")
    _need(len(rep.cycles) >= 1, "enum: leaf has no common cycle")
    signs = {_edge_set_sign(sl.g, c.edges) for c in rep.cycles}
    _need(len(signs) == 1, "enum: leaf cycles carry both signs")
    _need(node.get("sign") in signs, "enum: recorded sign mismatch")
    recorded = set()
    for cd in node.get("cycles") or []:
        ids = _resolve_edges(sl, cd.get("edges") or [], "enum cycle")
        recorded.add(frozenset(ids))
    _need(
        recorded == {frozenset(c.edges) for c in rep.cycles},
        "enum: recorded cycles differ from re-enumeration",
    )


def _check_witness_cycle(g: SignedGraph, c: Cycle, e1: int, e2: int, what: str) -> Sign:
    try:
        rebuilt = Cycle.from_edges(g, c.edges)
    except SgError as exc:
        raise _Fail(f"{what}: not a cycle ({exc})")
    _need(set(rebuilt.vertices) == set(c.vertices), f"{what}: vertex list mismatch")
    _need(e1 in c.edges, f"{what}: witness not a cycle containing e1")
    _need(e2 in c.edges, f"{what}: witness not a cycle containing e2")
    return _edge_set_sign(g, c.edges)


def verify_certificate(
    g: SignedGraph, e1: EdgeId, e2: EdgeId, v: Union[Verdict, dict]
) -> tuple[bool, str]:
    """Independently check a verdict against the graph.

    Returns (ok, reason).  Untied verdicts are checked through their
    witness cycles; tied verdicts by replaying the certificate tree;
    vacuous verdicts by recomputing the block decomposition.  Never
    raises on malformed input; the reason names the first failure.
    """
    try:
        if isinstance(v, dict):
            v, de1, de2 = cert.verdict_from_doc(v)
            _need(de1 == e1 and de2 == e2, "document names a different edge pair")
        _need(e1 != e2, "distinguished edges coincide")
        g.edge(e1)
        g.edge(e2)
        if v.kind == cert.KIND_UNTIED:
            _need(len(v.witness) == 2, "untied verdict needs two witness cycles")
            s0 = _check_witness_cycle(g, v.witness[0], e1, e2, "witness 1")
            s1 = _check_witness_cycle(g, v.witness[1], e1, e2, "witness 2")
            _need(
                (s0, s1) == (POSITIVE, NEGATIVE),
                "untied witnesses must be (positive, negative)",
            )
            return True, "ok"
        if v.kind == cert.KIND_VACUOUS:
            node = v.certificate or {}
            _need(node.get("kind") == cert.NODE_BLOCKS, "vacuous verdict needs a blocks record")
            h, emap = _removed_parallel(g, e1, e2, node.get("removed"))
            bt = blocks(h)
            _need(
                bt.block_of(emap[e1]) != bt.block_of(emap[e2]),
                "blocks: edges share a block after preprocessing",
            )
            return True, "ok"
        _need(v.kind == cert.KIND_TIED, f"unknown verdict kind {v.kind!r}")
        if v.common_sign is not None:
            _need(len(v.witness) >= 1, "tied verdict claims a sign without a witness")
            s = _check_witness_cycle(g, v.witness[0], e1, e2, "common witness")
            _need(s == v.common_sign, "common witness sign mismatch")
        node = v.certificate
        _need(isinstance(node, dict), "tied verdict is missing its certificate")
        if node.get("kind") == cert.NODE_PARALLEL_PAIR:
            root = _Slice(g, tuple(range(g.m)), tuple(range(g.n)))
            _replay_node(root, e1, e2, node)
            return True, "ok"
        _need(
            node.get("kind") == cert.NODE_PREPROCESS,
            f"unexpected root node {node.get('kind')!r}",
        )
        h, emap = _removed_parallel(g, e1, e2, node.get("removed"))
        bt = blocks(h)
        b = bt.block_of(emap[e1])
        _need(emap[e2] in b, "preprocess: edges are in different blocks")
        back = {new: old for old, new in emap.items()}
        _need(
            sorted(node.get("block") or []) == sorted(back[i] for i in b),
            "preprocess: recorded block mismatch",
        )
        keep = sorted(b)
        verts = sorted(_side_vertices(h, keep))
        vmap = {old: new for new, old in enumerate(verts)}
        items = []
        eref: list[Ref] = []
        for eid in keep:
            e = h.edge(eid)
            items.append((vmap[e.u], vmap[e.v], e.sign))
            eref.append(back[eid])
        sli = _Slice(SignedGraph.build(len(verts), items), tuple(eref), tuple(verts))
        idx = sli.edge_index()
        _replay_node(sli, idx[e1], idx[e2], node["inner"])
        return True, "ok"
    except (_Fail, SgError) as exc:
        return False, str(exc)
    except (KeyError, IndexError, TypeError, ValueError, AttributeError) as exc:
        return False, f"malformed certificate: {exc!r}"


def _removed_parallel(
    g: SignedGraph, e1: EdgeId, e2: EdgeId, removed
) -> tuple[SignedGraph, dict[int, int]]:
    ids = list(removed or [])
    pair_ends = set()
    for eid in (e1, e2):
        pair_ends.add(g.endpoints(eid))
    for r in ids:
        try:
            ends = g.endpoints(r)
        except SgError:
            raise _Fail(f"removed: unknown edge {r!r}")
        _need(r not in (e1, e2), "removed: lists a distinguished edge")
        _need(ends in pair_ends, f"removed: edge {r} is not parallel to the pair")
    return delete_edges(g, ids)
