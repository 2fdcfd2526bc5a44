"""Exact DP over an alternating clique path, parameterized by k.

A state assigns the vertices of the current bag to parts (partial
components). Per part it keeps a profile (d, j, sigma, delta):

* sigma: the part's bag vertices in introduction order (the boundary);
* d: the distance from the core to sigma[0], or 0 when the core is empty.
  The core is the batch of the part's vertices that left the bags first;
* j: the first j boundary vertices are at distance d from the core, the
  rest at d+1 (j = |sigma| when the core is empty);
* delta: the diameter of the part restricted to introduced vertices.

Forgotten vertices have no future neighbours and same-part bag vertices are
pairwise adjacent, so distances among introduced vertices are already final.
For a fixed core vertex, distance to the boundary never decreases along
sigma; this keeps the two-level profile exact.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .graph import Graph, norm
from .recognition import CliquePath, check_clique_path, clique_path
from .verifier import DeletionSet, Instance, make_deletion

Profile = Tuple[int, int, int]  # (d, j, delta); sigma is the part itself in introduction order


@dataclass(frozen=True)
class DiameterProfile:
    d: int
    j: int
    sigma: Tuple[int, ...]
    delta: int


@dataclass
class DPState:
    partition: Tuple[Tuple[int, ...], ...]  # parts, each in introduction order; parts sorted by first member
    profiles: Tuple[Profile, ...]
    persistence: Tuple[int, ...]
    budget: int
    ids: Tuple[int, ...] = ()  # component id per part (its first vertex ever); not part of the key
    chain: object = None  # linked list of (vertex, component id) assignments, for witnesses

    @property
    def key(self):
        return (self.partition, self.profiles, self.persistence)

    def profile(self, r: int) -> DiameterProfile:
        d, j, delta = self.profiles[r]
        return DiameterProfile(d, j, self.partition[r], delta)

    def labels(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        node = self.chain
        while node is not None:
            node, pairs = node
            for v, c in pairs:
                out.setdefault(v, c)
        return out


@dataclass
class Context:
    g: Graph
    s: int
    k: int
    rank: Dict[int, int]  # introduction index per vertex

    @property
    def cap(self) -> int:
        return 2 * self.k + 2


@dataclass
class BagCensus:
    index: int
    kind: str
    states: int
    max_d: int
    max_delta: int
    max_persistence: int


def _canon(parts, profs, pers, ids, ctx: Context):
    order = sorted(range(len(parts)), key=lambda r: ctx.rank[parts[r][0]])
    return (tuple(parts[r] for r in order), tuple(profs[r] for r in order),
            tuple(pers[r] for r in order), tuple(ids[r] for r in order))


def _crossing(ctx: Context, w: int, others: Iterable[int]) -> int:
    g = ctx.g
    if g.weights is None:
        return sum(1 for x in others)
    return sum(g.weight(w, x) for x in others)


def _add_vertex(state: DPState, w: int, ctx: Context) -> List[DPState]:
    """All ways to place one new vertex; it is adjacent to every current bag vertex."""
    out = []
    parts, profs = state.partition, state.profiles
    bag_vertices = [x for p in parts for x in p]
    for r in range(len(parts) + 1):
        if r < len(parts):
            others = [x for q, p in enumerate(parts) if q != r for x in p]
        else:
            others = bag_vertices
        b = state.budget + _crossing(ctx, w, others)
        if b > ctx.k:
            continue
        new_parts = list(parts)
        new_profs = list(profs)
        new_pers = list(state.persistence)
        new_ids = list(state.ids)
        if r < len(parts):
            d, j, delta = profs[r]
            # the new vertex is one step past sigma[0] from every core vertex
            delta = max(delta, d + 1) if d > 0 else max(delta, 1)
            if d == 0:
                j = len(parts[r]) + 1
            new_parts[r] = parts[r] + (w,)
            new_profs[r] = (d, j, delta)
            cid = state.ids[r]
        else:
            new_parts.append((w,))
            new_profs.append((0, 1, 0))
            new_pers.append(0)
            new_ids.append(w)
            cid = w
        if new_profs[r if r < len(parts) else -1][2] > ctx.s:
            continue
        p, pr, pe, ids = _canon(new_parts, new_profs, new_pers, new_ids, ctx)
        out.append(DPState(p, pr, pe, b, ids, (state.chain, ((w, cid),))))
    return out


def _valid(state: DPState, bag_size: int, ctx: Context) -> bool:
    if state.budget > ctx.k:
        return False
    if bag_size >= ctx.k + 2 and len(state.partition) > 1:
        return False
    if sum(1 for p in state.persistence if p >= ctx.cap) >= 2:
        return False
    capped = sum(1 for d, _, delta in state.profiles if d > ctx.k + 1 or delta > ctx.k + 1)
    if capped >= 2:
        return False
    return all(delta <= ctx.s for _, _, delta in state.profiles)


def introduce_step(state: DPState, bag: FrozenSet[int], new: Iterable[int], ctx: Context,
                   check: bool = True) -> List[DPState]:
    """Successors after introducing `new` (one vertex at a time, in introduction order)."""
    new = sorted(new, key=lambda v: ctx.rank[v])
    new_set = set(new)
    frontier = [state]
    for w in new:
        nxt = []
        for st in frontier:
            nxt.extend(_add_vertex(st, w, ctx))
        frontier = nxt
    out = []
    for st in frontier:
        pers = tuple(1 if p[0] in new_set else min(pe + 1, ctx.cap)
                     for p, pe in zip(st.partition, st.persistence))
        st.persistence = pers
        if not check or _valid(st, len(bag), ctx):
            out.append(st)
    return out


def forget_step(state: DPState, bag: FrozenSet[int], gone: Iterable[int], ctx: Context,
                check: bool = True) -> List[DPState]:
    """The unique successor after forgetting `gone`, or [] if a completed part is too wide."""
    gone = set(gone)
    parts, profs, pers, ids = [], [], [], []
    for r, part in enumerate(state.partition):
        d, j, delta = state.profiles[r]
        left = tuple(v for v in part if v not in gone)
        if not left:
            if delta > ctx.s:
                return []
            continue
        if len(left) < len(part):
            if d == 0:
                d, j = 1, len(left)
            else:
                kept_front = sum(1 for v in part[:j] if v not in gone)
                if kept_front == 0:
                    d, j = d + 1, len(left)
                else:
                    j = kept_front
        parts.append(left)
        profs.append((d, j, delta))
        pers.append(min(state.persistence[r] + 1, ctx.cap))
        ids.append(state.ids[r])
    p, pr, pe, i = _canon(parts, profs, pers, ids, ctx)
    st = DPState(p, pr, pe, state.budget, i, state.chain)
    if check and not _valid(st, len(bag), ctx):
        return []
    return [st]


def _run(inst: Instance, cp: CliquePath, keep_tables: bool = False, check: bool = True):
    g: Graph = inst.graph
    rank: Dict[int, int] = {}
    prev: FrozenSet[int] = frozenset()
    for bag in cp.bags:
        for v in sorted(bag - prev):
            rank.setdefault(v, len(rank))
        prev = bag
    ctx = Context(g, inst.s, inst.k, rank)
    table: Dict[tuple, DPState] = {((), (), ()): DPState((), (), (), 0, (), None)}
    census: List[BagCensus] = []
    tables = []
    prev = frozenset()
    for i, bag in enumerate(cp.bags):
        nxt: Dict[tuple, DPState] = {}
        if bag > prev:
            kind = "introduce"
            for st in table.values():
                for s2 in introduce_step(st, bag, bag - prev, ctx, check):
                    old = nxt.get(s2.key)
                    if old is None or s2.budget < old.budget:
                        nxt[s2.key] = s2
        else:
            kind = "forget"
            for st in table.values():
                for s2 in forget_step(st, bag, prev - bag, ctx, check):
                    old = nxt.get(s2.key)
                    if old is None or s2.budget < old.budget:
                        nxt[s2.key] = s2
        table = nxt
        census.append(BagCensus(
            i, kind, len(table),
            max((d for st in table.values() for d, _, _ in st.profiles), default=0),
            max((x for st in table.values() for _, _, x in st.profiles), default=0),
            max((p for st in table.values() for p in st.persistence), default=0)))
        if keep_tables:
            tables.append((bag, list(table.values())))
        prev = bag
    return table, census, tables, ctx


def solve_interval(inst: Instance, cp: Optional[CliquePath] = None,
                   census: Optional[list] = None) -> Tuple[Optional[int], Optional[DeletionSet]]:
    """Minimum weight of crossing edges (at most k) over clusterings into s-clubs."""
    g: Graph = inst.graph
    if cp is None:
        cp = clique_path(g, inst.model)
        if cp is None:
            raise ValueError("graph is not an interval graph")
    elif not check_clique_path(g, cp):
        raise ValueError("invalid clique path")
    table, cen, _, _ = _run(inst, cp)
    if census is not None:
        census.extend(cen)
    final = table.get(((), (), ()))
    if final is None:
        return None, None
    labels = final.labels()
    f = [e for e in g.sorted_edges() if labels[e[0]] != labels[e[1]]]
    return final.budget, make_deletion(g, f)


def state_space_report(inst: Instance, cp: CliquePath) -> List[BagCensus]:
    _, cen, _, _ = _run(inst, cp)
    return cen


def dump_states(census: Sequence[BagCensus]) -> str:
    return "".join(f"{c.index} {c.states} {c.max_d} {c.max_delta}\n" for c in census)


def stored_states(inst: Instance, cp: CliquePath, check: bool = True):
    """Every table, for instrumented tests: list of (bag, states, context)."""
    _, _, tables, ctx = _run(inst, cp, keep_tables=True, check=check)
    return tables, ctx
