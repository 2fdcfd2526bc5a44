"""Recognition of split, interval and unit interval graphs, with certificates."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .graph import Graph, norm

IntervalModel = Dict[int, Tuple[int, int]]


@dataclass(frozen=True)
class SplitPartition:
    clique: FrozenSet[int]
    independent: FrozenSet[int]


@dataclass(frozen=True)
class CliquePath:
    bags: Tuple[FrozenSet[int], ...]
    kinds: Tuple[str, ...]  # "introduce" | "forget" | "empty-terminal"

    def __len__(self):
        return len(self.bags)


@dataclass(frozen=True)
class CycleBound:
    status: str  # "holds" | "violated" | "unknown"
    witness: Optional[Tuple[int, ...]] = None
    explored: int = 0

    @property
    def holds(self) -> bool:
        return self.status == "holds"


# ---------------------------------------------------------------- split

def recognize_split(g: Graph) -> Optional[SplitPartition]:
    """Degree-sequence test: split iff sum of the top m degrees is m(m-1) plus the rest."""
    order = sorted(range(g.n), key=lambda v: (-len(g.adj[v]), v))
    deg = [len(g.adj[v]) for v in order]
    m = 0
    for i, d in enumerate(deg, start=1):
        if d >= i - 1:
            m = i
    if sum(deg[:m]) != m * (m - 1) + sum(deg[m:]):
        return None
    return SplitPartition(frozenset(order[:m]), frozenset(order[m:]))


def check_split(g: Graph, sp: SplitPartition) -> bool:
    c, i = sp.clique, sp.independent
    if c & i or (c | i) != set(range(g.n)):
        return False
    cl = sorted(c)
    if any(not g.has_edge(a, b) for x, a in enumerate(cl) for b in cl[x + 1:]):
        return False
    return not any(u in i and v in i for u, v in g.edges)


# ---------------------------------------------------------------- LexBFS and chordality

def lexbfs(g: Graph, prev: Optional[Sequence[int]] = None) -> List[int]:
    """LexBFS by partition refinement. With prev, ties go to the vertex latest in prev (LexBFS+)."""
    start = list(reversed(prev)) if prev is not None else list(range(g.n))
    cells: List[List[int]] = [start] if start else []
    order: List[int] = []
    seen = [False] * g.n
    while cells:
        first = cells[0]
        p = first.pop(0)
        if not first:
            cells.pop(0)
        order.append(p)
        seen[p] = True
        nb = g.nbrs(p)
        new_cells = []
        for cell in cells:
            inside = [v for v in cell if v in nb]
            if inside and len(inside) < len(cell):
                outside = [v for v in cell if v not in nb]
                new_cells.append(inside)
                new_cells.append(outside)
            else:
                new_cells.append(cell)
        cells = new_cells
    return order


def perfect_elimination_order(g: Graph) -> Optional[List[int]]:
    """Reverse LexBFS order if it is a perfect elimination ordering, else None."""
    order = lexbfs(g)[::-1]
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in g.adj[v] if pos[w] > pos[v]]
        if not later:
            continue
        parent = min(later, key=lambda w: pos[w])
        pn = g.nbrs(parent)
        if any(w != parent and w not in pn for w in later):
            return None
    return order


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_order(g) is not None


def maximal_cliques_chordal(g: Graph, peo: Sequence[int]) -> List[FrozenSet[int]]:
    pos = {v: i for i, v in enumerate(peo)}
    cand = [frozenset([v] + [w for w in g.adj[v] if pos[w] > pos[v]]) for v in peo]
    cand = sorted(set(cand), key=lambda c: (-len(c), sorted(c)))
    out: List[FrozenSet[int]] = []
    for c in cand:
        if not any(c <= d for d in out):
            out.append(c)
    return out


def chordless_cycle(g: Graph) -> Optional[Tuple[int, ...]]:
    """Some induced cycle of length >= 4, or None when g is chordal."""
    for v in range(g.n):
        nb = sorted(g.adj[v])
        for x, a in enumerate(nb):
            for b in nb[x + 1:]:
                if g.has_edge(a, b):
                    continue
                blocked = g.nbrs(v) | {v}
                parent = {a: -1}
                q = deque([a])
                while q and b not in parent:
                    u = q.popleft()
                    for w in g.adj[u]:
                        if w not in parent and (w == b or w not in blocked):
                            parent[w] = u
                            q.append(w)
                if b in parent:
                    path = [b]
                    while path[-1] != a:
                        path.append(parent[path[-1]])
                    return tuple([v] + path[::-1])
    return None


# ---------------------------------------------------------------- interval graphs

def check_model(g: Graph, model: IntervalModel) -> bool:
    if set(model) != set(range(g.n)):
        return False
    if any(l > r for l, r in model.values()):
        return False
    for u in range(g.n):
        lu, ru = model[u]
        for v in range(u + 1, g.n):
            lv, rv = model[v]
            if (max(lu, lv) <= min(ru, rv)) != g.has_edge(u, v):
                return False
    return True


def cliques_from_model(g: Graph, model: IntervalModel) -> List[FrozenSet[int]]:
    """Sweep endpoints; snapshot the active set at each right endpoint; keep maximal snapshots."""
    events = []
    for v, (l, r) in model.items():
        events.append((l, 0, v))
        events.append((r, 1, v))
    events.sort()
    active = set()
    snaps: List[FrozenSet[int]] = []
    for _, kind, v in events:
        if kind == 0:
            active.add(v)
        else:
            snap = frozenset(active)
            if not snaps or snaps[-1] != snap:
                snaps.append(snap)
            active.discard(v)
    out = []
    for i, c in enumerate(snaps):
        if not any(c < d for d in snaps) and c not in out:
            out.append(c)
    return out


def _order_cliques(cliques: List[FrozenSet[int]]) -> Optional[List[int]]:
    """Order cliques so that each vertex's cliques are consecutive (depth-first search with memo)."""
    c = len(cliques)
    if c == 0:
        return []
    where: Dict[int, List[int]] = {}
    for i, q in enumerate(cliques):
        for v in q:
            where.setdefault(v, []).append(i)
    failed = set()

    def ok_next(used: FrozenSet[int], last: int, nxt: int) -> bool:
        q = cliques[nxt]
        closed = set().union(*(cliques[i] for i in used)) - cliques[last]
        if q & closed:
            return False
        for v in cliques[last] - q:
            if any(i not in used and i != nxt for i in where[v]):
                return False
        return True

    def rec(seq: List[int], used: FrozenSet[int]) -> Optional[List[int]]:
        if len(seq) == c:
            return seq
        key = (used, seq[-1])
        if key in failed:
            return None
        for nxt in range(c):
            if nxt not in used and ok_next(used, seq[-1], nxt):
                r = rec(seq + [nxt], used | {nxt})
                if r is not None:
                    return r
        failed.add(key)
        return None

    for start in range(c):
        r = rec([start], frozenset([start]))
        if r is not None:
            return r
    return None


def interval_model(g: Graph) -> Optional[IntervalModel]:
    """Model built from a consecutive ordering of maximal cliques, or None."""
    peo = perfect_elimination_order(g)
    if peo is None:
        return None
    cliques = maximal_cliques_chordal(g, peo)
    order = _order_cliques(cliques)
    if order is None:
        return None
    model: IntervalModel = {}
    for pos, ci in enumerate(order):
        for v in cliques[ci]:
            l, r = model.get(v, (pos, pos))
            model[v] = (min(l, pos), max(r, pos))
    for v in range(g.n):
        model.setdefault(v, (10 ** 9 + v, 10 ** 9 + v))  # isolated vertices are their own clique
    return model


def normalize(cliques: Sequence[FrozenSet[int]]) -> CliquePath:
    """K1, K1&K2, K2, ..., Km, then the empty bag; same-kind neighbours merged."""
    raw: List[FrozenSet[int]] = []
    for i, q in enumerate(cliques):
        if i > 0:
            raw.append(cliques[i - 1] & q)
        raw.append(q)
    raw.append(frozenset())
    bags: List[FrozenSet[int]] = []
    kinds: List[str] = []
    prev: FrozenSet[int] = frozenset()
    for b in raw:
        if b == prev:
            continue
        kind = "introduce" if b > prev else "forget" if b < prev else None
        if kind is None:
            # neither grows nor shrinks: go through the intersection
            mid = b & prev
            bags.append(mid)
            kinds.append("forget")
            prev = mid
            kind = "introduce"
        if kinds and kinds[-1] == kind:
            bags[-1] = b
        else:
            bags.append(b)
            kinds.append(kind)
        prev = b
    if kinds:
        kinds[-1] = "empty-terminal"
    return CliquePath(tuple(bags), tuple(kinds))


def clique_path(g: Graph, model: Optional[IntervalModel] = None) -> Optional[CliquePath]:
    if model is not None:
        if not check_model(g, model):
            raise ValueError("interval model does not match the graph")
    else:
        model = interval_model(g)
        if model is None:
            return None
    return normalize(cliques_from_model(g, model))


def check_clique_path(g: Graph, cp: CliquePath) -> bool:
    """Independent check of the clique-path invariants, including alternation."""
    bags = cp.bags
    if not bags or bags[-1] or cp.kinds[-1] != "empty-terminal":
        return False
    for b in bags:
        bl = sorted(b)
        if any(not g.has_edge(x, y) for i, x in enumerate(bl) for y in bl[i + 1:]):
            return False
    if set().union(*bags) != set(range(g.n)):
        return False
    for u, v in g.edges:
        if not any(u in b and v in b for b in bags):
            return False
    for v in range(g.n):
        idx = [i for i, b in enumerate(bags) if v in b]
        if idx[-1] - idx[0] + 1 != len(idx):
            return False
    prev: FrozenSet[int] = frozenset()
    last = None
    for b, kind in zip(bags, cp.kinds):
        actual = "introduce" if b > prev else "forget" if b < prev else None
        if actual is None or actual == last:
            return False
        if kind != actual and not (kind == "empty-terminal" and actual == "forget"):
            return False
        last, prev = actual, b
    return True


# ---------------------------------------------------------------- unit interval

def check_unit_order(g: Graph, order: Sequence[int]) -> bool:
    if sorted(order) != list(range(g.n)):
        return False
    pos = {v: i for i, v in enumerate(order)}
    for v in range(g.n):
        ps = [pos[w] for w in g.adj[v]] + [pos[v]]
        if max(ps) - min(ps) + 1 != len(ps):
            return False
    return True


def unit_order(g: Graph) -> Optional[List[int]]:
    """Three LexBFS sweeps (the second and third are LexBFS+); accepted only if consecutive."""
    s1 = lexbfs(g)
    s2 = lexbfs(g, s1)
    s3 = lexbfs(g, s2)
    return s3 if check_unit_order(g, s3) else None


def order_from_model(model: IntervalModel) -> List[int]:
    return sorted(model, key=lambda v: (model[v][0], model[v][1], v))


# ---------------------------------------------------------------- induced cycles

def max_induced_cycle_bound(g: Graph, t: int, budget: int = 1_000_000) -> CycleBound:
    """Is there no induced cycle of length >= t?

    t = 4 is chordality. For larger t the search grows induced paths from their
    smallest vertex and stops at the node budget with status "unknown", which
    callers must read as a violation.
    """
    if t < 4:
        raise ValueError("t must be at least 4")
    if t == 4:
        w = chordless_cycle(g)
        return CycleBound("holds") if w is None else CycleBound("violated", w)
    nodes = 0
    for start in range(g.n):
        stack = [(start,)]
        while stack:
            path = stack.pop()
            nodes += 1
            if nodes > budget:
                return CycleBound("unknown", None, nodes)
            last = path[-1]
            inner = set(path[1:-1])
            for w in g.adj[last]:
                if w <= start or w in path:
                    continue
                # w must not touch any interior vertex; touching start closes a cycle
                if any(x in inner for x in g.adj[w]):
                    continue
                if len(path) >= 2 and path[-2] in g.nbrs(w):
                    continue
                np_ = path + (w,)
                if len(path) >= 2 and start in g.nbrs(w):
                    if len(np_) >= t:
                        return CycleBound("violated", np_, nodes)
                    continue
                stack.append(np_)
    return CycleBound("holds", None, nodes)
