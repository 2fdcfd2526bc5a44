"""Exact solver for graphs of small neighbourhood diversity (s >= 2).

With s >= 2 a component that meets a set S of twin classes (its footprint),
|S| >= 2, is a blow-up of the type graph H[S]; its diameter is diam(H[S])
whatever the multiplicities, so feasibility depends on S alone. Two
components with the same footprint can be merged, and each class can pour
its surplus into one designated component. What remains is to pick the
realized footprints and, per class, where the surplus goes.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .graph import INF, Graph, twin_partition
from .verifier import DeletionSet, Instance, make_deletion, verify_undirected


@dataclass(frozen=True)
class TypeGraph:
    classes: Tuple[Tuple[int, ...], ...]
    adjacent: FrozenSet[Tuple[int, int]]  # class pairs (i < j) that are complete to each other
    kinds: Tuple[str, ...]  # "clique" | "independent"

    @property
    def size(self) -> int:
        return len(self.classes)

    def has(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.adjacent


@dataclass
class NDStats:
    candidates: int = 0
    bound: int = 0


def type_graph(g: Graph) -> TypeGraph:
    tp = twin_partition(g)
    classes = tp.classes
    adj = set()
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            if g.has_edge(classes[i][0], classes[j][0]):
                adj.add((i, j))
    kinds = tuple("clique" if kind == "true" or len(c) == 1 else "independent"
                  for c, kind in zip(classes, tp.kinds))
    return TypeGraph(classes, frozenset(adj), kinds)


def footprint_diameter(tg: TypeGraph, fp, counts: Optional[Dict[int, int]] = None) -> float:
    """Diameter of a component meeting each class of fp with counts[i] (default 1) vertices."""
    fp = sorted(fp)
    counts = counts or {}
    if not fp:
        return 0
    if len(fp) == 1:
        c = counts.get(fp[0], 1)
        if c <= 1:
            return 0
        return 1 if tg.kinds[fp[0]] == "clique" else INF
    best = 0
    for a in fp:
        dist = {a: 0}
        frontier = [a]
        while frontier:
            nxt = []
            for x in frontier:
                for y in fp:
                    if y not in dist and tg.has(x, y):
                        dist[y] = dist[x] + 1
                        nxt.append(y)
            frontier = nxt
        if len(dist) < len(fp):
            return INF
        best = max(best, max(dist.values()))
    for i in fp:
        c = counts.get(i, 1)
        if c >= 2:
            best = max(best, 1 if tg.kinds[i] == "clique" else 2)
    return best


def _internal(tg: TypeGraph, fp: Sequence[int], mult: Dict[int, int]) -> int:
    tot = 0
    for x, i in enumerate(fp):
        if tg.kinds[i] == "clique":
            tot += mult[i] * (mult[i] - 1) // 2
        for j in fp[x + 1:]:
            if tg.has(i, j):
                tot += mult[i] * mult[j]
    return tot


def solve_nd(inst: Instance, stats: Optional[NDStats] = None,
             check_candidates: bool = False) -> Tuple[Optional[int], Optional[DeletionSet]]:
    g: Graph = inst.graph
    s, k = inst.s, inst.k
    if s < 2:
        raise ValueError("solve_nd needs s >= 2; use solve_branching for s = 1")
    if g.weights is not None:
        raise ValueError("solve_nd handles unweighted graphs only")
    tg = type_graph(g)
    kap = tg.size
    size = [len(c) for c in tg.classes]
    st = stats if stats is not None else NDStats()
    st.bound = (2 ** kap * 2 ** (2 ** kap)) ** kap
    total_edges = g.m

    feasible_fps: List[Tuple[int, ...]] = []
    for r in range(1, kap + 1):
        for fp in combinations(range(kap), r):
            if r == 1 and tg.kinds[fp[0]] != "clique":
                continue  # a lone independent vertex is a singleton, handled as "no component"
            if footprint_diameter(tg, fp, {i: 2 for i in fp}) <= s or (
                    r >= 2 and footprint_diameter(tg, fp) <= s and
                    all(tg.kinds[i] == "clique" for i in fp)):
                feasible_fps.append(fp)
    # for |fp| >= 2 the multiplicity never changes the diameter once s >= 2
    best: List = [k + 1, None]
    mult_count = [0] * kap

    def evaluate(family: List[Tuple[int, ...]]):
        # every clique class must land in some component
        for i in range(kap):
            if tg.kinds[i] == "clique" and mult_count[i] == 0:
                return
        options: List[List[Optional[int]]] = []
        for i in range(kap):
            homes: List[Optional[int]] = [c for c, fp in enumerate(family) if i in fp]
            if tg.kinds[i] == "independent":
                homes = homes + [None]
            if mult_count[i] == size[i]:
                homes = homes[:1]  # no surplus, designation irrelevant
            options.append(homes)

        def rec(i: int, desig: List[Optional[int]]):
            if i == kap:
                st.candidates += 1
                mults = [dict() for _ in family]
                for c, fp in enumerate(family):
                    for x in fp:
                        mults[c][x] = 1
                for x in range(kap):
                    if desig[x] is not None:
                        mults[desig[x]][x] += size[x] - mult_count[x]
                inside = sum(_internal(tg, fp, mults[c]) for c, fp in enumerate(family))
                cost = total_edges - inside
                if check_candidates:
                    _materialize_check(g, tg, family, mults, s)
                if cost < best[0]:
                    best[0], best[1] = cost, (list(family), [dict(m) for m in mults])
                return
            for h in options[i]:
                desig.append(h)
                rec(i + 1, desig)
                desig.pop()

        rec(0, [])

    def grow(start: int, family: List[Tuple[int, ...]]):
        evaluate(family)
        for idx in range(start, len(feasible_fps)):
            fp = feasible_fps[idx]
            if any(mult_count[i] + 1 > size[i] for i in fp):
                continue
            for i in fp:
                mult_count[i] += 1
            family.append(fp)
            grow(idx + 1, family)
            family.pop()
            for i in fp:
                mult_count[i] -= 1

    grow(0, [])
    if best[1] is None:
        return None, None
    family, mults = best[1]
    label = _assign(tg, family, mults)
    f = [e for e in g.sorted_edges() if label[e[0]] != label[e[1]]]
    assert len(f) == best[0]
    return best[0], make_deletion(g, f)


def _assign(tg: TypeGraph, family, mults) -> Dict[int, object]:
    """Concrete vertex -> component label; representatives by ascending id."""
    label: Dict[int, object] = {}
    for i, cls in enumerate(tg.classes):
        members = sorted(cls)
        pos = 0
        for c, fp in enumerate(family):
            if i in fp:
                for v in members[pos:pos + mults[c][i]]:
                    label[v] = c
                pos += mults[c][i]
        for v in members[pos:]:
            label[v] = ("alone", v)
    return label


def _materialize_check(g: Graph, tg: TypeGraph, family, mults, s: int) -> None:
    label = _assign(tg, family, mults)
    f = [e for e in g.sorted_edges() if label[e[0]] != label[e[1]]]
    v = verify_undirected(Instance(g, s, len(f)), f)
    if not v.feasible:
        raise AssertionError(f"footprint test accepted an infeasible candidate: {v}")
