"""Feasibility checks for claimed deletion sets.

Everything here recomputes distances from scratch; nothing is shared with
the solvers.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterable, Optional, Tuple

from .graph import INF, Digraph, Edge, Graph, bfs_distances, components, delete_edges, norm


@dataclass
class Instance:
    graph: Any  # Graph or Digraph
    s: int
    k: int
    model: Optional[Dict[int, Tuple[int, int]]] = None  # interval model, vertex -> (l, r)
    terminals: Tuple[Tuple[int, int], ...] = ()
    metadata: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.s < 0 or self.k < 0:
            raise ValueError("s and k must be non-negative")

    @property
    def directed(self) -> bool:
        return isinstance(self.graph, Digraph)

    @property
    def weights(self):
        return getattr(self.graph, "weights", None)


@dataclass(frozen=True)
class DeletionSet:
    edges: FrozenSet[Edge]
    total_weight: int
    verified: bool = False

    def __len__(self):
        return len(self.edges)

    def sorted(self):
        return sorted(self.edges)


def make_deletion(g, edges: Iterable[Edge], verified: bool = False) -> DeletionSet:
    if isinstance(g, Digraph):
        es = frozenset(tuple(e) for e in edges)
        bad = es - g.arcs
        if bad:
            raise ValueError(f"unknown arc(s) {sorted(bad)}")
        return DeletionSet(es, len(es), verified)
    es = frozenset(norm(*e) for e in edges)
    bad = es - g.edges
    if bad:
        raise ValueError(f"unknown edge(s) {sorted(bad)}")
    return DeletionSet(es, sum(g.weight(*e) for e in es), verified)


@dataclass(frozen=True)
class Verdict:
    feasible: bool
    witness: Optional[Tuple[int, int, float]] = None  # (u, v, distance)
    excess: int = 0  # budget overrun, when that is the reason

    def __bool__(self):
        return self.feasible


def _as_set(g, f) -> DeletionSet:
    return f if isinstance(f, DeletionSet) else make_deletion(g, f)


def verify_undirected(inst: Instance, f, bound: Optional[int] = None) -> Verdict:
    """Check total weight <= k and every component diameter <= bound (default s).

    The diameter test reports the first pair (by source id, then target id)
    whose distance exceeds the bound.
    """
    g = inst.graph
    if isinstance(g, Digraph):
        raise TypeError("verify_undirected needs an undirected instance")
    f = _as_set(g, f)
    if f.total_weight > inst.k:
        return Verdict(False, None, f.total_weight - inst.k)
    lim = inst.s if bound is None else bound
    h = delete_edges(g, f)
    for u in range(h.n):
        d = bfs_distances(h, u)
        for v in range(u + 1, h.n):
            if d[v] != INF and d[v] > lim:
                return Verdict(False, (u, v, d[v]))
    return Verdict(True)


def verify_directed(inst: Instance, f) -> Verdict:
    """Every reachable ordered pair inside a weak component is within distance s."""
    g = inst.graph
    if not isinstance(g, Digraph):
        raise TypeError("verify_directed needs a directed instance")
    f = _as_set(g, f)
    if len(f.edges) > inst.k:
        return Verdict(False, None, len(f.edges) - inst.k)
    h = delete_edges(g, f)
    # distances along arcs never leave the weak component, so plain BFS is enough
    comp = components(h).component_id
    for u in range(h.n):
        d = bfs_distances(h, u)
        for v in range(h.n):
            if d[v] != INF and d[v] > inst.s:
                assert comp[u] == comp[v]
                return Verdict(False, (u, v, d[v]))
    return Verdict(True)


def verify(inst: Instance, f) -> Verdict:
    return verify_directed(inst, f) if inst.directed else verify_undirected(inst, f)


def distance_growth_check(g: Graph, f, t: int) -> Optional[Tuple[int, int, float, float]]:
    """None if dist_{G-F}(u,v) <= dist_G(u,v) + |F|(t-3) for every pair still connected.

    Otherwise the first violating (u, v, before, after).
    """
    f = _as_set(g, f)
    h = delete_edges(g, f)
    slack = len(f.edges) * (t - 3)
    for u in range(g.n):
        before = bfs_distances(g, u)
        after = bfs_distances(h, u)
        for v in range(u + 1, g.n):
            if after[v] != INF and after[v] > before[v] + slack:
                return (u, v, before[v], after[v])
    return None
