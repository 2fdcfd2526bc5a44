"""Exact search for parameter s+k.

Pick the first pair at distance exactly s+1 (BFS from the lowest id, the
first vertex reached at that depth) and branch on deleting each edge of
the BFS-tree path between them. Any feasible F must hit that path, so the
search is exhaustive; its depth is at most k and each node has at most
s+1 children.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

from .graph import Edge, Graph, norm
from .verifier import DeletionSet, Instance, make_deletion


@dataclass
class SearchStats:
    internal: int = 0  # nodes that branched
    leaves: int = 0  # nodes that did not branch
    bound: int = 0  # (s+1)^k

    @property
    def nodes(self) -> int:
        return self.internal + self.leaves


def violating_path(n: int, adj: List[Set[int]], s: int) -> Optional[List[int]]:
    """Vertex path of length s+1 between the first pair at distance s+1, or None."""
    for src in range(n):
        parent = {src: -1}
        depth = {src: 0}
        q = deque([src])
        while q:
            u = q.popleft()
            if depth[u] == s + 1:
                path = [u]
                while parent[path[-1]] != -1:
                    path.append(parent[path[-1]])
                return path[::-1]
            for w in sorted(adj[u]):
                if w not in depth:
                    depth[w] = depth[u] + 1
                    parent[w] = u
                    q.append(w)
    return None


class _Breakable:
    """Caches whether an edge can be cut by at most k deletions (local edge connectivity <= k)."""

    def __init__(self, g: Graph, k: int):
        import networkx as nx
        from networkx.algorithms.connectivity import build_auxiliary_edge_connectivity
        from networkx.algorithms.flow import build_residual_network

        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges)
        self._h = h
        self._aux = build_auxiliary_edge_connectivity(h)
        self._res = build_residual_network(self._aux, "capacity")
        self.k = k
        self._cache: Dict[Edge, bool] = {}

    def __call__(self, e: Edge) -> bool:
        if e not in self._cache:
            from networkx.algorithms.connectivity import local_edge_connectivity
            lam = local_edge_connectivity(self._h, e[0], e[1], auxiliary=self._aux,
                                          residual=self._res, cutoff=self.k + 1)
            self._cache[e] = lam <= self.k
        return self._cache[e]


def _bypassable(g: Graph, k: int) -> List[bool]:
    """Vertices with enough twins that one of them survives any k deletions untouched."""
    from .graph import twin_partition
    tp = twin_partition(g)
    out = [False] * g.n
    for cls, kind in zip(tp.classes, tp.kinds):
        # an edge inside a true-twin class touches two members
        need = k + 2 if kind == "false" else 2 * k + 2
        if len(cls) >= need and g.adj[cls[0]]:
            for v in cls:
                out[v] = True
    return out


def solve_branching(inst: Instance, use_twin_consolidation: bool = False,
                    prune_unbreakable: bool = False, prune_twins: bool = False,
                    stats: Optional[SearchStats] = None) -> Tuple[Optional[int], Optional[DeletionSet]]:
    """Minimum |F| <= k, or (None, None).

    A single depth-first search with a best-so-far bound. prune_unbreakable
    skips path edges whose endpoints are joined by more than k edge-disjoint
    paths in the input graph; such an edge can never be a crossing edge of a
    feasible partition, so optimality is kept while large gadgets become
    tractable.
    """
    g: Graph = inst.graph
    if g.weights is not None and any(w != 1 for w in g.weights.values()):
        raise ValueError("solve_branching handles unit weights only; use the weighted oracle")
    s, k = inst.s, inst.k
    st = stats if stats is not None else SearchStats()
    st.bound = (s + 1) ** k
    adj = [set(a) for a in g.adj]
    breakable = _Breakable(g, k) if prune_unbreakable else None
    twin_ok = _bypassable(g, k) if prune_twins else None
    best: List = [k + 1, None]
    chosen: List[Edge] = []

    def rec():
        path = violating_path(g.n, adj, s)
        if path is None:
            st.leaves += 1
            if len(chosen) < best[0]:
                best[0], best[1] = len(chosen), list(chosen)
            return
        if len(chosen) + 1 >= best[0]:
            st.leaves += 1
            return
        st.internal += 1
        last = len(path) - 1
        for i, (a, b) in enumerate(zip(path, path[1:])):
            e = norm(a, b)
            if twin_ok is not None and ((i > 0 and twin_ok[a]) or (i + 1 < last and twin_ok[b])):
                continue
            if breakable is not None and not breakable(e):
                continue
            adj[a].discard(b)
            adj[b].discard(a)
            chosen.append(e)
            rec()
            chosen.pop()
            adj[a].add(b)
            adj[b].add(a)
            if best[0] == 0:
                return

    rec()
    if best[1] is None:
        return None, None
    f = best[1]
    if use_twin_consolidation and s >= 2:
        f = consolidate_twins(g, s, f)
    return len(f), make_deletion(g, f, verified=False)


def consolidate_twins(g: Graph, s: int, f: List[Edge]) -> List[Edge]:
    """Rewrite a solution so that, per twin class, surplus members join one component.

    The rewrite is only kept when the result is feasible and no larger; it is a
    normalization of solutions, not an instance reduction.
    """
    from .graph import components, delete_edges, twin_partition
    from .verifier import Instance as _I, verify_undirected

    current = list(f)
    tp = twin_partition(g)
    for cls in tp.classes:
        if len(cls) < 2:
            continue
        comp = components(delete_edges(g, current)).component_id
        groups: Dict[int, List[int]] = {}
        for v in cls:
            groups.setdefault(comp[v], []).append(v)
        if len(groups) <= 1 and all(len(x) <= 1 for x in groups.values()):
            continue
        t = cls[0]
        gamma = {c: sum(1 for w in g.adj[t] if comp[w] == c) for c in groups}
        target = max(sorted(groups), key=lambda c: gamma[c])
        label = list(comp)
        for c, vs in groups.items():
            for v in vs[1:] if c != target else []:
                label[v] = target
        cand = [e for e in g.sorted_edges() if label[e[0]] != label[e[1]]]
        if len(cand) <= len(current) and verify_undirected(_I(g, s, len(cand)), cand).feasible:
            current = cand
    return current
