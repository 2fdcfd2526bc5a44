"""Brute-force exact solvers for tiny instances.

Two independent strategies for the undirected problem: edge subsets by
increasing size, and vertex partitions whose crossing edges form F.
"""
from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import List, Optional, Tuple

from .graph import Digraph, Graph, norm
from .verifier import DeletionSet, Instance, make_deletion

Result = Tuple[Optional[int], Optional[DeletionSet]]


def _undirected_ok(n: int, edges, s: int) -> bool:
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return _bounded(n, adj, s)


def _bounded(n: int, adj, s: int) -> bool:
    # every vertex reached from a source must be within s steps
    for src in range(n):
        dist = {src: 0}
        q = deque([src])
        while q:
            u = q.popleft()
            du = dist[u]
            for w in adj[u]:
                if w not in dist:
                    if du + 1 > s:
                        return False
                    dist[w] = du + 1
                    q.append(w)
    return True


def opt_undirected(inst: Instance) -> Result:
    """Smallest F (|F| <= k) by cardinality, first in lexicographic order within a size."""
    g: Graph = inst.graph
    edges = g.sorted_edges()
    for size in range(0, min(inst.k, len(edges)) + 1):
        for f in combinations(range(len(edges)), size):
            drop = set(f)
            rest = [e for i, e in enumerate(edges) if i not in drop]
            if _undirected_ok(g.n, rest, inst.s):
                return size, DeletionSet(frozenset(edges[i] for i in f), size, True)
    return None, None


def opt_weighted(inst: Instance) -> Result:
    """Minimum total weight F with weight <= k; ties broken by size, then lex order."""
    g: Graph = inst.graph
    edges = g.sorted_edges()
    best: Optional[Tuple[int, int, tuple]] = None
    for size in range(0, min(inst.k, len(edges)) + 1):
        for f in combinations(range(len(edges)), size):
            wt = sum(g.weight(*edges[i]) for i in f)
            if wt > inst.k or (best is not None and (wt, size) >= best[:2]):
                continue
            drop = set(f)
            rest = [e for i, e in enumerate(edges) if i not in drop]
            if _undirected_ok(g.n, rest, inst.s):
                best = (wt, size, f)
    if best is None:
        return None, None
    return best[0], DeletionSet(frozenset(edges[i] for i in best[2]), best[0], True)


def _directed_ok(n: int, arcs, s: int) -> bool:
    out = [[] for _ in range(n)]
    for u, v in arcs:
        out[u].append(v)
    return _bounded(n, out, s)


def opt_directed(inst: Instance, paired: bool = False) -> Result:
    """Minimum arc deletion set.

    With paired=True the units of deletion are undirected edges of a
    symmetric digraph (both arcs go together) and the value counts pairs.
    """
    g: Digraph = inst.graph
    if paired:
        units = sorted({norm(u, v) for u, v in g.arcs})
        for u, v in units:
            if (u, v) not in g.arcs or (v, u) not in g.arcs:
                raise ValueError("paired mode needs a symmetric digraph")
        expand = lambda e: ((e[0], e[1]), (e[1], e[0]))
    else:
        units = g.sorted_edges()
        expand = lambda e: (e,)
    for size in range(0, min(inst.k, len(units)) + 1):
        for f in combinations(range(len(units)), size):
            gone = {a for i in f for a in expand(units[i])}
            rest = [a for a in g.arcs if a not in gone]
            if _directed_ok(g.n, rest, inst.s):
                return size, DeletionSet(frozenset(gone), len(gone), True)
    return None, None


def opt_partition(inst: Instance) -> Result:
    """Enumerate vertex partitions; F is the set of crossing edges. Meant for n <= 10."""
    g: Graph = inst.graph
    n = g.n
    weighted = g.weights is not None
    label = [-1] * n
    best: List = [None, None]  # value, labels

    def rec(v: int, blocks: int, cost: int):
        if best[0] is not None and cost >= best[0]:
            return
        if v == n:
            rest = [(a, b) for a, b in g.edges if label[a] == label[b]]
            if _undirected_ok(n, rest, inst.s):
                best[0], best[1] = cost, list(label)
            return
        for b in range(blocks + 1):
            add = 0
            for w in g.adj[v]:
                if w < v and label[w] != b:
                    add += g.weight(v, w) if weighted else 1
            if cost + add > inst.k:
                continue
            label[v] = b
            rec(v + 1, max(blocks, b + 1), cost + add)
            label[v] = -1

    rec(0, 0, 0)
    if best[0] is None:
        return None, None
    lab = best[1]
    f = [e for e in g.sorted_edges() if lab[e[0]] != lab[e[1]]]
    return best[0], make_deletion(g, f, verified=True)


def opt(inst: Instance) -> Result:
    if inst.directed:
        return opt_directed(inst)
    if inst.graph.weights is not None:
        return opt_weighted(inst)
    return opt_undirected(inst)


def _far_pair_path(n: int, out, s: int) -> Optional[List[int]]:
    """A shortest u->v path for the first ordered pair with s < dist < inf."""
    for src in range(n):
        parent = {src: -1}
        frontier = [src]
        depth = 0
        while frontier:
            depth += 1
            nxt = []
            for u in frontier:
                for w in sorted(out[u]):
                    if w not in parent:
                        parent[w] = u
                        if depth > s:
                            path = [w]
                            while parent[path[-1]] != -1:
                                path.append(parent[path[-1]])
                            return path[::-1]
                        nxt.append(w)
            frontier = nxt
    return None


def opt_directed_branching(inst: Instance, prune: bool = True) -> Result:
    """Minimum arc deletion set by iterative deepening.

    A pair reachable at distance > s can only be fixed by making it
    unreachable, so some arc of any path between them must go. With prune,
    arcs (x, y) with more than k arc-disjoint x->y paths are skipped: cutting
    one leaves x reaching y, hence the pair still reachable.
    """
    g: Digraph = inst.graph
    s, k = inst.s, inst.k
    out = [set(a) for a in g.out]
    chosen: List[Tuple[int, int]] = []
    cache = {}
    h = None
    if prune:
        import networkx as nx
        h = nx.DiGraph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.arcs)

    def cuttable(a) -> bool:
        if h is None:
            return True
        if a not in cache:
            from networkx.algorithms.connectivity import local_edge_connectivity
            cache[a] = local_edge_connectivity(h, a[0], a[1], cutoff=k + 1) <= k
        return cache[a]

    def rec(budget: int) -> bool:
        path = _far_pair_path(g.n, out, s)
        if path is None:
            return True
        if budget == 0:
            return False
        for a in zip(path, path[1:]):
            if not cuttable(a):
                continue
            out[a[0]].discard(a[1])
            chosen.append(a)
            if rec(budget - 1):
                return True
            chosen.pop()
            out[a[0]].add(a[1])
        return False

    for budget in range(k + 1):
        if rec(budget):
            return budget, DeletionSet(frozenset(chosen), budget, False)
    return None, None
