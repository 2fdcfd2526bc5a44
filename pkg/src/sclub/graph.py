"""Core graph types and distance queries.

Vertices are dense integers 0..n-1. Undirected edges are stored as the
normalized pair (min, max); arcs are plain ordered pairs.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

INF = math.inf

Edge = Tuple[int, int]


def norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph, immutable after construction."""

    __slots__ = ("n", "edges", "adj", "weights", "_nbrsets")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (),
                 weights: Optional[Dict[Edge, int]] = None):
        if n < 0:
            raise ValueError("negative vertex count")
        es = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {(u, v)} out of range for n={n}")
            es.add(norm(u, v))
        adj: List[List[int]] = [[] for _ in range(n)]
        for u, v in es:
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.edges: FrozenSet[Edge] = frozenset(es)
        self.adj: Tuple[Tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self._nbrsets = None
        if weights is not None:
            w = {}
            for e, x in weights.items():
                e = norm(*e)
                if e not in es:
                    raise ValueError(f"weight on non-edge {e}")
                if int(x) < 1:
                    raise ValueError(f"weight {x} < 1 on {e}")
                w[e] = int(x)
            missing = es - set(w)
            for e in missing:
                w[e] = 1
            self.weights: Optional[Dict[Edge, int]] = w
        else:
            self.weights = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def nbrs(self, v: int) -> FrozenSet[int]:
        if self._nbrsets is None:
            self._nbrsets = tuple(frozenset(a) for a in self.adj)
        return self._nbrsets[v]

    def has_edge(self, u: int, v: int) -> bool:
        return norm(u, v) in self.edges

    def weight(self, u: int, v: int) -> int:
        if self.weights is None:
            return 1
        return self.weights[norm(u, v)]

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def induced(self, vertices: Iterable[int]) -> Tuple["Graph", List[int]]:
        """Induced subgraph relabelled to 0..len-1; returns (graph, old ids)."""
        old = sorted(set(vertices))
        idx = {v: i for i, v in enumerate(old)}
        es = [(idx[u], idx[v]) for u, v in self.edges if u in idx and v in idx]
        w = None
        if self.weights is not None:
            w = {norm(idx[u], idx[v]): x for (u, v), x in self.weights.items() if u in idx and v in idx}
        return Graph(len(old), es, w), old

    def __eq__(self, other) -> bool:
        return (isinstance(other, Graph) and self.n == other.n and self.edges == other.edges
                and (self.weights or {}) == (other.weights or {}))

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class Digraph:
    """Simple directed graph, immutable after construction."""

    __slots__ = ("n", "arcs", "out", "inn")

    def __init__(self, n: int, arcs: Iterable[Sequence[int]] = ()):
        a = set()
        for e in arcs:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc {(u, v)} out of range for n={n}")
            a.add((u, v))
        out: List[List[int]] = [[] for _ in range(n)]
        inn: List[List[int]] = [[] for _ in range(n)]
        for u, v in a:
            out[u].append(v)
            inn[v].append(u)
        self.n = n
        self.arcs: FrozenSet[Edge] = frozenset(a)
        self.out = tuple(tuple(sorted(x)) for x in out)
        self.inn = tuple(tuple(sorted(x)) for x in inn)

    @property
    def m(self) -> int:
        return len(self.arcs)

    @property
    def edges(self) -> FrozenSet[Edge]:
        return self.arcs

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.arcs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Digraph) and self.n == other.n and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.n, self.arcs, "d"))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"


def bidirect(g: Graph) -> Digraph:
    return Digraph(g.n, [a for u, v in g.edges for a in ((u, v), (v, u))])


@dataclass(frozen=True)
class Components:
    component_id: Tuple[int, ...]
    count: int

    def groups(self) -> List[List[int]]:
        out: List[List[int]] = [[] for _ in range(self.count)]
        for v, c in enumerate(self.component_id):
            out[c].append(v)
        return out


@dataclass(frozen=True)
class TwinPartition:
    classes: Tuple[Tuple[int, ...], ...]
    kinds: Tuple[str, ...]  # "true" or "false"
    class_of: Tuple[int, ...]


def bfs_distances(g, source: int, allowed=None) -> List[float]:
    """Distances from source; INF where unreachable. For a Digraph this follows arcs."""
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range")
    nb = g.out if isinstance(g, Digraph) else g.adj
    dist: List[float] = [INF] * g.n
    dist[source] = 0
    q = deque([source])
    while q:
        u = q.popleft()
        du = dist[u] + 1
        for w in nb[u]:
            if dist[w] == INF and (allowed is None or w in allowed):
                dist[w] = du
                q.append(w)
    return dist


def diameter(g: Graph, vertex_subset: Optional[Iterable[int]] = None) -> float:
    """Largest finite distance within any component (0 for empty or singleton)."""
    if vertex_subset is None:
        verts = range(g.n)
        allowed = None
    else:
        allowed = set(vertex_subset)
        verts = sorted(allowed)
    best = 0
    for v in verts:
        d = bfs_distances(g, v, allowed)
        for w in verts:
            if d[w] != INF and d[w] > best:
                best = d[w]
    return best


def components(g) -> Components:
    n = g.n
    if isinstance(g, Digraph):
        nb = [set(g.out[v]) | set(g.inn[v]) for v in range(n)]
    else:
        nb = g.adj
    cid = [-1] * n
    c = 0
    for s in range(n):
        if cid[s] != -1:
            continue
        cid[s] = c
        stack = [s]
        while stack:
            u = stack.pop()
            for w in nb[u]:
                if cid[w] == -1:
                    cid[w] = c
                    stack.append(w)
        c += 1
    return Components(tuple(cid), c)


def twin_partition(g: Graph) -> TwinPartition:
    """Group vertices by open neighborhood (false twins) and closed neighborhood (true twins).

    A vertex whose closed-key class is a singleton falls back to its open-key
    class. Isolated vertices are always false twins.
    """
    open_key = [tuple(g.adj[v]) for v in range(g.n)]
    closed_key = [tuple(sorted(g.adj[v] + (v,))) for v in range(g.n)]
    by_closed: Dict[tuple, List[int]] = {}
    for v in range(g.n):
        if g.adj[v]:
            by_closed.setdefault(closed_key[v], []).append(v)
    classes: List[Tuple[int, ...]] = []
    kinds: List[str] = []
    class_of = [-1] * g.n
    for key in sorted(by_closed):
        vs = by_closed[key]
        if len(vs) >= 2:
            for v in vs:
                class_of[v] = len(classes)
            classes.append(tuple(vs))
            kinds.append("true")
    by_open: Dict[tuple, List[int]] = {}
    for v in range(g.n):
        if class_of[v] == -1:
            by_open.setdefault(open_key[v], []).append(v)
    for key in sorted(by_open, key=lambda k: by_open[k][0]):
        vs = by_open[key]
        for v in vs:
            class_of[v] = len(classes)
        classes.append(tuple(vs))
        kinds.append("false")
    order = sorted(range(len(classes)), key=lambda i: classes[i][0])
    remap = {old: new for new, old in enumerate(order)}
    return TwinPartition(tuple(classes[i] for i in order), tuple(kinds[i] for i in order),
                         tuple(remap[c] for c in class_of))


def _edge_list(f) -> List[Edge]:
    if hasattr(f, "edges") and not isinstance(f, (set, frozenset, list, tuple)):
        return list(f.edges)
    return list(f)


def delete_edges(g, f) -> "Graph | Digraph":
    """Return g without the edges (or arcs) in f; g itself is untouched."""
    items = _edge_list(f)
    if isinstance(g, Digraph):
        rm = {tuple(a) for a in items}
        bad = rm - g.arcs
        if bad:
            raise ValueError(f"unknown arc(s) {sorted(bad)}")
        return Digraph(g.n, g.arcs - rm)
    rm = {norm(*e) for e in items}
    bad = rm - g.edges
    if bad:
        raise ValueError(f"unknown edge(s) {sorted(bad)}")
    w = None
    if g.weights is not None:
        w = {e: x for e, x in g.weights.items() if e not in rm}
    return Graph(g.n, g.edges - rm, w)


def all_pairs(g) -> List[List[float]]:
    return [bfs_distances(g, v) for v in range(g.n)]


# small constructors used across tests and generators

def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def from_networkx(h) -> Graph:
    nodes = sorted(h.nodes())
    idx = {v: i for i, v in enumerate(nodes)}
    return Graph(len(nodes), [(idx[u], idx[v]) for u, v in h.edges()])
