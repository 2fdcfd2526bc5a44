"""Bicriteria scheme for graphs without long induced cycles.

Two regimes. When s <= k(t-3)/eps the exact (s+1)^k search is affordable
and is used as is. Otherwise every pair farther apart than s becomes a
terminal pair of an edge multicut instance: an exact multicut is a valid
answer up to a stretch of k(t-3) <= eps*s, and an infeasible multicut
certifies that the exact instance is a NO-instance.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import FrozenSet, List, Optional, Set, Tuple

from .branching import solve_branching
from .graph import INF, Edge, Graph, bfs_distances, norm
from .recognition import is_chordal, max_induced_cycle_bound
from .verifier import DeletionSet, Instance, make_deletion, verify_undirected


class GuaranteeError(RuntimeError):
    """The promised diameter bound failed on a returned solution."""


@dataclass
class MulticutInstance:
    graph: Graph
    terminal_pairs: FrozenSet[Edge]
    k: int

    def __init__(self, graph: Graph, terminal_pairs, k: int):
        pairs = set()
        for u, v in terminal_pairs:
            if u == v:
                raise ValueError(f"terminal pair ({u}, {v}) is not two distinct vertices")
            pairs.add(norm(u, v))
        self.graph = graph
        self.terminal_pairs = frozenset(pairs)
        self.k = k


@dataclass
class BicriteriaResult:
    verdict: str  # "solution" | "no"
    regime: str  # "exact" | "multicut"
    certified_diameter_bound: int
    deletion: Optional[DeletionSet] = None
    stats: dict = field(default_factory=dict)

    @property
    def solution(self) -> Optional[DeletionSet]:
        return self.deletion


def _shortest_path(adj: List[Set[int]], a: int, b: int) -> Optional[List[int]]:
    parent = {a: -1}
    frontier = [a]
    while frontier and b not in parent:
        nxt = []
        for u in frontier:
            for w in sorted(adj[u]):
                if w not in parent:
                    parent[w] = u
                    nxt.append(w)
        frontier = nxt
    if b not in parent:
        return None
    path = [b]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    return path[::-1]


def solve_multicut_exact(mc: MulticutInstance) -> Optional[DeletionSet]:
    """Minimum-cardinality multicut of size <= k, or None.

    Iterative deepening over the budget; at each node some still-connected
    pair is picked and one edge of a shortest path between them is cut.
    Every multicut hits that path, so no optimum is missed.
    """
    g = mc.graph
    pairs = sorted(mc.terminal_pairs)
    adj = [set(a) for a in g.adj]
    chosen: List[Edge] = []

    def open_pair() -> Optional[List[int]]:
        for a, b in pairs:
            p = _shortest_path(adj, a, b)
            if p is not None:
                return p
        return None

    def rec(budget: int) -> bool:
        path = open_pair()
        if path is None:
            return True
        if budget == 0:
            return False
        for a, b in zip(path, path[1:]):
            adj[a].discard(b)
            adj[b].discard(a)
            chosen.append(norm(a, b))
            if rec(budget - 1):
                return True
            chosen.pop()
            adj[a].add(b)
            adj[b].add(a)
        return False

    for budget in range(mc.k + 1):
        if rec(budget):
            return make_deletion(g, chosen)
    return None


def regime_for(s: int, k: int, epsilon: Fraction, t: int) -> str:
    # boundary s == k(t-3)/eps goes to the exact side
    return "exact" if s <= Fraction(k * (t - 3)) / epsilon else "multicut"


def solve_bicriteria(inst: Instance, epsilon, t: int, check_cycles: Optional[bool] = None,
                     cycle_budget: int = 1_000_000) -> BicriteriaResult:
    """(k, (1+eps)s) solution or a sound NO.

    check_cycles: re-verify the induced-cycle promise (default: when n <= 200
    or t = 4, where chordality is a linear-time test).
    """
    eps = Fraction(epsilon)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    if t < 4:
        raise ValueError("t must be at least 4")
    g: Graph = inst.graph
    if inst.directed:
        raise ValueError("the bicriteria scheme is for undirected graphs")
    s, k = inst.s, inst.k
    if check_cycles is None:
        check_cycles = t == 4 or g.n <= 200
    if check_cycles:
        if t == 4:
            ok = is_chordal(g)
        else:
            ok = max_induced_cycle_bound(g, t, cycle_budget).holds
        if not ok:
            raise ValueError(f"graph has an induced cycle of length >= {t}; the guarantee does not hold")

    regime = regime_for(s, k, eps, t)
    relaxed = floor((1 + eps) * s)
    if regime == "exact":
        val, f = solve_branching(inst)
        if val is None:
            return BicriteriaResult("no", regime, s)
        if not verify_undirected(inst, f):
            raise GuaranteeError("exact search returned an infeasible set")
        return BicriteriaResult("solution", regime, s, f)

    pairs = []
    for u in range(g.n):
        d = bfs_distances(g, u)
        pairs.extend((u, v) for v in range(u + 1, g.n) if d[v] != INF and d[v] > s)
    mc = MulticutInstance(g, pairs, k)
    f = solve_multicut_exact(mc)
    stats = {"terminal_pairs": len(mc.terminal_pairs)}
    if f is None:
        return BicriteriaResult("no", regime, relaxed, None, stats)
    bound = min(s + k * (t - 3), relaxed)
    v = verify_undirected(inst, f, bound=bound)
    if not v:
        raise GuaranteeError(f"component diameter above {bound}: {v.witness}")
    return BicriteriaResult("solution", regime, bound, f, stats)


def separates(g: Graph, f, pairs) -> bool:
    """Every pair lies in different components of G - F."""
    from .graph import components, delete_edges
    comp = components(delete_edges(g, f)).component_id
    return all(comp[a] != comp[b] for a, b in pairs)
