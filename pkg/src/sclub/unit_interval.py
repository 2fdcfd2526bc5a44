"""Block DP for unit interval graphs over a consecutive (umbrella) vertex order.

Components of an optimal solution are runs of consecutive vertices.
DP[i] = min over j of DP[j] + crosscost(j, i), where positions j..i-1 form a
block of diameter <= s and crosscost counts edges leaving that block to the
right. Each deleted edge is charged once, at the block holding its left end.
"""
from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

import numpy as np

from .graph import Graph, norm
from .recognition import check_unit_order
from .verifier import DeletionSet, Instance, make_deletion


def _reach_right(g: Graph, order: Sequence[int]) -> np.ndarray:
    pos = {v: i for i, v in enumerate(order)}
    hi = np.arange(g.n)
    for i, v in enumerate(order):
        if g.adj[v]:
            hi[i] = max(i, max(pos[w] for w in g.adj[v]))
    return hi


def block_limits(g: Graph, order: Sequence[int], s: int) -> np.ndarray:
    """limit[a] = largest b such that positions a..b induce a connected block of diameter <= s.

    In an umbrella order the farthest pair of a block is its two ends, and
    a shortest path between them may jump greedily to the rightmost
    neighbour; so limit[a] is s greedy jumps from a.
    """
    hi = _reach_right(g, order)
    cur = np.arange(g.n)
    for _ in range(min(s, g.n)):
        nxt = hi[cur]
        if np.array_equal(nxt, cur):
            break
        cur = nxt
    return cur


def cut_cost_table(g: Graph, order: Sequence[int]) -> np.ndarray:
    """T[j, i] = number of edges uv with j <= pos(u) < i <= pos(v) (0-indexed positions).

    In the 1-indexed convention this is the count of edges with
    j < pos(u) <= i < pos(v).
    """
    if not check_unit_order(g, order):
        raise ValueError("order is not a consecutive order of the graph")
    n = g.n
    hi = _reach_right(g, order)
    table = np.zeros((n + 1, n + 1), dtype=np.int64)
    for i in range(1, n + 1):
        c = np.maximum(0, hi[:i] - i + 1)
        table[:i, i] = np.cumsum(c[::-1])[::-1]
    return table


def unit_blocks(g: Graph, order: Sequence[int], s: int) -> Tuple[int, List[Tuple[int, int]]]:
    """Optimal cost and the chosen blocks as half-open position ranges [j, i)."""
    if not check_unit_order(g, order):
        raise ValueError("order is not a consecutive order of the graph")
    n = g.n
    if n == 0:
        return 0, []
    hi = _reach_right(g, order)
    limit = block_limits(g, order, s)
    INF = np.iinfo(np.int64).max // 4
    dp = np.full(n + 1, INF, dtype=np.int64)
    dp[0] = 0
    back = np.zeros(n + 1, dtype=np.int64)
    # limit is non-decreasing, so the feasible j for a given i form a range ending at i-1
    jmin = 0
    for i in range(1, n + 1):
        while limit[jmin] < i - 1:
            jmin += 1
        c = np.maximum(0, hi[jmin:i] - i + 1)
        cross = np.cumsum(c[::-1])[::-1]
        cand = dp[jmin:i] + cross
        t = int(np.argmin(cand))  # first minimum = smallest j = longest last block
        dp[i] = cand[t]
        back[i] = jmin + t
    blocks = []
    i = n
    while i > 0:
        j = int(back[i])
        blocks.append((j, i))
        i = j
    return int(dp[n]), blocks[::-1]


def solve_unit_interval(inst: Instance, order: Optional[Sequence[int]] = None) -> Tuple[int, DeletionSet]:
    """Optimal deletion count (not capped by k) with its witness."""
    g: Graph = inst.graph
    if order is None:
        from .recognition import order_from_model, unit_order
        order = order_from_model(inst.model) if inst.model else unit_order(g)
        if order is None:
            raise ValueError("graph is not a unit interval graph")
    cost, blocks = unit_blocks(g, order, inst.s)
    label = [0] * g.n
    for b, (j, i) in enumerate(blocks):
        for p in range(j, i):
            label[order[p]] = b
    f = [e for e in g.sorted_edges() if label[e[0]] != label[e[1]]]
    assert len(f) == cost
    return cost, make_deletion(g, f)
