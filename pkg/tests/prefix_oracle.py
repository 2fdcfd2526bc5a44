"""Recompute a DP state from a concrete partial solution on the processed prefix.

Independent of the DP code: it only sees the clique path, a vertex labelling
and the graph, and derives partition, profiles, persistence and budget by BFS.
"""
from sclub.graph import INF, Graph, bfs_distances


def introduction(cp):
    """Vertex -> index of the first bag containing it."""
    first = {}
    for i, bag in enumerate(cp.bags):
        for v in bag:
            first.setdefault(v, i)
    return first


def departure(cp):
    """Vertex -> index of the first bag after its interval that no longer holds it."""
    gone = {}
    for i, bag in enumerate(cp.bags):
        for v in cp.bags[i - 1] if i else ():
            if v not in bag:
                gone.setdefault(v, i)
    return gone


def state_image(g: Graph, cp, index: int, labels, s: int, cap: int):
    """The state key and budget that `labels` induces after bag `index`, or None.

    None means the labelling is not a valid partial solution (a finished
    component is too wide or a live part is disconnected).
    """
    first = introduction(cp)
    left = departure(cp)
    order = sorted(first, key=lambda v: (first[v], v))
    rank = {v: r for r, v in enumerate(order)}
    prefix = {v for v in first if first[v] <= index}
    bag = cp.bags[index]
    lab = {v: labels[v] for v in prefix}
    kept = [e for e in g.edges if e[0] in prefix and e[1] in prefix and lab[e[0]] == lab[e[1]]]
    budget = sum(g.weight(*e) for e in g.edges
                 if e[0] in prefix and e[1] in prefix and lab[e[0]] != lab[e[1]])
    h = Graph(g.n, kept)
    groups = {}
    for v in prefix:
        groups.setdefault(lab[v], set()).add(v)
    parts = []
    for members in groups.values():
        dist = {v: bfs_distances(h, v, members) for v in members}
        delta = max(dist[u][v] for u in members for v in members)
        if delta == INF:
            return None
        live = sorted((v for v in members if v in bag), key=rank.get)
        if not live:
            if delta > s:
                return None
            continue
        # the core is the batch of the component that left the bags first
        out = [v for v in members if v not in bag]
        core = {v for v in out if left[v] == min(left[x] for x in out)} if out else set()
        if core:
            to_core = {v: min(dist[c][v] for c in core) for v in live}
            d = min(to_core.values())
            levels = [to_core[v] - d for v in live]
            if any(x not in (0, 1) for x in levels) or levels != sorted(levels):
                return ("gap", levels)
            j = levels.count(0)
        else:
            d, j = 0, len(live)
        pers = min(index - min(first[v] for v in members) + 1, cap)
        parts.append((tuple(live), (d, j, int(delta)), pers))
    parts.sort(key=lambda p: rank[p[0][0]])
    key = (tuple(p[0] for p in parts), tuple(p[1] for p in parts), tuple(p[2] for p in parts))
    return key, budget


def all_images(g: Graph, cp, index: int, s: int, k: int, cap: int):
    """Every state key reachable by some labelling of the prefix, with its least budget.

    Restricted-growth enumeration, pruned by the budget. Also returns the
    labellings whose boundary distances spread over more than two levels.
    """
    first = introduction(cp)
    prefix = sorted((v for v in first if first[v] <= index), key=lambda v: (first[v], v))
    out = {}
    gaps = []
    lab = {}

    def rec(i, blocks, cost):
        if cost > k:
            return
        if i == len(prefix):
            img = state_image(g, cp, index, lab, s, cap)
            if img is not None and img[0] == "gap":
                gaps.append(dict(lab))
            elif img is not None:
                key, b = img
                if key not in out or b < out[key]:
                    out[key] = b
            return
        v = prefix[i]
        for b in range(blocks + 1):
            add = sum(g.weight(v, w) for w in g.adj[v] if w in lab and lab[w] != b)
            lab[v] = b
            rec(i + 1, max(blocks, b + 1), cost + add)
            del lab[v]

    rec(0, 0, 0)
    return out, gaps
