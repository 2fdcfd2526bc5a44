import random
from itertools import combinations

import pytest

from sclub.graph import Graph, bfs_distances


@pytest.fixture
def rng():
    return random.Random(20240611)


def max_clique(g: Graph):
    best = []
    for size in range(1, g.n + 1):
        for c in combinations(range(g.n), size):
            if all(g.has_edge(a, b) for a, b in combinations(c, 2)):
                best = list(c)
                break
        else:
            break
    return best


def component_diameter(g: Graph, members, removed=frozenset()):
    """Diameter of G[members] minus the edges in `removed`; inf if disconnected."""
    members = set(members)
    h = Graph(g.n, [e for e in g.edges if e[0] in members and e[1] in members and e not in removed])
    worst = 0
    for v in members:
        d = bfs_distances(h, v)
        worst = max(worst, max(d[u] for u in members))
    return worst
