"""Seeded random instance families for tests and benchmarks.

Every generator takes a `random.Random` so runs are reproducible from a
single seed. Families lean towards instances whose optimum is neither 0 nor
"no", since those are the ones that exercise the solvers.
"""
from __future__ import annotations

import random
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from .graph import Digraph, Graph
from .verifier import Instance


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def random_instance(rng: random.Random, n_max: int = 9, s_choices=(1, 2, 3), k_max: int = 4,
                    n_min: int = 2) -> Instance:
    n = rng.randint(n_min, n_max)
    g = gnp(n, rng.uniform(0.25, 0.7), rng)
    return Instance(g, rng.choice(s_choices), rng.randint(0, k_max))


def random_interval(n: int, rng: random.Random, span: Optional[int] = None,
                    max_len: int = 4) -> Tuple[Graph, Dict[int, Tuple[int, int]]]:
    """Intervals with integer endpoints on [0, span]; short intervals keep it path-like."""
    span = span if span is not None else max(4, n)
    model = {}
    for v in range(n):
        a = rng.randint(0, span)
        model[v] = (a, a + rng.randint(0, max_len))
    es = [(u, v) for u, v in combinations(range(n), 2)
          if model[u][0] <= model[v][1] and model[v][0] <= model[u][1]]
    return Graph(n, es), model


def random_unit_interval(n: int, rng: random.Random, length: int = 3,
                         density: float = 1.0) -> Tuple[Graph, Dict[int, Tuple[int, int]]]:
    """Unit intervals [a, a+length]; vertex ids are shuffled so the order is not given away."""
    starts = sorted(rng.randint(0, max(1, int(n * length / (2 * density)))) for _ in range(n))
    ids = list(range(n))
    rng.shuffle(ids)
    model = {ids[i]: (a, a + length) for i, a in enumerate(starts)}
    es = [(u, v) for u, v in combinations(range(n), 2)
          if model[u][0] <= model[v][1] and model[v][0] <= model[u][1]]
    return Graph(n, es), model


def random_split(nc: int, ni: int, rng: random.Random, p: float = 0.4) -> Graph:
    """Clique on 0..nc-1, independent vertices nc..nc+ni-1 with random clique neighbours."""
    es = list(combinations(range(nc), 2))
    for i in range(nc, nc + ni):
        nb = [c for c in range(nc) if rng.random() < p]
        if not nb and nc and rng.random() < 0.7:
            nb = [rng.randrange(nc)]
        es += [(c, i) for c in nb]
    return Graph(nc + ni, es)


def random_nd(kappa: int, n: int, rng: random.Random, p: float = 0.5) -> Graph:
    """Blow-up of a random type graph on kappa classes; each class a clique or independent set."""
    sizes = [1] * kappa
    for _ in range(n - kappa):
        sizes[rng.randrange(kappa)] += 1
    clique = [rng.random() < 0.5 for _ in range(kappa)]
    adj = {(i, j) for i, j in combinations(range(kappa), 2) if rng.random() < p}
    members, start = [], 0
    for sz in sizes:
        members.append(list(range(start, start + sz)))
        start += sz
    es = []
    for i in range(kappa):
        if clique[i]:
            es += list(combinations(members[i], 2))
    for i, j in adj:
        es += [(u, v) for u in members[i] for v in members[j]]
    return Graph(start, es)


def random_chordal(n: int, rng: random.Random, max_clique: int = 3) -> Graph:
    """Each new vertex joins a clique of earlier vertices, so the reverse order is a PEO."""
    adj: List[set] = []
    es = []
    for v in range(n):
        nb: set = set()
        if v:
            u = rng.randrange(v)
            nb = {u}
            cand = list(adj[u])
            rng.shuffle(cand)
            for w in cand:
                if len(nb) >= max_clique:
                    break
                if all(w in adj[x] for x in nb) and rng.random() < 0.6:
                    nb.add(w)
        adj.append(set(nb))
        for u in nb:
            adj[u].add(v)
            es.append((u, v))
    return Graph(n, es)


def random_regular(n: int, r: int, rng: random.Random) -> Graph:
    import networkx as nx
    h = nx.random_regular_graph(r, n, seed=rng.randrange(2 ** 31))
    return Graph(n, list(h.edges()))


def random_digraph(n: int, p: float, rng: random.Random) -> Digraph:
    return Digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p])


def random_dag(n: int, p: float, rng: random.Random) -> Digraph:
    perm = list(range(n))
    rng.shuffle(perm)
    return Digraph(n, [(perm[i], perm[j]) for i, j in combinations(range(n), 2) if rng.random() < p])


def random_rbds(n_red: int, n_blue: int, d: int, k: int, rng: random.Random):
    """Red-blue instance in which every red vertex has exactly d blue neighbours."""
    from .gadgets import RBDSInstance
    es = set()
    for r in range(n_red):
        for b in rng.sample(range(n_blue), d):
            es.add((r, b))
    return RBDSInstance(n_red, n_blue, frozenset(es), k)


def random_mmo(n: int, rng: random.Random, p: float = 0.7, wmax: int = 2, rmax: int = 2):
    from .gadgets import MMOInstance
    es = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p] or [(0, 1)]
    w = {e: rng.randint(1, wmax) for e in es}
    return MMOInstance(Graph(n, es, w), rng.randint(0, rmax))
