import math

import pytest

from sclub.graph import Graph, path_graph
from sclub.instances import random_nd
from sclub.nd import NDStats, footprint_diameter, solve_nd, type_graph
from sclub.oracle import opt_undirected
from sclub.verifier import Instance, verify_undirected

K23 = Graph(5, [(a, b) for a in (0, 1) for b in (2, 3, 4)])


def test_k23():
    assert solve_nd(Instance(K23, 2, 0))[0] == 0
    assert type_graph(K23).size == 2


@pytest.mark.parametrize("k", [1, 2, 3])
def test_p4(k):
    assert type_graph(path_graph(4)).size == 4
    assert solve_nd(Instance(path_graph(4), 2, k))[0] == 1


def test_footprint_examples():
    tg = type_graph(K23)
    assert footprint_diameter(tg, [0, 1], {0: 2, 1: 3}) == 2
    assert footprint_diameter(tg, [1], {1: 2}) == math.inf
    clique = type_graph(Graph(3, [(0, 1), (1, 2), (0, 2)]))
    assert footprint_diameter(clique, [0], {0: 3}) == 1
    assert footprint_diameter(clique, [0], {0: 1}) == 0


def test_refuses_s_one_and_weights():
    with pytest.raises(ValueError):
        solve_nd(Instance(K23, 1, 3))
    with pytest.raises(ValueError):
        solve_nd(Instance(Graph(2, [(0, 1)], {(0, 1): 2}), 2, 3))


def blow_up(type_edges, sizes, cliques):
    members, start = [], 0
    for sz in sizes:
        members.append(range(start, start + sz))
        start += sz
    es = [(u, v) for i, c in enumerate(cliques) if c for u in members[i] for v in members[i] if u < v]
    es += [(u, v) for i, j in type_edges for u in members[i] for v in members[j]]
    return Graph(start, es)


def long_type_graph(rng):
    """Blow-up of P4 or a paw-with-tail so that s = 2 forces deletions."""
    kappa = 4
    edges = [(0, 1), (1, 2), (2, 3)] + ([(0, 2)] if rng.random() < 0.3 else [])
    sizes = [rng.randint(1, 3) for _ in range(kappa)]
    return blow_up(edges, sizes, [rng.random() < 0.5 for _ in range(kappa)])


def test_matches_oracle(rng):
    nontrivial = 0
    for it in range(200):
        if it % 2:
            g, s = random_nd(rng.randint(1, 4), rng.randint(2, 12), rng), rng.choice([2, 3])
        else:
            g, s = long_type_graph(rng), 2
        assert type_graph(g).size <= 4
        inst = Instance(g, s, rng.randint(0, 4))
        st = NDStats()
        val, f = solve_nd(inst, stats=st, check_candidates=True)
        assert val == opt_undirected(inst)[0]
        if val is not None:
            assert verify_undirected(inst, f) and len(f) == val
            nontrivial += val > 0
        assert st.candidates <= st.bound
    assert nontrivial >= 20
