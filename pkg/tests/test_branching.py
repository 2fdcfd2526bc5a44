import pytest

from sclub.branching import SearchStats, consolidate_twins, solve_branching, violating_path
from sclub.graph import Graph, complete_graph, path_graph
from sclub.instances import random_instance, random_nd
from sclub.oracle import opt_undirected
from sclub.verifier import Instance, verify_undirected


def two_k4_bridge():
    es = [(a, b) for a in range(4) for b in range(a + 1, 4)]
    es += [(a + 4, b + 4) for a, b in es] + [(3, 4)]
    return Graph(8, es)


@pytest.mark.parametrize("inst, expected", [
    (Instance(path_graph(7), 2, 2), 2),
    (Instance(Graph(6, [(0, i) for i in range(1, 6)]), 2, 0), 0),
    (Instance(two_k4_bridge(), 1, 1), 1),
    (Instance(path_graph(4), 1, 0), None),
])
def test_examples(inst, expected):
    val, f = solve_branching(inst)
    assert val == expected
    if val is not None:
        assert verify_undirected(inst, f)


def test_bridge_is_the_cut():
    _, f = solve_branching(Instance(two_k4_bridge(), 1, 1))
    assert f.edges == frozenset({(3, 4)})


def test_violating_path_shape():
    g = path_graph(5)
    p = violating_path(g.n, [set(a) for a in g.adj], 2)
    assert p == [0, 1, 2, 3]
    assert violating_path(g.n, [set(a) for a in g.adj], 4) is None


def test_weighted_input_refused():
    g = Graph(2, [(0, 1)], {(0, 1): 2})
    with pytest.raises(ValueError):
        solve_branching(Instance(g, 0, 2))


@pytest.mark.parametrize("flags", [
    {},
    {"prune_unbreakable": True},
    {"prune_twins": True},
    {"prune_unbreakable": True, "prune_twins": True},
    {"use_twin_consolidation": True},
])
def test_matches_oracle(rng, flags):
    for _ in range(150):
        inst = random_instance(rng)
        st = SearchStats()
        val, f = solve_branching(inst, stats=st, **flags)
        assert val == opt_undirected(inst)[0]
        if val is not None:
            assert verify_undirected(inst, f) and len(f) == val
        assert st.leaves <= st.bound == (inst.s + 1) ** inst.k


def test_twin_pruning_on_blowups(rng):
    # large twin classes are where the bypass rule fires
    fired = 0
    for _ in range(60):
        g = random_nd(3, rng.randint(6, 10), rng)
        inst = Instance(g, rng.randint(1, 3), rng.randint(0, 3))
        plain, pruned = SearchStats(), SearchStats()
        a = solve_branching(inst, stats=plain)[0]
        b, f = solve_branching(inst, prune_twins=True, prune_unbreakable=True, stats=pruned)
        assert a == b == opt_undirected(inst)[0]
        if b is not None:
            assert verify_undirected(inst, f)
        fired += pruned.nodes < plain.nodes
    assert fired > 0


def test_consolidation_keeps_feasibility(rng):
    for _ in range(80):
        g = random_nd(3, rng.randint(4, 9), rng)
        inst = Instance(g, rng.randint(2, 3), rng.randint(0, 4))
        val, f = solve_branching(inst)
        if val is None:
            continue
        f2 = consolidate_twins(g, inst.s, sorted(f.edges))
        assert len(f2) <= val
        assert verify_undirected(inst, f2)


def test_clique_needs_nothing():
    st = SearchStats()
    assert solve_branching(Instance(complete_graph(5), 1, 3), stats=st)[0] == 0
    assert st.internal == 0 and st.leaves == 1
