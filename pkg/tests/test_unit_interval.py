import numpy as np
import pytest

from sclub.graph import Graph, complete_graph, path_graph
from sclub.instances import random_unit_interval
from sclub.oracle import opt_partition
from sclub.recognition import order_from_model
from sclub.unit_interval import block_limits, cut_cost_table, solve_unit_interval, unit_blocks
from sclub.verifier import Instance, verify_undirected


@pytest.mark.parametrize("n, s, expected", [(6, 2, 1), (7, 1, 3), (7, 2, 2), (1, 1, 0)])
def test_paths(n, s, expected):
    cost, f = solve_unit_interval(Instance(path_graph(n), s, n), list(range(n)))
    assert cost == expected
    assert verify_undirected(Instance(path_graph(n), s, cost), f)


def test_clique_costs_nothing():
    assert solve_unit_interval(Instance(complete_graph(6), 1, 0))[0] == 0


def test_cut_table_examples():
    t = cut_cost_table(complete_graph(4), [0, 1, 2, 3])
    assert t[0, 2] == 4  # edges 13, 14, 23, 24 in 1-indexed terms
    assert all(t[i, i] == 0 for i in range(5))


def test_cut_table_against_direct_count(rng):
    for _ in range(40):
        g, model = random_unit_interval(rng.randint(1, 15), rng)
        order = order_from_model(model)
        pos = {v: i for i, v in enumerate(order)}
        t = cut_cost_table(g, order)
        for j in range(g.n + 1):
            for i in range(j, g.n + 1):
                direct = sum(1 for a, b in g.edges
                             if j <= min(pos[a], pos[b]) < i <= max(pos[a], pos[b]))
                assert t[j, i] == direct


def test_block_limits_against_bfs(rng):
    from sclub.graph import diameter
    for _ in range(40):
        g, model = random_unit_interval(rng.randint(1, 14), rng, density=rng.uniform(0.3, 1.0))
        order = order_from_model(model)
        s = rng.randint(1, 4)
        lim = block_limits(g, order, s)
        for a in range(g.n):
            best = a
            for b in range(a, g.n):
                sub, _ = g.induced(order[a:b + 1])
                from sclub.graph import components
                if components(sub).count == 1 and diameter(sub) <= s:
                    best = b
                else:
                    break
            assert lim[a] == best


def test_bad_order_refused():
    g = path_graph(4)
    with pytest.raises(ValueError):
        unit_blocks(g, [0, 2, 1, 3], 1)


def test_claw_refused():
    claw = Graph(4, [(0, 1), (0, 2), (0, 3)])
    with pytest.raises(ValueError):
        solve_unit_interval(Instance(claw, 2, 3))


def test_matches_oracle(rng):
    positive = 0
    for _ in range(200):
        n = rng.randint(1, 12)
        g, model = random_unit_interval(n, rng, density=rng.uniform(0.4, 1.0))
        s = rng.randint(1, 3)
        inst = Instance(g, s, g.m, model)
        cost, f = solve_unit_interval(inst)
        assert verify_undirected(Instance(g, s, cost), f) and len(f) == cost
        assert opt_partition(Instance(g, s, cost))[0] == cost
        positive += cost > 0
    assert positive >= 50


def test_output_shape():
    g = path_graph(5)
    cost, blocks = unit_blocks(g, list(range(5)), 1)
    assert cost == 2
    assert blocks[0][0] == 0 and blocks[-1][1] == 5
    assert all(a[1] == b[0] for a, b in zip(blocks, blocks[1:]))
    assert isinstance(block_limits(g, list(range(5)), 1), np.ndarray)
