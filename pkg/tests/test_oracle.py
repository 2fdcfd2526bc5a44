from sclub.graph import Digraph, Graph, bidirect, complete_graph, cycle_graph, path_graph
from sclub.instances import random_digraph, random_instance
from sclub.oracle import (
    opt, opt_directed, opt_directed_branching, opt_partition, opt_undirected, opt_weighted,
)
from sclub.verifier import Instance, verify_directed, verify_undirected


def test_examples_undirected():
    assert opt_undirected(Instance(path_graph(4), 2, 3))[0] == 1
    assert opt_undirected(Instance(cycle_graph(5), 1, 5))[0] == 3
    assert opt_undirected(Instance(complete_graph(4), 1, 0))[0] == 0
    assert opt_undirected(Instance(path_graph(4), 1, 0)) == (None, None)


def test_examples_directed():
    chain = Digraph(3, [(0, 1), (1, 2)])
    assert opt_directed(Instance(chain, 1, 2))[0] == 1
    assert opt_directed(Instance(bidirect(complete_graph(3)), 1, 0))[0] == 0
    assert opt_directed(Instance(Digraph(3, [(0, 1), (1, 2), (2, 0)]), 2, 1))[0] == 0


def test_examples_weighted():
    assert opt_weighted(Instance(Graph(2, [(0, 1)], {(0, 1): 2}), 0, 2))[0] == 2
    # bowtie: two triangles joined by a weight-3 bridge
    es = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]
    g = Graph(6, es, {(2, 3): 3})
    val, f = opt_weighted(Instance(g, 1, 3))
    assert val == 3 and f.edges == frozenset({(2, 3)})


def test_weighted_all_ones_agrees(rng):
    for _ in range(200):
        inst = random_instance(rng, n_max=7)
        w = Instance(Graph(inst.graph.n, inst.graph.edges, {e: 1 for e in inst.graph.edges}), inst.s, inst.k)
        assert opt_weighted(w)[0] == opt_undirected(inst)[0]


def test_witnesses_verify(rng):
    for _ in range(100):
        inst = random_instance(rng, n_max=8)
        for val, f in (opt_undirected(inst), opt_partition(inst)):
            if val is not None:
                assert verify_undirected(inst, f) and len(f) == val


def test_partition_handles_weights(rng):
    for _ in range(60):
        inst = random_instance(rng, n_max=7)
        w = {e: rng.randint(1, 3) for e in inst.graph.edges}
        winst = Instance(Graph(inst.graph.n, inst.graph.edges, w), inst.s, inst.k)
        assert opt_partition(winst)[0] == opt_weighted(winst)[0]


def test_directed_branching_matches_enumeration(rng):
    for _ in range(150):
        n = rng.randint(2, 6)
        inst = Instance(random_digraph(n, rng.uniform(0.2, 0.5), rng), rng.randint(1, 3), rng.randint(0, 3))
        a = opt_directed(inst)[0]
        for prune in (True, False):
            val, f = opt_directed_branching(inst, prune=prune)
            assert val == a
            if val is not None:
                assert verify_directed(inst, f)


def test_paired_mode_needs_symmetry():
    import pytest
    with pytest.raises(ValueError):
        opt_directed(Instance(Digraph(2, [(0, 1)]), 1, 1), paired=True)


def test_dispatch():
    assert opt(Instance(path_graph(3), 1, 1))[0] == 1
    assert opt(Instance(Digraph(3, [(0, 1), (1, 2)]), 1, 1))[0] == 1
    assert opt(Instance(Graph(3, [(0, 1), (1, 2)], {(0, 1): 2}), 1, 2))[0] == 1
