from fractions import Fraction

import pytest

import sclub.bicriteria as bc
from sclub.bicriteria import (
    GuaranteeError, MulticutInstance, regime_for, separates, solve_bicriteria, solve_multicut_exact,
)
from sclub.graph import Graph, complete_graph, cycle_graph, path_graph
from sclub.instances import random_chordal
from sclub.oracle import opt_undirected
from sclub.verifier import Instance, make_deletion, verify_undirected


def test_long_path_goes_to_multicut():
    inst = Instance(path_graph(12), 10, 1)
    res = solve_bicriteria(inst, Fraction(1, 2), 4)
    assert res.regime == "multicut" and res.verdict == "solution"
    assert res.stats["terminal_pairs"] == 1
    assert len(res.solution) == 1
    assert verify_undirected(inst, res.solution, bound=11)
    assert res.certified_diameter_bound == 11


def test_p4_multicut_regime():
    res = solve_bicriteria(Instance(path_graph(4), 2, 1), Fraction(1), 4)
    assert res.regime == "multicut" and len(res.solution) == 1
    assert verify_undirected(Instance(path_graph(4), 2, 1), res.solution, bound=3)


def test_small_diameter_needs_nothing():
    for eps, s in ((Fraction(1, 10), 1), (Fraction(10), 3)):
        res = solve_bicriteria(Instance(complete_graph(4), s, 2), eps, 4)
        assert res.verdict == "solution" and len(res.solution) == 0


def test_regime_boundary_is_exact():
    # s == k(t-3)/eps lands on the exact side
    assert regime_for(4, 2, Fraction(1, 2), 4) == "exact"
    assert regime_for(5, 2, Fraction(1, 2), 4) == "multicut"
    assert regime_for(6, 1, Fraction(1, 2), 6) == "exact"
    assert regime_for(7, 1, Fraction(1, 2), 6) == "multicut"


def test_refuses_long_induced_cycle():
    with pytest.raises(ValueError):
        solve_bicriteria(Instance(cycle_graph(5), 2, 1), Fraction(1), 4)


def test_bad_parameters():
    with pytest.raises(ValueError):
        solve_bicriteria(Instance(path_graph(3), 1, 1), Fraction(0), 4)
    with pytest.raises(ValueError):
        solve_bicriteria(Instance(path_graph(3), 1, 1), Fraction(1), 3)


def test_multicut_examples():
    f = solve_multicut_exact(MulticutInstance(path_graph(3), [(0, 2)], 1))
    assert f.edges in ({(0, 1)}, {(1, 2)})
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])  # z=0, x=1, y=2, w=3
    assert solve_multicut_exact(MulticutInstance(star, [(1, 2), (2, 3)], 1)).edges == {(0, 2)}
    assert solve_multicut_exact(MulticutInstance(complete_graph(3), [(0, 1)], 1)) is None


def test_multicut_is_minimum(rng):
    from itertools import combinations
    for _ in range(60):
        g = random_chordal(rng.randint(2, 8), rng)
        pairs = [(a, b) for a, b in combinations(range(g.n), 2) if rng.random() < 0.2]
        k = rng.randint(0, 3)
        f = solve_multicut_exact(MulticutInstance(g, pairs, k))
        brute = None
        for size in range(k + 1):
            if any(separates(g, c, pairs) for c in combinations(g.sorted_edges(), size)):
                brute = size
                break
        assert (f is None) == (brute is None)
        if f is not None:
            assert len(f) == brute and separates(g, f, pairs)


def test_terminal_pair_validation():
    with pytest.raises(ValueError):
        MulticutInstance(path_graph(2), [(1, 1)], 1)


def test_guarantee_error_surfaces(monkeypatch):
    monkeypatch.setattr(bc, "solve_multicut_exact", lambda mc: make_deletion(mc.graph, []))
    with pytest.raises(GuaranteeError):
        solve_bicriteria(Instance(path_graph(14), 10, 1), Fraction(1, 2), 4)


def test_no_verdicts_are_sound(rng):
    for _ in range(80):
        g = random_chordal(rng.randint(3, 10), rng, max_clique=2)
        k = rng.randint(0, 2)
        s = rng.randint(k + 1, k + 3)
        inst = Instance(g, s, k)
        res = solve_bicriteria(inst, Fraction(1), 4)
        if res.verdict == "no":
            assert opt_undirected(inst)[0] is None
        else:
            assert verify_undirected(inst, res.solution, bound=res.certified_diameter_bound)
