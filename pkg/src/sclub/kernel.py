"""Polynomial kernel for the s = 2 problem on split graphs.

The reduction works on a mutable copy of the split graph and logs every rule
application as `rule-id; vertices; budget-delta`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from .graph import Graph, diameter, norm, path_graph
from .recognition import recognize_split
from .verifier import Instance


@dataclass
class ConflictGraph:
    vertices: List[int]
    edges: Set[Tuple[int, int]]
    weight: Dict[int, int]

    def nbrs(self, v: int) -> List[int]:
        return [b if a == v else a for a, b in self.edges if v in (a, b)]


@dataclass
class KernelOutput:
    instance: Instance
    trace: List[str]
    verdict: str  # "reduced" | "trivially-yes" | "trivially-no"
    case: str = ""  # "A", "B", "fast", ""
    sizes: Dict[str, int] = field(default_factory=dict)
    snapshots: List[Tuple[str, Instance]] = field(default_factory=list)


class _Work:
    def __init__(self, g: Graph, clique: FrozenSet[int], k: int, snapshots: bool):
        self.adj: Dict[int, Set[int]] = {v: set(g.adj[v]) for v in range(g.n)}
        self.C: Set[int] = set(clique)
        self.I: Set[int] = set(range(g.n)) - self.C
        self.k = k
        self.trace: List[str] = []
        self.keep_snapshots = snapshots
        self.snapshots: List[Tuple[str, Instance]] = []

    def gamma(self, i: int) -> Set[int]:
        return self.adj[i] & self.C

    def log(self, rule: str, verts, delta: int = 0):
        self.trace.append(f"{rule}; {','.join(str(v) for v in sorted(verts))}; {delta}")
        if self.keep_snapshots and self.k >= 0:
            self.snapshots.append((rule, self.instance()))

    def isolate(self, j: int) -> int:
        cost = len(self.adj[j])
        for c in list(self.adj[j]):
            self.adj[c].discard(j)
        self.adj[j] = set()
        self.k -= cost
        return cost

    def remove(self, v: int):
        for w in self.adj.pop(v):
            self.adj[w].discard(v)
        self.C.discard(v)
        self.I.discard(v)

    def instance(self, extra_meta=None) -> Instance:
        alive = sorted(self.adj)
        idx = {v: i for i, v in enumerate(alive)}
        es = [(idx[u], idx[v]) for u in alive for v in self.adj[u] if u < v]
        meta = {"origin": alive}
        if extra_meta:
            meta.update(extra_meta)
        return Instance(Graph(len(alive), es), 2, max(self.k, 0), metadata=meta)


def _trivial(verdict: str, trace, case="fast") -> KernelOutput:
    if verdict == "trivially-yes":
        inst = Instance(Graph(1), 2, 0, metadata={"trivial": "yes"})
    else:
        inst = Instance(path_graph(4), 2, 0, metadata={"trivial": "no"})
    return KernelOutput(inst, trace, verdict, case)


def kernelize_split(inst: Instance, snapshots: bool = False, rr1: str = "safe") -> KernelOutput:
    """Equivalent split instance of size O(k^3), or a trivial yes/no instance.

    rr1="literal" applies the literal Case-B deletion rule, which is unsound
    (see tests); the default replaces it with a false-twin cap.
    """
    g: Graph = inst.graph
    sp = recognize_split(g)
    if sp is None:
        raise ValueError("not a split graph")
    k, s = inst.k, inst.s
    if s != 2:
        if s >= 3:
            # components of a split graph never have diameter above 3
            return _trivial("trivially-yes", [f"fast-s{s}; ; 0"])
        from .branching import solve_branching
        opt, _ = solve_branching(Instance(g, s, k))
        return _trivial("trivially-yes" if opt is not None else "trivially-no", [f"fast-s{s}; ; 0"])

    w = _Work(g, sp.clique, k, snapshots)
    for i in sorted(w.I):
        if not w.gamma(i):
            w.remove(i)
            w.log("cleanup", [i])
    if w.k == 0:
        ok = diameter(w.instance().graph) <= 2
        return _trivial("trivially-yes" if ok else "trivially-no", w.trace + ["k0; ; 0"])
    if len(w.C) >= k + 2:
        return _case_a(w)
    return _case_b(w, rr1)


def _case_a(w: _Work) -> KernelOutput:
    mandatory: Set[int] = set()
    while True:
        big = [i for i in sorted(w.I) if i not in mandatory and len(w.gamma(i)) > w.k]
        if not big:
            break
        i = big[0]
        gi = w.gamma(i)
        for j in sorted(w.I):
            if j != i and not (gi & w.gamma(j)):
                cost = w.isolate(j)
                w.remove(j)
                w.log("rr:cap", [i, j], -cost)
                if w.k < 0:
                    return _trivial("trivially-no", w.trace, "A")
        mandatory.add(i)
        w.trace.append(f"rr:cap-mandatory; {i}; 0")

    i0 = sorted(w.I - mandatory)
    cg = build_conflict_graph(w, i0)
    alive = set(i0)

    def nh(v):
        return [x for x in alive if x != v and (min(v, x), max(v, x)) in cg.edges]

    changed = True
    while changed:
        changed = False
        for i in sorted(alive):
            if i not in alive:
                continue
            nb = nh(i)
            if not nb:
                alive.discard(i)
                w.remove(i)
                w.log("rr:wvc-iso", [i])
                changed = True
                continue
            if cg.weight[i] > w.k:
                if any(cg.weight[j] > w.k for j in nb):
                    w.trace.append(f"rr:wvc-heavy-reject; {i}; 0")
                    return _trivial("trivially-no", w.trace, "A")
                paid = 0
                for j in nb:
                    paid += w.isolate(j)
                    w.remove(j)
                    alive.discard(j)
                alive.discard(i)
                w.remove(i)
                w.log("rr:wvc-heavy", [i] + nb, -paid)
                if w.k < 0:
                    return _trivial("trivially-no", w.trace, "A")
                changed = True
                continue
            if len(nb) > w.k:
                paid = w.isolate(i)
                w.remove(i)
                alive.discard(i)
                w.log("rr:wvc-deg", [i], -paid)
                if w.k < 0:
                    return _trivial("trivially-no", w.trace, "A")
                changed = True
    i_prime = sorted(alive)
    kk = w.k
    if len(i_prime) > kk + kk * kk:
        w.trace.append(f"wvc-size-reject; {len(i_prime)}; 0")
        return _trivial("trivially-no", w.trace, "A")
    if not i_prime:
        w.trace.append("wvc-empty; ; 0")
        return _trivial("trivially-yes", w.trace, "A")
    # compression: keep the clique vertices seen by I', then pad the clique to k+2
    used = sorted(set().union(*(w.gamma(i) for i in i_prime)))
    verts = i_prime + used
    idx = {v: x for x, v in enumerate(verts)}
    pad = max(0, kk + 2 - len(used))
    n = len(verts) + pad
    cstar = list(range(len(i_prime), n))
    es = [(idx[i], idx[c]) for i in i_prime for c in w.gamma(i)]
    es += [(a, b) for a, b in combinations(cstar, 2)]
    dummies = list(range(len(verts), n))
    w.trace.append(f"compress; {','.join(map(str, i_prime))}; 0")
    out = Instance(Graph(n, es), 2, kk, metadata={
        "dummy": dummies, "independent": list(range(len(i_prime))), "clique": cstar,
        "origin": verts + [None] * pad})
    return KernelOutput(out, w.trace, "reduced", "A",
                        {"I_prime": len(i_prime), "C_star": len(cstar), "k": kk, "V": n},
                        w.snapshots)


def build_conflict_graph(w: _Work, i0: List[int]) -> ConflictGraph:
    edges = set()
    for a, b in combinations(i0, 2):
        if not (w.gamma(a) & w.gamma(b)):
            edges.add((a, b))
    return ConflictGraph(list(i0), edges, {i: len(w.gamma(i)) for i in i0})


def conflict_graph(g: Graph, clique, independent) -> ConflictGraph:
    """Conflict graph of a split graph, for use outside the kernel."""
    C = set(clique)
    gam = {i: set(g.adj[i]) & C for i in independent}
    ind = sorted(independent)
    edges = {(a, b) for a, b in combinations(ind, 2) if not (gam[a] & gam[b])}
    return ConflictGraph(ind, edges, {i: len(gam[i]) for i in ind})


def _case_b(w: _Work, rr1: str) -> KernelOutput:
    k = w.k
    bound = (k + 1) * 2 * k * k + (k + 1)
    if rr1 == "literal":
        while True:
            cstar, U, ell, P, D = _case_b_sets(w)
            if ell < k * k + k:
                break
            hit = None
            for u in sorted(U):
                gu = w.gamma(u)
                if gu <= D and all(gu & w.gamma(i) for i in P):
                    hit = u
                    break
            if hit is None:
                break
            w.remove(hit)
            w.log("red:rr1", [hit], 0)
    else:
        # false twins on the independent side: any k+1 of them are as good as more
        classes: Dict[FrozenSet[int], List[int]] = {}
        for i in sorted(w.I):
            classes.setdefault(frozenset(w.gamma(i)), []).append(i)
        for key in sorted(classes, key=sorted):
            extra = classes[key][k + 1:]
            for i in extra:
                w.remove(i)
            if extra:
                w.log("twin-cap", extra, 0)
    cstar, U, ell, P, D = _case_b_sets(w)
    sizes = {"C": len(w.C), "I": len(w.I), "ell": ell, "k": k}
    if ell >= k * k + k:
        U1 = [u for u in U if not w.gamma(u) <= D and all(w.gamma(u) & w.gamma(i) for i in P)]
        U2 = [u for u in U if any(not (w.gamma(u) & w.gamma(i)) for i in P)]
        assert len(U1) <= k * k, f"|U1| = {len(U1)} > k^2 = {k * k}"
        sizes.update(U1=len(U1), U2=len(U2))
        if len(U2) >= k * k + 1:
            w.trace.append(f"red:rr2; {','.join(map(str, sorted(U2)))}; 0")
            return _trivial("trivially-no", w.trace, "B")
    out = w.instance()
    if rr1 != "literal" and out.graph.n > bound:
        # the safe rules stalled above the bound: decide exactly
        from .branching import solve_branching
        opt, _ = solve_branching(out)
        w.trace.append(f"exact-fallback; {out.graph.n}; 0")
        return _trivial("trivially-yes" if opt is not None else "trivially-no", w.trace, "B")
    sizes["V"] = out.graph.n
    return KernelOutput(out, w.trace, "reduced", "B", sizes, w.snapshots)


def _case_b_sets(w: _Work):
    k = w.k
    if not w.C:
        return None, set(), 0, set(), set()
    cstar = min(w.C, key=lambda c: (-len(w.adj[c] & w.I), c))
    U = w.adj[cstar] & w.I
    ell = len(U)
    P = set()
    for i in w.I - U:
        gi = w.gamma(i)
        if sum(1 for u in U if gi & w.gamma(u)) >= ell - k:
            P.add(i)
    D = {c for c in w.C if len(w.adj[c] & U) >= k}
    return cstar, U, ell, P, D


def wvc_equivalence_check(cg: ConflictGraph, k: int) -> Tuple[bool, Optional[List[int]]]:
    """Brute-force minimum-weight vertex cover; (weight <= k, cover)."""
    vs = list(cg.vertices)
    best = None
    for r in range(len(vs) + 1):
        for sub in combinations(vs, r):
            chosen = set(sub)
            if all(a in chosen or b in chosen for a, b in cg.edges):
                wt = sum(cg.weight[v] for v in sub)
                if best is None or wt < best[0]:
                    best = (wt, sorted(sub))
    if best is None or best[0] > k:
        return False, best[1] if best else None
    return True, best[1]
