"""Instance generators for the hardness constructions.

Each generator returns the target instance together with its parameter
report (every inequality the correctness argument needs, evaluated), a
map from landmark names to vertex ids, and certificate translators. The
large default parameters can be overridden; the checks are what makes an
override legitimate.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .graph import Digraph, Graph, components, delete_edges, norm
from .recognition import recognize_split
from .verifier import Instance


class GadgetError(ValueError):
    """Input outside the construction's domain, or a failed parameter inequality."""


@dataclass
class ParameterReport:
    values: Dict[str, int] = field(default_factory=dict)
    checks: List[Tuple[str, bool]] = field(default_factory=list)

    def require(self, name: str, ok: bool) -> None:
        self.checks.append((name, bool(ok)))
        if not ok:
            raise GadgetError(f"parameter inequality fails: {name} ({self.values})")

    @property
    def all_hold(self) -> bool:
        return all(ok for _, ok in self.checks)

    def lines(self) -> List[str]:
        out = [" ".join(f"{k}={v}" for k, v in self.values.items())]
        out += [f"check {name}: {'ok' if ok else 'FAIL'}" for name, ok in self.checks]
        return out


@dataclass
class GadgetOutput:
    instance: object  # Instance, or an RBDSInstance for the regularization step
    parameter_report: ParameterReport
    landmark_map: Dict[str, int]
    translator_id: str
    forward: Callable = None  # source certificate -> target certificate
    backward: Callable = None  # target certificate -> source certificate


@dataclass(frozen=True)
class MMOInstance:
    graph: Graph  # weights live on the graph; absent weight = 1
    r: int

    def __post_init__(self):
        if self.r < 0:
            raise GadgetError("degree bound r must be non-negative")


@dataclass(frozen=True)
class RBDSInstance:
    """Bipartite red/blue graph; red vertices 0..n_red-1, blue 0..n_blue-1 (separate ranges)."""
    n_red: int
    n_blue: int
    edges: frozenset  # (red, blue)
    k: int

    def blue_of(self, r: int) -> frozenset:
        return frozenset(b for x, b in self.edges if x == r)

    def degrees(self) -> List[int]:
        return [len(self.blue_of(r)) for r in range(self.n_red)]

    def dominates(self, reds: Iterable[int]) -> bool:
        reds = set(reds)
        hit = {b for r, b in self.edges if r in reds}
        return len(hit) == self.n_blue


class _Builder:
    def __init__(self):
        self.n = 0
        self.edges: List[Tuple[int, int]] = []
        self.names: Dict[str, int] = {}

    def vertex(self, name: Optional[str] = None) -> int:
        v = self.n
        self.n += 1
        if name is not None:
            if name in self.names:
                raise AssertionError(f"duplicate landmark {name}")
            self.names[name] = v
        return v

    def edge(self, u: int, v: int) -> None:
        self.edges.append((u, v))

    def reinforced(self, a: int, b: int, length: int, copies: int) -> List[int]:
        """Path a..b of the given length; v_i and v_{i+2} get `copies` extra 2-paths
        for every even i. An odd final edge gets `copies` 2-paths around it as well."""
        if length < 1:
            raise GadgetError(f"reinforced path of length {length}")
        path = [a] + [self.vertex() for _ in range(length - 1)] + [b]
        for x, y in zip(path, path[1:]):
            self.edge(x, y)
        for i in range(0, length - 1, 2):
            for _ in range(copies):
                m = self.vertex()
                self.edge(path[i], m)
                self.edge(m, path[i + 2])
        if length % 2 == 1:
            for _ in range(copies):
                m = self.vertex()
                self.edge(path[-2], m)
                self.edge(m, path[-1])
        return path

    def graph(self) -> Graph:
        return Graph(self.n, self.edges)


# ---------------------------------------------------------------- clique -> split

def gen_clique_to_split(g: Graph, k: int) -> GadgetOutput:
    """Regular graph and clique size k -> split instance with s = 2."""
    degs = {len(a) for a in g.adj}
    if len(degs) > 1:
        raise GadgetError("input graph is not regular")
    if not 0 <= k <= g.n:
        raise GadgetError("need 0 <= k <= n")
    r = degs.pop() if degs else 0
    if r == 0:
        # isolating a vertex is free, so the budget no longer counts outsiders
        raise GadgetError("the construction needs r >= 1")
    kp = r * (g.n - k)
    b = _Builder()
    orig = [b.vertex(f"v{v}") for v in range(g.n)]
    sub = {}
    for u, v in g.sorted_edges():
        e = b.vertex(f"e{u},{v}")
        sub[(u, v)] = e
        b.edge(orig[u], e)
        b.edge(orig[v], e)
    aux = [b.vertex(f"C'{j}") for j in range(kp + 1)]
    clique = list(sub.values()) + aux
    for x, y in combinations(clique, 2):
        b.edge(x, y)
    h = b.graph()
    rep = ParameterReport({"n": g.n, "r": r, "k": k, "k'": kp, "s": 2, "|C'|": len(aux)})
    rep.require("k' = r(n-k)", kp == r * (g.n - k))
    rep.require("|C'| = k'+1", len(aux) == kp + 1)
    rep.require("output is split", recognize_split(h) is not None)
    inst = Instance(h, 2, kp, metadata={"gadget": "clique-to-split"})

    def forward(clq: Iterable[int]):
        keep = set(clq)
        return sorted(norm(orig[v], e) for (x, y), e in sub.items() for v in (x, y) if v not in keep)

    def backward(f) -> List[int]:
        comp = components(delete_edges(h, f)).component_id
        anchor = comp[aux[0]]
        return [v for v in range(g.n) if comp[orig[v]] == anchor]

    return GadgetOutput(inst, rep, b.names, "clique-to-split", forward, backward)


# ---------------------------------------------------------------- MMO -> pathwidth

def mmo_defaults(n: int, r: int, m: int) -> Dict[str, int]:
    return {"alpha": 2 * (n * r) ** 2, "s": 100 * (n * r) ** 4, "k'": 2 * m}


def min_vertex_cover(g: Graph) -> List[int]:
    for size in range(g.n + 1):
        for c in combinations(range(g.n), size):
            cs = set(c)
            if all(u in cs or v in cs for u, v in g.edges):
                return list(c)
    return list(range(g.n))


def mmo_tail(mmo: MMOInstance, alpha: int) -> int:
    """Length of the padding path appended to every spine in the padded variant."""
    wmax = max((mmo.graph.weight(u, v) for u, v in mmo.graph.edges), default=0)
    return (alpha * wmax + 1) // 2 + 1


def gen_mmo_gadget(mmo: MMOInstance, alpha: int, s: int, kprime: Optional[int] = None,
                   cover: Optional[Sequence[int]] = None, variant: str = "padded") -> GadgetOutput:
    """MMO instance -> deletion instance whose vertex-cover-based pathwidth is O(vc^2).

    variant="literal" builds the spine exactly as described, where the middle of a
    long segment whose y-shortcut survives hangs alpha*wt/2 past the spine and can
    break the diameter bound. The default "padded" variant appends a reinforced
    tail of that depth to every spine and shortens the auxiliary path to match.
    """
    if variant not in ("literal", "padded"):
        raise GadgetError(f"unknown variant {variant!r}")
    g = mmo.graph
    n, r, m = g.n, mmo.r, g.m
    kp = 2 * m if kprime is None else kprime
    tail = mmo_tail(mmo, alpha) if variant == "padded" else 0
    aux_len = s - (alpha * r + 2 * n + 2 + tail)
    rep = ParameterReport({"n": n, "m": m, "r": r, "alpha": alpha, "s": s, "k'": kp,
                           "aux": aux_len, "tail": tail})
    rep.require("alpha even", alpha % 2 == 0)
    rep.require("alpha >= 2n+3", alpha >= 2 * n + 3)
    rep.require("s > 2(alpha*r + 2n + 2 + tail)", s > 2 * (alpha * r + 2 * n + 2 + tail))
    if variant == "padded":
        rep.require("s >= 2(alpha*r + 2n + tail + 3)", s >= 2 * (alpha * r + 2 * n + tail + 3))
    rep.require("k' = 2|E|", kp == 2 * m)
    vc = sorted(cover) if cover is not None else min_vertex_cover(g)
    if any(u not in vc and v not in vc for u, v in g.edges):
        raise GadgetError("given cover is not a vertex cover")
    ind = [v for v in range(n) if v not in set(vc)]
    order = vc + ind
    b = _Builder()
    spine: Dict[int, List[int]] = {}
    attach: Dict[Tuple[int, int], Tuple[int, int, int]] = {}  # (u, w) -> (y, xL, xR)
    for u in range(n):
        targets = order if u in vc else vc
        xs = [b.vertex(f"x{u}_{i}") for i in range(len(targets) + 1)]
        spine[u] = xs
        for i, w in enumerate(targets):
            y = b.vertex(f"y{u}_{w}")
            b.edge(y, xs[i])
            b.edge(y, xs[i + 1])
            attach[(u, w)] = (y, xs[i], xs[i + 1])
            if g.has_edge(u, w):
                b.reinforced(xs[i], xs[i + 1], alpha * g.weight(u, w), kp + 1)
            else:
                b.reinforced(xs[i], xs[i + 1], 2, kp + 1)
        star = b.vertex(f"x*{u}")
        b.reinforced(star, xs[0], aux_len, kp + 1)
        if tail:
            b.reinforced(xs[-1], b.vertex(f"x{u}_end"), tail, kp + 1)
    for u, v in g.sorted_edges():
        b.reinforced(attach[(u, v)][0], attach[(v, u)][0], 2, kp + 1)
    h = b.graph()
    inst = Instance(h, s, kp, metadata={"gadget": "mmo", "cover": vc, "variant": variant})

    def forward(orientation: Iterable[Tuple[int, int]]):
        f = []
        for u, v in orientation:
            y, xl, xr = attach[(u, v)]
            f += [norm(y, xl), norm(y, xr)]
        return sorted(f)

    def backward(f) -> Optional[List[Tuple[int, int]]]:
        fs = {norm(*e) for e in f}
        lam = []
        for u, v in g.sorted_edges():
            for a, c in ((u, v), (v, u)):
                y, xl, xr = attach[(a, c)]
                if norm(y, xl) in fs and norm(y, xr) in fs:
                    lam.append((a, c))
                    break
            else:
                return None
        return lam

    return GadgetOutput(inst, rep, b.names, "mmo-orientation", forward, backward)


def mmo_feasible(mmo: MMOInstance) -> Optional[List[Tuple[int, int]]]:
    """Brute force over all 2^m orientations; one with max weighted outdegree <= r, or None."""
    g = mmo.graph
    es = g.sorted_edges()
    for mask in range(1 << len(es)):
        out = [0] * g.n
        lam = []
        for i, (u, v) in enumerate(es):
            a, c = (u, v) if mask >> i & 1 == 0 else (v, u)
            out[a] += g.weight(u, v)
            lam.append((a, c))
        if max(out, default=0) <= mmo.r:
            return lam
    return None


# ---------------------------------------------------------------- RBDS regularization

def _check_bipartite_input(rb: RBDSInstance) -> None:
    for r, bl in rb.edges:
        if not (0 <= r < rb.n_red and 0 <= bl < rb.n_blue):
            raise GadgetError(f"edge {(r, bl)} is not red-blue")


def gen_rbds_regular(rb: RBDSInstance) -> GadgetOutput:
    _check_bipartite_input(rb)
    nb = rb.n_blue
    if nb < 2:
        raise GadgetError("the regularization needs |B| >= 2")
    # blue layout: B1 = 0..nb-1, B2 = nb..2nb-1, x1 = 2nb, x2 = 2nb+1; reds: R, then y1, y2
    x1, x2 = 2 * nb, 2 * nb + 1
    y1, y2 = rb.n_red, rb.n_red + 1
    es = set()
    for v in range(rb.n_red):
        nbh = rb.blue_of(v)
        for u in range(nb):
            es.add((v, u if u in nbh else nb + u))
    es.add((y1, x1))
    es.add((y2, x2))
    for u in range(nb - 1):
        es.add((y1, nb + u))
    for u in range(1, nb):
        es.add((y2, nb + u))
    out = RBDSInstance(rb.n_red + 2, 2 * nb + 2, frozenset(es), rb.k + 2)
    degs = out.degrees()
    rep = ParameterReport({"|B|": nb, "|B'|": out.n_blue, "k": rb.k, "k'": out.k})
    rep.require("k' = k+2", out.k == rb.k + 2)
    rep.require("|B'| = 2|B|+2", out.n_blue == 2 * nb + 2)
    rep.require("all red degrees = |B|", all(d == nb for d in degs))
    marks = {"x1": x1, "x2": x2, "y1": y1, "y2": y2}

    def forward(dom: Iterable[int]) -> List[int]:
        return sorted(set(dom) | {y1, y2})

    def backward(dom: Iterable[int]) -> List[int]:
        return sorted(set(dom) - {y1, y2})

    return GadgetOutput(out, rep, marks, "rbds-regular", forward, backward)


def rbds_solve(rb: RBDSInstance) -> Optional[List[int]]:
    for size in range(min(rb.k, rb.n_red) + 1):
        for d in combinations(range(rb.n_red), size):
            if rb.dominates(d):
                return list(d)
    return None


# ---------------------------------------------------------------- RBDS -> vertex cover parameter

def gen_rbds_to_vc_gadget(rb: RBDSInstance) -> GadgetOutput:
    _check_bipartite_input(rb)
    degs = set(rb.degrees())
    if len(degs) > 1:
        raise GadgetError("red degrees are not uniform")
    d = degs.pop() if degs else 0
    nr, nb, k = rb.n_red, rb.n_blue, rb.k
    if k > nr:
        raise GadgetError("k exceeds the number of red vertices")
    tsize = nb + 2
    kp = k * tsize + (nr - k) * (d + 1)
    b = _Builder()
    R = [b.vertex(f"r{i}") for i in range(nr)]
    B = [b.vertex(f"b{i}") for i in range(nb)]
    T = [b.vertex(f"t{i}") for i in range(tsize)]
    w, y, z = b.vertex("w"), b.vertex("y"), b.vertex("z")
    P = [b.vertex(f"p{i}") for i in range(kp + 1)]
    Q = [b.vertex(f"q{i}") for i in range(kp + 1)]
    S = [b.vertex(f"s{i}") for i in range(kp + 1)]
    for r_, bl in rb.edges:
        b.edge(R[r_], B[bl])
    for a in (w, y):
        for x in P + Q:
            b.edge(a, x)
    for x in B:
        b.edge(y, x)
    for x in R + Q:
        b.edge(z, x)
    for x in B:
        for p in P:
            b.edge(x, p)
    for x in R:
        for t in T:
            b.edge(x, t)
    for t in T:
        for s_ in S:
            b.edge(t, s_)
    for x, x2 in combinations(B, 2):
        b.edge(x, x2)
    b.edge(w, z)
    h = b.graph()
    cover = set(B) | set(T) | {w, y, z}
    rep = ParameterReport({"n_R": nr, "|B|": nb, "d": d, "k": k, "|T|": tsize, "k'": kp, "s": 2,
                           "vc_bound": 2 * nb + 5, "|X'|": len(cover)})
    rep.require("k' = k|T| + (n_R-k)(d+1)", kp == k * tsize + (nr - k) * (d + 1))
    rep.require("|T| = |B|+2", len(T) == nb + 2)
    rep.require("X' is a vertex cover", all(u in cover or v in cover for u, v in h.edges))
    rep.require("|X'| <= 2|B|+5", len(cover) <= 2 * nb + 5)
    inst = Instance(h, 2, kp, metadata={"gadget": "rbds-vc", "cover": sorted(cover)})

    def forward(dom: Iterable[int]):
        X = {R[i] for i in dom}
        c1 = set(B) | set(P) | set(Q) | X | {w, y, z}
        return sorted(e for e in h.sorted_edges() if (e[0] in c1) != (e[1] in c1))

    def backward(f) -> List[int]:
        comp = components(delete_edges(h, f)).component_id
        return [i for i in range(nr) if comp[R[i]] == comp[y]]

    return GadgetOutput(inst, rep, b.names, "rbds-vc", forward, backward)


# ---------------------------------------------------------------- directed multicut -> arc deletion

def topological_order(dag: Digraph) -> Optional[List[int]]:
    import heapq
    indeg = [len(x) for x in dag.inn]
    heap = [v for v in range(dag.n) if indeg[v] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        v = heapq.heappop(heap)
        out.append(v)
        for w in dag.out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    return out if len(out) == dag.n else None


def gen_multicut_to_arc(dag: Digraph, terminals: Iterable[Tuple[int, int]], k: int,
                        ell: Optional[int] = None) -> GadgetOutput:
    topo = topological_order(dag)
    if topo is None:
        raise GadgetError("input digraph has a cycle")
    pairs = sorted({(int(a), int(c)) for a, c in terminals})
    for a, c in pairs:
        if a == c or not (0 <= a < dag.n and 0 <= c < dag.n):
            raise GadgetError(f"bad terminal pair {(a, c)}")
    m = dag.m
    ell = max(2 * m, 1) if ell is None else ell
    s = 4 * ell
    pos = {v: i for i, v in enumerate(topo)}
    terms = sorted({v for p in pairs for v in p}, key=lambda v: pos[v])
    b = _Builder()
    for v in range(dag.n):
        b.vertex(f"v{v}")
    arcs = list(dag.arcs)
    L: Dict[int, List[int]] = {}
    Rr: Dict[int, List[int]] = {}
    for i, t in enumerate(terms):
        tin = b.vertex(f"t{t}_in")
        chain_in = [tin] + [b.vertex() for _ in range(ell - 1)] + [t]
        tout = b.vertex(f"t{t}_out")
        chain_out = [t] + [b.vertex() for _ in range(ell - 1)] + [tout]
        for ch in (chain_in, chain_out):
            for a, c in zip(ch, ch[1:]):
                for _ in range(k + 1):
                    mid = b.vertex()
                    arcs += [(a, mid), (mid, c)]
        L[t] = chain_in[:-1]
        Rr[t] = chain_out[1:]
    req = set(pairs)
    for i, ti in enumerate(terms):
        for tj in terms[i + 1:]:
            if (ti, tj) in req:
                continue
            arcs += [(a, c) for a in L[ti] for c in Rr[tj]]
    d2 = Digraph(b.n, arcs)
    rep = ParameterReport({"m": m, "ell": ell, "s": s, "k'": k, "terminals": len(terms)})
    rep.require("s = 4*ell", s == 4 * ell)
    rep.require("m + 2*ell <= s", m + 2 * ell <= s)
    rep.require("output acyclic", topological_order(d2) is not None)
    inst = Instance(d2, s, k, terminals=tuple(pairs), metadata={"gadget": "multicut-arc"})
    original = dag.arcs

    def forward(f):
        return sorted(tuple(a) for a in f)

    def backward(f):
        return sorted(tuple(a) for a in f if tuple(a) in original)

    return GadgetOutput(inst, rep, b.names, "multicut-arc", forward, backward)


def directed_multicut_solve(dag: Digraph, pairs, k: int) -> Optional[List[Tuple[int, int]]]:
    """Smallest arc set (size <= k) leaving no t_i -> t_j path for any requested pair."""
    arcs = dag.sorted_edges()
    for size in range(min(k, len(arcs)) + 1):
        for f in combinations(arcs, size):
            if is_directed_multicut(dag, pairs, f):
                return list(f)
    return None


def is_directed_multicut(dag: Digraph, pairs, f) -> bool:
    gone = set(map(tuple, f))
    out = [[w for w in dag.out[v] if (v, w) not in gone] for v in range(dag.n)]
    for a, c in pairs:
        seen = {a}
        stack = [a]
        while stack:
            u = stack.pop()
            for w in out[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if c in seen:
            return False
    return True
