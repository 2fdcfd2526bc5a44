"""Command-line front end.

Exit codes: 0 yes / success, 1 no (or infeasible solution), 2 usage error,
3 malformed input file, 4 graph class does not fit the requested algorithm,
5 the bicriteria guarantee failed, 6 any other domain error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from ..graph import Graph, diameter, twin_partition
from ..verifier import Instance, make_deletion, verify
from .fileio import (FormatError, format_deleted, parse, read_solution, serialize_text,
                     write_atomic)

EXIT_YES, EXIT_NO, EXIT_USAGE, EXIT_FORMAT, EXIT_CLASS, EXIT_GUARANTEE, EXIT_DOMAIN = range(7)

ALGOS = ("auto", "oracle", "branch", "interval", "unit", "nd", "approx")
GADGETS = ("clique-to-split", "mmo", "rbds-vc", "multicut-arc")
FAMILIES = ("random", "interval", "unit", "split", "nd", "chordal", "dag")


class ClassMismatch(Exception):
    pass


def _status_line(opt: Optional[int], f) -> str:
    if opt is None:
        return "STATUS=no OPT=none DELETED="
    return f"STATUS=yes OPT={opt} DELETED={format_deleted(f.edges)}"


def _require_undirected(inst: Instance, algo: str) -> None:
    if inst.directed:
        raise ClassMismatch(f"--algo {algo} needs an undirected instance")


def run_algo(inst: Instance, algo: str, epsilon: Fraction = Fraction(1), t: int = 4,
             census: Optional[list] = None) -> dict:
    """Solve with the named algorithm; returns opt (or None), deletion set and details."""
    from ..recognition import clique_path, interval_model, order_from_model, unit_order

    g = inst.graph
    detail: Dict[str, object] = {"algo": algo}
    if algo == "auto":
        algo = pick_algo(inst)
        detail["picked"] = algo
    if algo == "oracle":
        from ..oracle import opt
        val, f = opt(inst)
    elif algo == "branch":
        if inst.directed:
            from ..oracle import opt_directed_branching
            val, f = opt_directed_branching(inst)
        else:
            from ..branching import SearchStats, solve_branching
            st = SearchStats()
            val, f = solve_branching(inst, stats=st)
            detail.update(nodes=st.nodes, node_bound=st.bound)
    elif algo == "interval":
        _require_undirected(inst, algo)
        from ..interval_dp import solve_interval
        model = inst.model or interval_model(g)
        if model is None:
            raise ClassMismatch("graph is not an interval graph")
        cen: list = []
        val, f = solve_interval(inst, clique_path(g, model), census=cen)
        if census is not None:
            census.extend(cen)
        detail["states_max"] = max((c.states for c in cen), default=0)
    elif algo == "unit":
        _require_undirected(inst, algo)
        from ..unit_interval import solve_unit_interval
        from ..recognition import check_unit_order
        order = order_from_model(inst.model) if inst.model else unit_order(g)
        if order is None or not check_unit_order(g, order):
            raise ClassMismatch("graph is not a unit interval graph")
        if g.weights is not None:
            raise ClassMismatch("the unit interval solver is unweighted")
        cost, f = solve_unit_interval(inst, order)
        val = cost if cost <= inst.k else None
        f = f if val is not None else None
    elif algo == "nd":
        _require_undirected(inst, algo)
        if inst.s < 2 or g.weights is not None:
            raise ClassMismatch("the neighbourhood-diversity solver needs s >= 2 and unit weights")
        from ..nd import solve_nd
        val, f = solve_nd(inst)
    elif algo == "approx":
        _require_undirected(inst, algo)
        from ..bicriteria import solve_bicriteria
        try:
            res = solve_bicriteria(inst, epsilon, t)
        except ValueError as exc:
            raise ClassMismatch(str(exc)) from None
        detail.update(regime=res.regime, diameter_bound=res.certified_diameter_bound, **res.stats)
        if res.verdict == "no":
            val, f = None, None
        else:
            f = res.deletion
            val = len(f)
    else:
        raise ClassMismatch(f"unknown algorithm {algo}")
    return {"opt": val, "deletion": f, "detail": detail}


def pick_algo(inst: Instance) -> str:
    """unit -> interval -> nd -> branch, by what the recognizers accept."""
    from ..recognition import check_model, check_unit_order, interval_model, order_from_model, unit_order
    if inst.directed:
        return "branch"
    g = inst.graph
    weighted = g.weights is not None and any(w != 1 for w in g.weights.values())
    if not weighted:
        order = order_from_model(inst.model) if inst.model else unit_order(g)
        if order is not None and check_unit_order(g, order):
            return "unit"
    model = inst.model if inst.model and check_model(g, inst.model) else interval_model(g)
    if model is not None:
        return "interval"
    if weighted:
        return "oracle"
    if inst.s >= 2 and len(twin_partition(g).classes) <= 4:
        return "nd"
    return "branch"


# ---------------------------------------------------------------- subcommands

def cmd_solve(args) -> int:
    inst = parse(args.instance)
    census: list = []
    eps = Fraction(args.epsilon)
    res = run_algo(inst, args.algo, eps, args.t, census)
    opt, f = res["opt"], res["deletion"]
    if f is not None:
        v = verify(inst, f) if args.algo != "approx" else None
        if v is not None and not v.feasible:
            raise RuntimeError(f"solver returned an infeasible set: {v}")
    print(_status_line(opt, f))
    if args.detail:
        print(json.dumps(res["detail"], sort_keys=True, default=str))
    if args.dump_states:
        from ..interval_dp import dump_states
        write_atomic(args.dump_states, dump_states(census))
    return EXIT_YES if opt is not None else EXIT_NO


def cmd_verify(args) -> int:
    inst = parse(args.instance)
    edges = read_solution(args.solution)
    try:
        f = make_deletion(inst.graph, edges)
    except ValueError as exc:
        print(f"STATUS=no REASON={str(exc).replace(' ', '_')}")
        return EXIT_NO
    v = verify(inst, f)
    if v.feasible:
        print(f"STATUS=yes OPT={f.total_weight} DELETED={format_deleted(f.edges)}")
        return EXIT_YES
    if v.witness is not None:
        u, w, d = v.witness
        print(f"STATUS=no WITNESS={u + 1},{w + 1} DIST={d}")
    else:
        print(f"STATUS=no BUDGET_EXCESS={v.excess}")
    return EXIT_NO


def cmd_kernelize(args) -> int:
    from ..kernel import kernelize_split
    inst = parse(args.instance)
    if inst.directed:
        raise ClassMismatch("kernelize needs an undirected split graph")
    try:
        out = kernelize_split(inst, rr1=args.rr1)
    except ValueError as exc:
        raise ClassMismatch(str(exc)) from None
    comments = [f"kernel verdict={out.verdict} case={out.case or '-'}"] + [f"trace {t}" for t in out.trace]
    text = serialize_text(out.instance, comments)
    if args.out:
        write_atomic(args.out, text)
    else:
        sys.stdout.write(text)
    sizes = " ".join(f"{k}={v}" for k, v in out.sizes.items())
    print(f"KERNEL={out.verdict} N={out.instance.graph.n} K={out.instance.k} {sizes}".rstrip(),
          file=sys.stderr if not args.out else sys.stdout)
    return EXIT_YES


def cmd_recognize(args) -> int:
    from ..recognition import (check_split, chordless_cycle, interval_model, is_chordal,
                               recognize_split, unit_order)
    inst = parse(args.instance)
    if inst.directed:
        print("CLASS=digraph")
        return EXIT_YES
    g = inst.graph
    sp = recognize_split(g)
    model = interval_model(g)
    order = unit_order(g)
    chordal = is_chordal(g)
    print(f"split={'yes' if sp is not None else 'no'}")
    print(f"chordal={'yes' if chordal else 'no'}")
    print(f"interval={'yes' if model is not None else 'no'}")
    print(f"unit-interval={'yes' if order is not None else 'no'}")
    print(f"nd={len(twin_partition(g).classes)}")
    print(f"diameter={diameter(g)}")
    if sp is not None:
        print("clique=" + ",".join(str(v + 1) for v in sorted(sp.clique)))
    if order is not None:
        print("order=" + ",".join(str(v + 1) for v in order))
    if not chordal:
        cyc = chordless_cycle(g)
        if cyc:
            print("hole=" + ",".join(str(v + 1) for v in cyc))
    return EXIT_YES


def _graph_arg(path: Optional[str]) -> Optional[Graph]:
    if not path:
        return None
    return parse(path).graph


def generate_gadget(args, rng: random.Random):
    from .. import gadgets as gd
    from ..instances import random_dag, random_mmo, random_rbds, random_regular
    if args.gadget == "clique-to-split":
        g = _graph_arg(args.graph) or random_regular(args.n, args.r, rng)
        out = gd.gen_clique_to_split(g, args.k)
        return out.instance, out.parameter_report
    if args.gadget == "mmo":
        if args.graph:
            mmo = gd.MMOInstance(_graph_arg(args.graph), args.r)
        else:
            mmo = random_mmo(args.n, rng)
            if args.r is not None:
                mmo = gd.MMOInstance(mmo.graph, args.r)
        n, r = mmo.graph.n, mmo.r
        alpha = args.alpha if args.alpha is not None else gd.mmo_defaults(n, max(r, 1), mmo.graph.m)["alpha"]
        alpha = max(alpha, 2 * n + 4 if (2 * n + 4) % 2 == 0 else 2 * n + 3)
        alpha += alpha % 2
        tail = gd.mmo_tail(mmo, alpha) if args.variant == "padded" else 0
        s = args.s if args.s is not None else 2 * (alpha * r + 2 * n + tail + 3) + 1
        out = gd.gen_mmo_gadget(mmo, alpha, s, variant=args.variant)
        return out.instance, out.parameter_report
    if args.gadget == "rbds-vc":
        d = args.d if args.d is not None else max(1, args.nb // 2)
        rb = random_rbds(args.nr, args.nb, d, args.k, rng)
        out = gd.gen_rbds_to_vc_gadget(rb)
        return out.instance, out.parameter_report
    if args.gadget == "multicut-arc":
        dag = random_dag(args.n, args.p, rng)
        verts = list(range(dag.n))
        pairs = set()
        for _ in range(args.pairs):
            a, b = rng.sample(verts, 2)
            pairs.add((a, b))
        out = gd.gen_multicut_to_arc(dag, sorted(pairs), args.k, args.ell)
        return out.instance, out.parameter_report
    raise ClassMismatch(f"unknown gadget {args.gadget}")


def generate_family(family: str, n: int, s: int, k: int, rng: random.Random) -> Instance:
    from .. import instances as fam
    if family == "random":
        return Instance(fam.gnp(n, 0.4, rng), s, k)
    if family == "interval":
        g, model = fam.random_interval(n, rng)
        return Instance(g, s, k, model)
    if family == "unit":
        g, model = fam.random_unit_interval(n, rng)
        return Instance(g, s, k, model)
    if family == "split":
        nc = max(1, n // 3)
        return Instance(fam.random_split(nc, n - nc, rng), s, k)
    if family == "nd":
        return Instance(fam.random_nd(min(4, n), n, rng), s, k)
    if family == "chordal":
        return Instance(fam.random_chordal(n, rng), s, k)
    if family == "dag":
        return Instance(fam.random_dag(n, 0.3, rng), s, k)
    raise ClassMismatch(f"unknown family {family}")


def cmd_generate(args) -> int:
    rng = random.Random(args.seed)
    if args.gadget in GADGETS:
        inst, rep = generate_gadget(args, rng)
        comments = ["gadget: " + args.gadget] + ["gadget: " + line for line in rep.lines()]
    else:
        inst = generate_family(args.gadget, args.n, args.s if args.s is not None else 2, args.k, rng)
        comments = [f"family: {args.gadget} seed={args.seed}"]
    text = serialize_text(inst, comments)
    if args.out:
        write_atomic(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_YES


def parse_grid(spec: str) -> Dict[str, List[str]]:
    """`class=interval,unit;n=20,40;s=2;k=1,2;algo=auto;reps=2`"""
    grid = {"class": ["interval"], "n": ["20"], "s": ["2"], "k": ["2"], "algo": ["auto"], "reps": ["1"]}
    for part in filter(None, spec.split(";")):
        key, _, vals = part.partition("=")
        key = key.strip()
        if key not in grid:
            raise argparse.ArgumentTypeError(f"unknown grid key {key!r}")
        grid[key] = [v.strip() for v in vals.split(",") if v.strip()]
    return grid


def _bench_cell(cell) -> dict:
    family, n, s, k, algo, rep, seed = cell
    rng = random.Random(f"{seed}:{family}:{n}:{s}:{k}:{rep}")
    inst = generate_family(family, n, s, k, rng)
    t0 = time.perf_counter()
    try:
        res = run_algo(inst, algo)
        opt = res["opt"]
        states = res["detail"].get("states_max", "")
        opt_s = "no" if opt is None else str(opt)
    except ClassMismatch:
        opt_s, states = "class-mismatch", ""
    ms = (time.perf_counter() - t0) * 1000
    return {"instance-id": f"{family}-n{n}-s{s}-k{k}-r{rep}", "class": family, "n": inst.graph.n,
            "m": inst.graph.m, "s": s, "k": k, "algo": algo, "opt": opt_s,
            "states-max": states, "millis": f"{ms:.1f}"}


def cmd_bench(args) -> int:
    grid = parse_grid(args.grid)
    cells = []
    for family in grid["class"]:
        for n in map(int, grid["n"]):
            for s in map(int, grid["s"]):
                for k in map(int, grid["k"]):
                    for algo in grid["algo"]:
                        for rep in range(int(grid["reps"][0])):
                            cells.append((family, n, s, k, algo, rep, args.seed))
    if args.jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(args.jobs) as ex:
            rows = list(ex.map(_bench_cell, cells))
    else:
        rows = [_bench_cell(c) for c in cells]
    buf = io.StringIO()
    cols = ["instance-id", "class", "n", "m", "s", "k", "algo", "opt", "states-max", "millis"]
    w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    write_atomic(args.csv, buf.getvalue())
    print(f"BENCH rows={len(rows)} csv={args.csv}")
    return EXIT_YES


# ---------------------------------------------------------------- argument parsing

def _fraction(text: str) -> Fraction:
    try:
        f = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None
    if f <= 0:
        raise argparse.ArgumentTypeError("epsilon must be positive")
    return f


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sclub", description="s-club cluster edge deletion toolkit")
    p.add_argument("--seed", type=int, default=0, help="seed for all randomized generation")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="solve an instance file")
    sp.add_argument("instance")
    sp.add_argument("--algo", choices=ALGOS, default="auto")
    sp.add_argument("--epsilon", type=_fraction, default=Fraction(1), help="p/q, for --algo approx")
    sp.add_argument("--t", type=int, default=4, help="induced-cycle bound, for --algo approx")
    sp.add_argument("--dump-states", metavar="PATH", help="per-bag state census of the interval DP")
    sp.add_argument("--detail", action="store_true", help="print a JSON detail line")
    sp.set_defaults(func=cmd_solve)

    kp = sub.add_parser("kernelize", help="kernelize a split instance with s = 2")
    kp.add_argument("instance")
    kp.add_argument("--out")
    kp.add_argument("--rr1", choices=("safe", "literal"), default="safe")
    kp.set_defaults(func=cmd_kernelize)

    vp = sub.add_parser("verify", help="check a deletion set")
    vp.add_argument("instance")
    vp.add_argument("--solution", required=True)
    vp.set_defaults(func=cmd_verify)

    gp = sub.add_parser("generate", help="write a gadget or random instance")
    gp.add_argument("gadget", choices=GADGETS + FAMILIES)
    gp.add_argument("--out")
    gp.add_argument("--graph", help="source graph file (clique-to-split, mmo)")
    gp.add_argument("--n", type=int, default=4)
    gp.add_argument("--r", type=int)
    gp.add_argument("--k", type=int, default=1)
    gp.add_argument("--s", type=int)
    gp.add_argument("--alpha", type=int)
    gp.add_argument("--variant", choices=("padded", "literal"), default="padded")
    gp.add_argument("--nr", type=int, default=3)
    gp.add_argument("--nb", type=int, default=3)
    gp.add_argument("--d", type=int)
    gp.add_argument("--p", type=float, default=0.4)
    gp.add_argument("--pairs", type=int, default=1)
    gp.add_argument("--ell", type=int)
    gp.set_defaults(func=cmd_generate)

    rp = sub.add_parser("recognize", help="report graph classes")
    rp.add_argument("instance")
    rp.set_defaults(func=cmd_recognize)

    bp = sub.add_parser("bench", help="run a benchmark grid")
    bp.add_argument("--grid", required=True, help="e.g. 'class=interval,unit;n=20,40;s=2;k=1,2;reps=2'")
    bp.add_argument("--csv", required=True)
    bp.add_argument("--jobs", type=int, default=1)
    bp.set_defaults(func=cmd_bench)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "gadget", None) == "clique-to-split" and args.r is None and not args.graph:
        args.r = 3
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except ClassMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CLASS
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except Exception as exc:  # noqa: BLE001 - reported as a domain error with its type
        from ..bicriteria import GuaranteeError
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_GUARANTEE if isinstance(exc, GuaranteeError) else EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
