"""Plain-text instance format.

    c <comment>
    p sced|scad <n> <m> <s> <k>
    e <u> <v> [w]        edge or arc, 1-indexed
    i <v> <l> <r>        interval of vertex v
    t <u> <v>            terminal pair

Comments starting with `c meta ` carry the metadata dict as JSON so a
round trip keeps it; `c gadget: ` lines hold a human-readable parameter
report and are ignored on input.
"""
from __future__ import annotations

import json
import os
import tempfile
from typing import Dict, Iterable, List, Optional, Tuple

from ..graph import Digraph, Graph, norm
from ..verifier import Instance


class FormatError(ValueError):
    def __init__(self, line: int, reason: str, source: str = "<input>"):
        super().__init__(f"{source}:{line}: {reason}")
        self.line = line
        self.reason = reason


def _ints(parts: List[str], count: int, lineno: int, source: str) -> List[int]:
    if len(parts) != count:
        raise FormatError(lineno, f"expected {count} fields, got {len(parts)}", source)
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise FormatError(lineno, f"non-integer field in {' '.join(parts)!r}", source) from None


def parse_text(text: str, source: str = "<input>") -> Instance:
    header = None
    edges: List[Tuple[int, int]] = []
    weights: Dict[Tuple[int, int], int] = {}
    seen = set()
    model: Dict[int, Tuple[int, int]] = {}
    terminals: List[Tuple[int, int]] = []
    meta: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        tag, *rest = line.split()
        if tag == "c":
            if line.startswith("c meta "):
                try:
                    meta.update(json.loads(line[len("c meta "):]))
                except json.JSONDecodeError as exc:
                    raise FormatError(lineno, f"bad metadata JSON: {exc.msg}", source) from None
            continue
        if tag == "p":
            if header is not None:
                raise FormatError(lineno, "second problem line", source)
            if len(rest) != 5 or rest[0] not in ("sced", "scad"):
                raise FormatError(lineno, "problem line must be 'p sced|scad n m s k'", source)
            n, m, s, k = _ints(rest[1:], 4, lineno, source)
            if n < 0 or m < 0 or s < 0 or k < 0:
                raise FormatError(lineno, "negative value in problem line", source)
            header = (rest[0], n, m, s, k)
            continue
        if header is None:
            raise FormatError(lineno, f"'{tag}' line before the problem line", source)
        n = header[1]
        directed = header[0] == "scad"

        def vertex(x: int) -> int:
            if not 1 <= x <= n:
                raise FormatError(lineno, f"vertex {x} out of range 1..{n}", source)
            return x - 1

        if tag == "e":
            if len(rest) not in (2, 3):
                raise FormatError(lineno, "edge line must be 'e u v [w]'", source)
            vals = _ints(rest, len(rest), lineno, source)
            u, v = vertex(vals[0]), vertex(vals[1])
            if u == v:
                raise FormatError(lineno, f"self-loop at {vals[0]}", source)
            key = (u, v) if directed else norm(u, v)
            if key in seen:
                raise FormatError(lineno, f"duplicate edge {vals[0]} {vals[1]}", source)
            seen.add(key)
            edges.append(key)
            if len(vals) == 3:
                if directed:
                    raise FormatError(lineno, "arc weights are not supported", source)
                if vals[2] < 1:
                    raise FormatError(lineno, f"weight {vals[2]} < 1", source)
                weights[key] = vals[2]
        elif tag == "i":
            v, l, r = _ints(rest, 3, lineno, source)
            v = vertex(v)
            if l > r:
                raise FormatError(lineno, f"empty interval [{l}, {r}]", source)
            if v in model:
                raise FormatError(lineno, f"second interval for vertex {v + 1}", source)
            model[v] = (l, r)
        elif tag == "t":
            u, v = _ints(rest, 2, lineno, source)
            u, v = vertex(u), vertex(v)
            if u == v:
                raise FormatError(lineno, "terminal pair with equal ends", source)
            terminals.append((u, v))
        else:
            raise FormatError(lineno, f"unknown line type '{tag}'", source)
    if header is None:
        raise FormatError(0, "missing problem line", source)
    kind, n, m, s, k = header
    if len(edges) != m:
        raise FormatError(0, f"header says {m} edges, file has {len(edges)}", source)
    if model and len(model) != n:
        raise FormatError(0, f"intervals given for {len(model)} of {n} vertices", source)
    if kind == "scad":
        g = Digraph(n, edges)
    else:
        g = Graph(n, edges, weights or None)
    return Instance(g, s, k, model or None, tuple(terminals), meta)


def parse(path: str) -> Instance:
    with open(path, encoding="utf-8") as fh:
        return parse_text(fh.read(), source=path)


def serialize_text(inst: Instance, comments: Iterable[str] = ()) -> str:
    g = inst.graph
    kind = "scad" if inst.directed else "sced"
    out = [f"c {line}" if not line.startswith("c ") else line for line in comments]
    if inst.metadata:
        out.append("c meta " + json.dumps(inst.metadata, sort_keys=True, default=_jsonable))
    out.append(f"p {kind} {g.n} {g.m} {inst.s} {inst.k}")
    weights = None if inst.directed else g.weights
    for u, v in g.sorted_edges():
        if weights is not None and weights[(u, v)] != 1:
            out.append(f"e {u + 1} {v + 1} {weights[(u, v)]}")
        else:
            out.append(f"e {u + 1} {v + 1}")
    if inst.model:
        for v in sorted(inst.model):
            l, r = inst.model[v]
            out.append(f"i {v + 1} {l} {r}")
    for u, v in inst.terminals:
        out.append(f"t {u + 1} {v + 1}")
    return "\n".join(out) + "\n"


def _jsonable(x):
    if isinstance(x, (set, frozenset)):
        return sorted(x)
    return str(x)


def write_atomic(path: str, text: str) -> None:
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def serialize(inst: Instance, path: str, comments: Iterable[str] = ()) -> None:
    write_atomic(path, serialize_text(inst, comments))


def same_instance(a: Instance, b: Instance) -> bool:
    """Structural equality used by the round-trip property."""
    ma = json.loads(json.dumps(a.metadata, sort_keys=True, default=_jsonable)) if a.metadata else {}
    mb = json.loads(json.dumps(b.metadata, sort_keys=True, default=_jsonable)) if b.metadata else {}
    return (type(a.graph) is type(b.graph) and a.graph == b.graph and a.s == b.s and a.k == b.k
            and (a.model or None) == (b.model or None)
            and tuple(a.terminals) == tuple(b.terminals) and ma == mb)


def format_deleted(edges) -> str:
    return ",".join(f"{u + 1}-{v + 1}" for u, v in sorted(edges))


def parse_deleted(text: str) -> List[Tuple[int, int]]:
    out = []
    for tok in filter(None, text.strip().split(",")):
        a, _, b = tok.partition("-")
        out.append((int(a) - 1, int(b) - 1))
    return out


def read_solution(path: str) -> List[Tuple[int, int]]:
    """Edges from a `STATUS=... DELETED=...` line or from `d u v` lines (1-indexed)."""
    edges: List[Tuple[int, int]] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("c "):
                continue
            if line.startswith("STATUS="):
                for field in line.split():
                    if field.startswith("DELETED="):
                        try:
                            edges += parse_deleted(field[len("DELETED="):])
                        except ValueError:
                            raise FormatError(lineno, f"bad DELETED field {field!r}", path) from None
            elif line.startswith("d "):
                u, v = _ints(line.split()[1:], 2, lineno, path)
                edges.append((u - 1, v - 1))
            elif line.startswith(("{", "}", " ", '"')):
                continue  # detail block
            else:
                raise FormatError(lineno, f"unrecognized solution line {line[:30]!r}", path)
    return edges
