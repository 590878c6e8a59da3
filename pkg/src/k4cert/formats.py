"""Graph file formats (DIMACS .col subset, plain edge list) and certificate documents."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

from .coloring import Coloring
from .extractor import (
    BranchDecomposition,
    Certificate,
    Linkage,
    QCarving,
    Trace,
    TriPartition,
)
from .graph import CycleRecord, Graph, GraphError, PathRecord, norm_edge

DIMACS = "dimacs-col"
EDGE_LIST = "edge-list"
FORMATS = (DIMACS, EDGE_LIST)


class FormatError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


@dataclass
class GraphDocument:
    graph: Graph
    name: Optional[str] = None
    fmt: str = EDGE_LIST
    warnings: list = field(default_factory=list)


def _lines(data: Union[bytes, str]):
    if isinstance(data, bytes):
        data = data.decode("ascii", errors="replace")
    for number, raw in enumerate(data.splitlines(), 1):
        tokens = raw.split()
        if tokens:
            yield number, tokens


def _int(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"expected an integer, got {token!r}", line) from None


def _comment_name(tokens: list) -> Optional[str]:
    if len(tokens) >= 3 and tokens[1] == "name":
        return " ".join(tokens[2:])
    return None


def _collect(n: int, pairs: list, doc: GraphDocument) -> Graph:
    seen: dict = {}
    for line, a, b in pairs:
        if a == b:
            raise FormatError(f"loop at vertex {a}", line)
        if not (0 <= a < n and 0 <= b < n):
            raise FormatError(f"endpoint out of range in edge ({a}, {b})", line)
        e = norm_edge(a, b)
        if e in seen:
            doc.warnings.append(f"line {line}: duplicate edge {e} (first on line {seen[e]})")
        else:
            seen[e] = line
    return Graph(n, frozenset(seen))


def parse_dimacs(data: Union[bytes, str]) -> GraphDocument:
    doc = GraphDocument(Graph(0, frozenset()), fmt=DIMACS)
    n = declared_m = None
    pairs = []
    for line, tokens in _lines(data):
        kind = tokens[0]
        if kind == "c":
            doc.name = _comment_name(tokens) or doc.name
        elif kind == "p":
            if n is not None:
                raise FormatError("duplicate 'p' line", line)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise FormatError("malformed header, expected 'p edge <n> <m>'", line)
            n, declared_m = _int(tokens[2], line), _int(tokens[3], line)
            if n < 0 or declared_m < 0:
                raise FormatError("negative count in header", line)
        elif kind == "e":
            if n is None:
                raise FormatError("edge before 'p' header", line)
            if len(tokens) != 3:
                raise FormatError("malformed edge line, expected 'e <u> <v>'", line)
            pairs.append((line, _int(tokens[1], line) - 1, _int(tokens[2], line) - 1))
        else:
            raise FormatError(f"unknown line type {kind!r}", line)
    if n is None:
        raise FormatError("missing 'p edge' header")
    doc.graph = _collect(n, pairs, doc)
    if declared_m != len(pairs):
        doc.warnings.append(f"header declares {declared_m} edges, found {len(pairs)} edge lines")
    return doc


def parse_edge_list(data: Union[bytes, str]) -> GraphDocument:
    doc = GraphDocument(Graph(0, frozenset()), fmt=EDGE_LIST)
    n = None
    pairs = []
    for line, tokens in _lines(data):
        if tokens[0] == "c":
            doc.name = _comment_name(tokens) or doc.name
        elif n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise FormatError("malformed header, expected 'n <count>'", line)
            n = _int(tokens[1], line)
            if n < 0:
                raise FormatError("negative vertex count", line)
        elif tokens[0] == "n":
            raise FormatError("duplicate 'n' header", line)
        else:
            if len(tokens) != 2:
                raise FormatError("malformed edge line, expected '<u> <v>'", line)
            pairs.append((line, _int(tokens[0], line), _int(tokens[1], line)))
    if n is None:
        raise FormatError("missing 'n <count>' header")
    doc.graph = _collect(n, pairs, doc)
    return doc


def sniff_format(data: Union[bytes, str], path: Optional[str] = None) -> str:
    if path and Path(path).suffix.lower() == ".col":
        return DIMACS
    for _, tokens in _lines(data):
        if tokens[0] == "c":
            continue
        return DIMACS if tokens[0] in ("p", "e") else EDGE_LIST
    return EDGE_LIST


def parse_graph(data: Union[bytes, str], fmt: str) -> GraphDocument:
    if fmt == DIMACS:
        return parse_dimacs(data)
    if fmt == EDGE_LIST:
        return parse_edge_list(data)
    raise FormatError(f"unknown format {fmt!r}")


def emit_graph(g: Graph, fmt: str, name: Optional[str] = None) -> str:
    out = []
    if name:
        out.append(f"c name {name}")
    if fmt == DIMACS:
        out.append(f"p edge {g.n} {g.m}")
        out.extend(f"e {a + 1} {b + 1}" for a, b in g.sorted_edges())
    elif fmt == EDGE_LIST:
        out.append(f"n {g.n}")
        out.extend(f"{a} {b}" for a, b in g.sorted_edges())
    else:
        raise FormatError(f"unknown format {fmt!r}")
    return "\n".join(out) + "\n"


def load_graph(path: Union[str, Path], fmt: Optional[str] = None) -> GraphDocument:
    data = Path(path).read_bytes()
    return parse_graph(data, fmt or sniff_format(data, str(path)))


# -- certificate documents -------------------------------------------------

def _edge(e) -> list:
    return [int(e[0]), int(e[1])]


def trace_to_json(t: Trace) -> dict:
    return {
        "H_edges": [_edge(e) for e in t.h.sorted_edges()],
        "xy": _edge(t.xy),
        "pi": list(t.pi.class_of),
        "rho": list(t.rho.class_of),
        "A": sorted(t.a_set),
        "B": sorted(t.b_set),
        "u": t.linkage.u,
        "v": t.linkage.v,
        "P": list(t.linkage.p.vertices),
        "C2": list(t.c2.vertices),
        "C3": list(t.c3.vertices),
        "Q": list(t.carving.q.vertices),
        "w": t.carving.w,
        "z": t.carving.z,
        "e": _edge(t.e),
    }


def trace_from_json(n: int, d: dict) -> Trace:
    h = Graph(n, frozenset(norm_edge(a, b) for a, b in d["H_edges"]))
    return Trace(
        h=h,
        xy=norm_edge(*d["xy"]),
        pi=TriPartition(tuple(d["pi"])),
        rho=TriPartition(tuple(d["rho"])),
        a_set=frozenset(d["A"]),
        b_set=frozenset(d["B"]),
        linkage=Linkage(d["u"], d["v"], PathRecord(d["P"])),
        c2=CycleRecord(d["C2"]),
        c3=CycleRecord(d["C3"]),
        carving=QCarving(d["w"], d["z"], PathRecord(d["Q"])),
        e=norm_edge(*d["e"]),
    )


def certificate_to_json(cert: Certificate, g: Graph, name: Optional[str] = None,
                        trace: bool = False) -> dict:
    doc: dict = {"type": cert.kind, "graph": {"name": name, "n": g.n, "m": g.m}}
    if cert.coloring is not None:
        doc["coloring"] = list(cert.coloring.colors)
    else:
        bd = cert.minor
        doc["branch_sets"] = [sorted(s) for s in bd.sets]
        doc["witness_edges"] = {k: _edge(v) for k, v in sorted(bd.witness_edges.items())}
        if trace and cert.trace is not None:
            doc["trace"] = trace_to_json(cert.trace)
    return doc


def certificate_from_json(doc: dict) -> Certificate:
    kind = doc.get("type")
    if kind == "three_coloring":
        return Certificate(coloring=Coloring(tuple(doc["coloring"]), 3))
    if kind == "k4_minor":
        bd = BranchDecomposition(
            tuple(frozenset(s) for s in doc["branch_sets"]),
            {k: tuple(v) for k, v in doc["witness_edges"].items()},
        )
        tr = trace_from_json(doc["graph"]["n"], doc["trace"]) if "trace" in doc else None
        return Certificate(minor=bd, trace=tr)
    raise FormatError(f"unknown certificate type {kind!r}")


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def emit_dot(g: Graph, cert: Certificate, name: Optional[str] = None) -> str:
    """DOT rendering: branch sets as four coloured clusters, or nodes filled by colour."""
    palette = ["#e41a1c", "#377eb8", "#4daf4a", "#984ea3"]
    label = (name or "G").replace('"', "'")
    out = [f'graph "{label}" {{', "  node [style=filled, fillcolor=white];"]
    if cert.minor is not None:
        placed = set()
        for i, s in enumerate(cert.minor.sets):
            out.append(f"  subgraph cluster_h{i + 1} {{")
            out.append(f'    label="H{i + 1}"; color="{palette[i]}";')
            for v in sorted(s):
                out.append(f'    {v} [fillcolor="{palette[i]}"];')
            out.append("  }")
            placed |= s
        out.extend(f"  {v};" for v in g.vertices() if v not in placed)
        witness = {tuple(sorted(e)) for e in cert.minor.witness_edges.values()}
    else:
        out.extend(f'  {v} [fillcolor="{palette[cert.coloring[v] - 1]}"];' for v in g.vertices())
        witness = set()
    for a, b in g.sorted_edges():
        style = " [penwidth=2.5]" if (a, b) in witness else ""
        out.append(f"  {a} -- {b}{style};")
    out.append("}")
    return "\n".join(out) + "\n"


__all__ = [
    "DIMACS",
    "EDGE_LIST",
    "FormatError",
    "GraphDocument",
    "GraphError",
    "certificate_from_json",
    "certificate_to_json",
    "dumps",
    "emit_dot",
    "emit_graph",
    "load_graph",
    "parse_graph",
    "sniff_format",
]
