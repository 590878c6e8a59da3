"""Turn an edge-critical pair (H, xy, pi) into the four branch sets of a K4 minor.

Pipeline: pi -> rho -> odd-cycle vertex sets A, B -> closest linkage u..v ->
cycles C2 (through u) and C3 (through v), both using xy -> arc Q of C3 ->
separating edge e of C2 -> branch sets.  Every step the construction proves
cannot fail is checked with :func:`require`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .coloring import Coloring, canonical_relabel, find_proper_coloring, verify_coloring
from .critical import CriticalPair, ProofViolation, extract_critical_pair, require
from .graph import (
    Bipartition,
    CycleRecord,
    Edge,
    Graph,
    PathRecord,
    bfs_distances,
    bipartite_or_odd_cycle,
    components,
    norm_edge,
    shortest_path_between_sets,
    two_fan,
    xy_path_vertices,
)

PAIR_KEYS = ("h1-h2", "h1-h3", "h1-h4", "h2-h3", "h2-h4", "h3-h4")


@dataclass(frozen=True)
class TriPartition:
    class_of: tuple

    @property
    def classes(self) -> tuple:
        return tuple(frozenset(v for v, c in enumerate(self.class_of) if c == i)
                     for i in (1, 2, 3))

    def cls(self, i: int) -> frozenset:
        return self.classes[i - 1]

    def without(self, i: int) -> frozenset:
        """Vertices outside class ``i``."""
        return frozenset(v for v, c in enumerate(self.class_of) if c != i)

    def as_coloring(self) -> Coloring:
        return Coloring(self.class_of, 3)


@dataclass(frozen=True)
class Linkage:
    u: int
    v: int
    p: PathRecord


@dataclass(frozen=True)
class QCarving:
    w: int
    z: int
    q: PathRecord


@dataclass(frozen=True)
class BranchDecomposition:
    sets: tuple
    witness_edges: dict

    def __post_init__(self):
        object.__setattr__(self, "sets", tuple(frozenset(s) for s in self.sets))

    h1 = property(lambda self: self.sets[0])
    h2 = property(lambda self: self.sets[1])
    h3 = property(lambda self: self.sets[2])
    h4 = property(lambda self: self.sets[3])


@dataclass(frozen=True)
class Trace:
    """Every named object of the construction, kept for audits and reports."""

    h: Graph
    xy: Edge
    pi: TriPartition
    rho: TriPartition
    a_set: frozenset
    b_set: frozenset
    linkage: Linkage
    c2: CycleRecord
    c3: CycleRecord
    carving: QCarving
    e: Edge


@dataclass(frozen=True)
class Certificate:
    coloring: Optional[Coloring] = None
    minor: Optional[BranchDecomposition] = None
    trace: Optional[Trace] = None

    def __post_init__(self):
        if (self.coloring is None) == (self.minor is None):
            raise ValueError("a certificate holds exactly one of coloring / minor")

    @property
    def kind(self) -> str:
        return "three_coloring" if self.coloring is not None else "k4_minor"


def partition_pi(h: Graph, xy: Edge, witness: Coloring) -> TriPartition:
    x, y = xy
    require(witness[x] == witness[y], "pi(x) != pi(y): H would be 3-colourable")
    relabeled = canonical_relabel(witness.colors, 3, first=x)
    pi = TriPartition(relabeled.colors)
    require(verify_coloring(h, relabeled, [xy]), "pi has a monochromatic edge other than xy")
    require(all(pi.classes), "pi leaves a colour class empty: H would be 3-colourable")
    return pi


def _odd_cycle_vertices(h: Graph, xy: Edge, allowed: frozenset) -> frozenset:
    # with xy removed the subgraph is bipartite with x, y on one side, so odd
    # cycles are exactly xy plus a simple x-y path
    x, y = xy
    return xy_path_vertices(h.without_edges([xy]), x, y, allowed)


def build_rho(h: Graph, xy: Edge, pi: TriPartition) -> TriPartition:
    require(any(e[0] in pi.without(1) and e[1] in pi.without(1) for e in h.edges),
            "H - pi1 has no edge: H would be 3-colourable")
    for dropped in (3, 2):
        found = bipartite_or_odd_cycle(h, pi.without(dropped))
        require(isinstance(found, CycleRecord),
                f"H - pi{dropped} is bipartite: H would be 3-colourable")
    on_odd = _odd_cycle_vertices(h, xy, pi.without(3))
    swap = {2: 3, 3: 2}
    class_of = list(pi.class_of)
    for comp in components(h, pi.cls(1)):
        if comp.isdisjoint(on_odd):
            for v in comp:
                class_of[v] = swap[class_of[v]]
    rho = TriPartition(tuple(class_of))
    require(verify_coloring(h, rho.as_coloring(), [xy]), "rho has a monochromatic edge other than xy")
    require(components(h, pi.cls(1)) == components(h, rho.cls(1)),
            "components of H - pi1 and H - rho1 differ")
    return rho


def odd_cycle_vertex_sets(h: Graph, xy: Edge, rho: TriPartition) -> tuple[frozenset, frozenset]:
    """Class-2 vertices on odd cycles of H - rho3 and class-3 vertices on odd cycles of H - rho2."""
    for dropped in (3, 2):
        rest = bipartite_or_odd_cycle(h.without_edges([xy]), rho.without(dropped))
        require(isinstance(rest, Bipartition),
                f"H - rho{dropped} - xy has an odd cycle avoiding xy")
    a_set = _odd_cycle_vertices(h, xy, rho.without(3)) & rho.cls(2)
    b_set = _odd_cycle_vertices(h, xy, rho.without(2)) & rho.cls(3)
    require(bool(a_set), "H - rho3 has no odd cycle")
    require(bool(b_set), "H - rho2 has no odd cycle")
    return a_set, b_set


def select_linkage(h: Graph, rho: TriPartition, a_set: frozenset, b_set: frozenset) -> Linkage:
    """Closest pair (u in A, v in B) inside H - rho1, with a shortest path between them."""
    p = shortest_path_between_sets(h, a_set, b_set, rho.without(1))
    require(p is not None, "no component of H - rho1 meets both A and B")
    u, v = p[0], p[-1]
    require(u != v, "linkage endpoints coincide")
    return Linkage(u, v, p)


def _cycle_through(h: Graph, xy: Edge, allowed: frozenset, a: int) -> CycleRecord:
    x, y = xy
    fan = two_fan(h.without_edges([xy]), a, x, y, allowed)
    require(fan is not None, f"vertex {a} lies on no odd cycle through xy")
    to_x, to_y = fan
    # listed x .. a .. y; the closing edge y-x is xy
    cycle = CycleRecord(tuple(reversed(to_x.vertices)) + to_y.vertices[1:])
    require(len(cycle) % 2 == 1, "cycle through xy has even length")
    return cycle


def realize_cycles(h: Graph, xy: Edge, rho: TriPartition, u: int, v: int
                   ) -> tuple[CycleRecord, CycleRecord]:
    c2 = _cycle_through(h, xy, rho.without(3), u)
    c3 = _cycle_through(h, xy, rho.without(2), v)
    require(u not in c3, "u lies on C3")
    require(v not in c2, "v lies on C2")
    return c2, c3


def carve_q(c3: CycleRecord, c2: CycleRecord, v: int) -> QCarving:
    """Shortest arc of C3 through v whose two ends lie on C2."""
    ring = c3.vertices
    k = len(ring)
    on_c2 = set(c2.vertices)
    require(v not in on_c2, "v lies on C2")
    back = [v]
    while back[-1] not in on_c2:
        back.append(ring[(ring.index(back[-1]) - 1) % k])
    fwd = [v]
    while fwd[-1] not in on_c2:
        fwd.append(ring[(ring.index(fwd[-1]) + 1) % k])
    q = PathRecord(tuple(reversed(back)) + tuple(fwd[1:]))
    w, z = q[0], q[-1]
    require(w != z, "both ends of Q coincide")
    require(v in q.internal, "v is not internal to Q")
    return QCarving(w, z, q)


def choose_separating_edge(c2: CycleRecord, xy: Edge, u: int, w: int, z: int) -> Edge:
    """Edge e of C2, not at u, such that C2 - {e, u} puts w and z in different arcs.

    C2 is stored as x .. u .. y. If w and z fall on opposite sides of u, e is
    xy; otherwise e is the first edge after the earlier of w, z, reading from
    x on the x-side and from y on the y-side.
    """
    ring = c2.vertices
    x, y = ring[0], ring[-1]
    require(norm_edge(x, y) == norm_edge(*xy), "C2 is not anchored on xy")
    pos_u, pos_w, pos_z = ring.index(u), ring.index(w), ring.index(z)
    require(pos_u not in (pos_w, pos_z),
            f"u={u} coincides with an end of Q (w={w}, z={z}); instance must be preserved")
    require(0 < pos_u < len(ring) - 1, "u is an endpoint of xy")
    lo, hi = sorted((pos_w, pos_z))
    if (lo < pos_u) != (hi < pos_u):
        e = norm_edge(x, y)
    elif hi < pos_u:
        e = norm_edge(ring[lo], ring[lo + 1])
    else:
        e = norm_edge(ring[hi - 1], ring[hi])
    require(u not in e, "separating edge touches u")
    return e


def _arcs_without(c2: CycleRecord, e: Edge, u: int) -> tuple[list[int], list[int]]:
    ring = c2.vertices
    k = len(ring)
    at = ring.index(u)
    walk = [ring[(at + i) % k] for i in range(1, k)]
    for i in range(len(walk) - 1):
        if norm_edge(walk[i], walk[i + 1]) == e:
            return walk[: i + 1], walk[i + 1:]
    raise ProofViolation("separating edge not found on C2 - u")


def assemble_branch_sets(c2: CycleRecord, e: Edge, u: int, p: PathRecord, v: int,
                         q: PathRecord, w: int, z: int) -> BranchDecomposition:
    first, second = _arcs_without(c2, e, u)
    require(bool(first) and bool(second), "C2 - {e, u} has an empty arc")
    if w in second:
        first, second = second, first
    require(w in first and z in second, "w and z are not separated by {e, u}")
    h1 = frozenset(q.internal)
    h2 = frozenset(p.vertices[:-1])
    h3, h4 = frozenset(first), frozenset(second)
    ring = c2.vertices
    at = ring.index(u)
    u_nbrs = (ring[at - 1], ring[(at + 1) % len(ring)])
    to3 = next(a for a in u_nbrs if a in h3)
    to4 = next(a for a in u_nbrs if a in h4)
    e3, e4 = (e[0], e[1]) if e[0] in h3 else (e[1], e[0])
    witness = {
        "h1-h2": (v, p[-2]),
        "h1-h3": (q[1], w),
        "h1-h4": (q[-2], z),
        "h2-h3": (u, to3),
        "h2-h4": (u, to4),
        "h3-h4": (e3, e4),
    }
    return BranchDecomposition((h1, h2, h3, h4), witness)


def construct(pair: CriticalPair) -> tuple[BranchDecomposition, Trace]:
    h, xy = pair.h, pair.xy
    pi = partition_pi(h, xy, pair.pi_witness)
    rho = build_rho(h, xy, pi)
    a_set, b_set = odd_cycle_vertex_sets(h, xy, rho)
    link = select_linkage(h, rho, a_set, b_set)
    c2, c3 = realize_cycles(h, xy, rho, link.u, link.v)
    on_cycles = set(c2.vertices) | set(c3.vertices)
    require(on_cycles.isdisjoint(link.p.internal), "P has an internal vertex on C2 or C3")
    carving = carve_q(c3, c2, link.v)
    e = choose_separating_edge(c2, xy, link.u, carving.w, carving.z)
    bd = assemble_branch_sets(c2, e, link.u, link.p, link.v, carving.q, carving.w, carving.z)
    trace = Trace(h, xy, pi, rho, a_set, b_set, link, c2, c3, carving, e)
    return bd, trace


def extract_k4_minor(g: Graph) -> Certificate:
    """3-colouring of ``g`` if one exists, otherwise a K4 minor built from a critical pair."""
    coloring = find_proper_coloring(g, 3)
    if coloring is not None:
        return Certificate(coloring=coloring)
    bd, trace = construct(extract_critical_pair(g))
    from .oracle import verify_k4_minor

    report = verify_k4_minor(g, bd)
    require(report.ok, f"branch sets fail verification in G: {report.failures}")
    return Certificate(minor=bd, trace=trace)


def audit_trace(trace: Trace, bd: Optional[BranchDecomposition] = None) -> list[str]:
    """Re-check every intermediate claim of the construction; returns violations."""
    from .oracle import verify_k4_minor

    bad: list[str] = []

    def check(cond: bool, what: str):
        if not cond:
            bad.append(what)

    h, xy = trace.h, trace.xy
    x, y = xy
    for name, part in (("pi", trace.pi), ("rho", trace.rho)):
        col = part.as_coloring()
        check(verify_coloring(h, col, [xy]), f"{name}: monochromatic edge besides xy")
        check(not verify_coloring(h, col), f"{name}: xy not monochromatic")
        check(part.class_of[x] == part.class_of[y] == 1, f"{name}: x, y not in class 1")
    check(components(h, trace.pi.cls(1)) == components(h, trace.rho.cls(1)),
          "components of H - pi1 and H - rho1 differ")
    minus_xy = h.without_edges([xy])
    for dropped in (2, 3):
        check(isinstance(bipartite_or_odd_cycle(minus_xy, trace.rho.without(dropped)), Bipartition),
              f"odd cycle in H - rho{dropped} avoids xy")
    u, v, p = trace.linkage.u, trace.linkage.v, trace.linkage.p
    c2, c3 = trace.c2, trace.c3
    check(c2.is_valid_in(h) and c3.is_valid_in(h), "C2 or C3 is not an odd cycle of H")
    check(norm_edge(*xy) in c2.edges() and norm_edge(*xy) in c3.edges(), "xy missing from C2 or C3")
    check(set(c2) <= trace.rho.without(3), "C2 leaves H - rho3")
    check(set(c3) <= trace.rho.without(2), "C3 leaves H - rho2")
    check(u in c2 and v in c3, "u not on C2 or v not on C3")
    check(u not in c3 and v not in c2, "u on C3 or v on C2")
    check(u in trace.a_set and v in trace.b_set, "u not in A or v not in B")
    check(p.is_valid_in(h) and p[0] == u and p[-1] == v, "P is not a u-v path")
    check(set(p) <= trace.rho.without(1), "P enters rho1")
    check(set(p.internal).isdisjoint(set(c2) | set(c3)), "P internal vertex on C2 or C3")
    allowed = trace.rho.without(1)
    dist_from = {a: bfs_distances(h, [a], allowed) for a in trace.a_set}
    best = min((d[b] for d in dist_from.values() for b in trace.b_set if b in d), default=None)
    check(best == len(p) - 1, "linkage is not a closest A-B pair")
    w, z, q = trace.carving.w, trace.carving.z, trace.carving.q
    check(q.is_valid_in(h) and q[0] == w and q[-1] == z, "Q is not a w-z path")
    check(w != z and w in c2 and z in c2, "Q ends not distinct vertices of C2")
    check(v in q.internal, "v not internal to Q")
    check(set(q.internal).isdisjoint(c2), "Q internal vertex on C2")
    check(set(q.edges()) <= set(c3.edges()), "Q is not an arc of C3")
    e = trace.e
    check(e in c2.edges() and u not in e, "e is not a C2 edge avoiding u")
    rest = CycleRecord(c2.vertices)
    arcs = _arcs_without(rest, e, u) if e in c2.edges() and u not in e else ([], [])
    check(any(w in a for a in arcs) and not any(w in a and z in a for a in arcs),
          "w and z not separated by {e, u}")
    if bd is not None:
        report = verify_k4_minor(h, bd)
        check(report.ok, f"branch sets invalid in H: {report.failures}")
        check(set(bd.witness_edges) == set(PAIR_KEYS), "witness edges incomplete")
    return bad
