"""Independent checks: minor verification, series-parallel reduction, brute force.

Nothing here imports the extractor's construction; these routines only look
at the graph and the claimed branch sets.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .graph import Graph

BRUTE_FORCE_LIMIT = 10


@dataclass
class VerificationReport:
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, check: str, detail) -> None:
        self.failures.append((check, detail))


def _connected(g: Graph, vs: frozenset) -> bool:
    if not vs:
        return False
    start = min(vs)
    seen = {start}
    queue = deque([start])
    while queue:
        a = queue.popleft()
        for b in g.adj[a]:
            if b in vs and b not in seen:
                seen.add(b)
                queue.append(b)
    return len(seen) == len(vs)


def verify_k4_minor(g: Graph, bd) -> VerificationReport:
    """Check four branch sets against ``g``: disjoint, nonempty, connected, pairwise adjacent.

    Recorded witness edges, when present, must be edges of ``g`` joining the
    right pair of sets.
    """
    report = VerificationReport()
    sets = [frozenset(s) for s in bd.sets]
    if len(sets) != 4:
        report.fail("count", len(sets))
        return report
    for i, s in enumerate(sets, 1):
        if not s:
            report.fail("nonempty", f"h{i}")
        elif not all(isinstance(v, int) and 0 <= v < g.n for v in s):
            report.fail("range", sorted(s))
        elif not _connected(g, s):
            report.fail("connected", (f"h{i}", sorted(s)))
    for (i, s), (j, t) in combinations(enumerate(sets, 1), 2):
        shared = s & t
        if shared:
            report.fail("disjoint", (f"h{i}", f"h{j}", sorted(shared)))
        if not any(g.has_edge(a, b) for a in s for b in t if a != b and 0 <= a < g.n and 0 <= b < g.n):
            report.fail("adjacent", (f"h{i}", f"h{j}"))
    for key, (a, b) in (getattr(bd, "witness_edges", None) or {}).items():
        i, j = (int(part[1:]) for part in key.split("-"))
        if not (a in sets[i - 1] and b in sets[j - 1] and 0 <= a < g.n and 0 <= b < g.n
                and a != b and g.has_edge(a, b)):
            report.fail("witness_edge", (key, (a, b)))
    return report


def is_k4_minor_free(g: Graph) -> bool:
    """Series-parallel reduction: strip degree <= 1, suppress degree 2; free iff it empties."""
    adj = {v: set(g.adj[v]) for v in g.vertices()}
    while adj:
        v = next((v for v in sorted(adj) if len(adj[v]) <= 2), None)
        if v is None:
            return False
        nbrs = adj.pop(v)
        for a in nbrs:
            adj[a].discard(v)
        if len(nbrs) == 2:
            a, b = nbrs
            adj[a].add(b)
            adj[b].add(a)
    return True


@dataclass(frozen=True)
class FoundMinor:
    sets: tuple
    witness_edges: dict


def brute_force_k4_minor(g: Graph) -> Optional[FoundMinor]:
    """Exhaustive search over labellings vertex -> {unused, 1, 2, 3, 4}.

    Labels are opened in order (set i's smallest vertex precedes set i+1's)
    and a branch is cut as soon as some set can no longer become connected or
    some pair of sets can no longer be joined using the unassigned vertices.
    """
    n = g.n
    if n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force limited to {BRUTE_FORCE_LIMIT} vertices, got {n}")
    if n < 4:
        return None
    nbr = g.masks()
    everything = (1 << n) - 1

    def reach(start: int, within: int) -> int:
        seen = start
        frontier = start
        while frontier:
            grow = 0
            m = frontier
            while m:
                low = m & -m
                grow |= nbr[low.bit_length() - 1]
                m ^= low
            frontier = grow & within & ~seen
            seen |= frontier
        return seen

    def touches(a: int, b: int) -> bool:
        m = a
        while m:
            low = m & -m
            if nbr[low.bit_length() - 1] & b:
                return True
            m ^= low
        return False

    def feasible(sets: list, free: int) -> bool:
        for s in sets:
            if s and reach(s & -s, s | free) & s != s:
                return False
        for i in range(len(sets)):
            for j in range(i + 1, len(sets)):
                if sets[i] and sets[j] and not touches(sets[i] | free, sets[j] | free):
                    return False
        return True

    def complete(sets: list) -> bool:
        return (all(s and reach(s & -s, s) == s for s in sets)
                and all(touches(sets[i], sets[j]) for i in range(4) for j in range(i + 1, 4)))

    sets = [0, 0, 0, 0]

    def search(v: int, opened: int) -> bool:
        if v == n:
            return opened == 4 and complete(sets)
        free = everything & ~((1 << (v + 1)) - 1)
        if 4 - opened > n - v:
            return False
        for label in range(min(opened + 1, 4) + 1):
            if label == 0:
                if feasible(sets, free) and search(v + 1, opened):
                    return True
                continue
            sets[label - 1] |= 1 << v
            if feasible(sets, free) and search(v + 1, max(opened, label)):
                return True
            sets[label - 1] &= ~(1 << v)
        return False

    if not search(0, 0):
        return None
    found = tuple(frozenset(u for u in range(n) if s >> u & 1) for s in sets)
    witness = {}
    for i, j in combinations(range(4), 2):
        witness[f"h{i + 1}-h{j + 1}"] = next(
            (a, b) for a in sorted(found[i]) for b in sorted(found[j]) if g.has_edge(a, b))
    return FoundMinor(found, witness)


def has_k4_minor_brute(g: Graph) -> bool:
    return brute_force_k4_minor(g) is not None

