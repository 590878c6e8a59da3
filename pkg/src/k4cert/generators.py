"""Named graphs and seeded random graphs used as the test corpus."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph, from_edge_list


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return from_edge_list(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def wheel(n: int) -> Graph:
    """Hub 0 joined to a rim cycle on 1..n-1 (so ``wheel(6)`` is W5)."""
    if n < 4:
        raise ValueError("wheel needs n >= 4")
    rim = n - 1
    edges = [(0, i) for i in range(1, n)]
    edges += [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
    return from_edge_list(n, edges)


def mycielski(base: Graph) -> Graph:
    """Mycielskian: shadow vertex n+i copies i's neighbourhood, apex 2n sees every shadow."""
    n = base.n
    edges = list(base.edges)
    for a, b in base.edges:
        edges += [(a, n + b), (b, n + a)]
    edges += [(n + i, 2 * n) for i in range(n)]
    return from_edge_list(2 * n + 1, edges)


def gnp(n: int, p: float, seed: int) -> Graph:
    if n < 1:
        raise ValueError("gnp needs n >= 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = random.Random(seed)
    return from_edge_list(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def moser_spindle() -> Graph:
    return from_edge_list(7, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3),
                              (0, 4), (0, 5), (4, 5), (4, 6), (5, 6), (3, 6)])


def grotzsch() -> Graph:
    return mycielski(cycle(5))


NAMED = {
    "k4": lambda: complete(4),
    "w5": lambda: wheel(6),
    "w7": lambda: wheel(8),
    "moser": moser_spindle,
    "grotzsch": grotzsch,
    "petersen": petersen,
}


def generate(family: str, n: int = 0, p: float = 0.5, seed: int = 0,
             base: str = "", base_n: int = 0) -> Graph:
    if family == "complete":
        return complete(n)
    if family == "cycle":
        return cycle(n)
    if family == "wheel":
        return wheel(n)
    if family == "gnp":
        return gnp(n, p, seed)
    if family == "mycielski-of":
        return mycielski(generate(base, n=base_n, p=p, seed=seed))
    if family in NAMED:
        return NAMED[family]()
    raise ValueError(f"unknown family {family!r}")
