from __future__ import annotations

import random
from itertools import combinations, product

import pytest

from k4cert.graph import Graph, from_edge_list


def brute_simple_paths(g: Graph, x: int, y: int, allowed=None):
    """Every simple x-y path, by plain DFS over partial paths."""
    keep = set(range(g.n)) if allowed is None else set(allowed)
    if x not in keep or y not in keep:
        return []
    out = []
    stack = [[x]]
    while stack:
        path = stack.pop()
        if path[-1] == y:
            out.append(path)
            continue
        for b in g.adj[path[-1]]:
            if b in keep and b not in path:
                stack.append(path + [b])
    return out


def brute_odd_cycles(g: Graph, allowed=None):
    """All simple odd cycles (as vertex sets with an ordering), smallest vertex first."""
    keep = set(range(g.n)) if allowed is None else set(allowed)
    cycles = []
    for s in sorted(keep):
        stack = [[s]]
        while stack:
            path = stack.pop()
            for b in g.adj[path[-1]]:
                if b not in keep or b < s:
                    continue
                if b == s and len(path) >= 3 and path[1] < path[-1] and len(path) % 2 == 1:
                    cycles.append(tuple(path))
                elif b not in path:
                    stack.append(path + [b])
    return cycles


def brute_colorable(g: Graph, k: int):
    for assignment in product(range(k), repeat=g.n):
        if all(assignment[a] != assignment[b] for a, b in g.edges):
            return assignment
    return None


def brute_bipartite(g: Graph, allowed) -> bool:
    keep = sorted(allowed)
    sub = [(a, b) for a, b in g.edges if a in allowed and b in allowed]
    for bits in product((0, 1), repeat=len(keep)):
        side = dict(zip(keep, bits))
        if all(side[a] != side[b] for a, b in sub):
            return True
    return False


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return from_edge_list(n, [e for e in combinations(range(n), 2) if rng.random() < p])


ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[number])


@pytest.fixture
def rng():
    return random.Random(20240611)
