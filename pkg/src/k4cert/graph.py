"""Undirected simple graphs and the traversal machinery built on them.

Vertices are dense integers ``0..n-1``. Every traversal visits neighbours in
ascending identifier order so results are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Union

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed graph input (loops, out-of-range endpoints)."""


def norm_edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset
    adj: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for a, b in self.edges:
            if a == b:
                raise GraphError(f"loop at vertex {a}")
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise GraphError(f"edge ({a}, {b}) out of range for n={self.n}")
            if a > b:
                raise GraphError(f"edge ({a}, {b}) not normalised")
            nbrs[a].add(b)
            nbrs[b].add(a)
        object.__setattr__(self, "adj", tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, a: int, b: int) -> bool:
        return norm_edge(a, b) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def without_edges(self, removed: Iterable[Edge]) -> "Graph":
        drop = {norm_edge(*e) for e in removed}
        return Graph(self.n, self.edges - drop)

    def restrict(self, allowed: Iterable[int]) -> "Graph":
        """Keep only edges with both ends in ``allowed``; identifiers are unchanged."""
        keep = set(allowed)
        return Graph(self.n, frozenset(e for e in self.edges if e[0] in keep and e[1] in keep))

    def masks(self) -> list[int]:
        return [sum(1 << u for u in nb) for nb in self.adj]


def from_edge_list(n: int, pairs: Iterable[Iterable[int]]) -> Graph:
    """Build a graph from ``(a, b)`` pairs, collapsing duplicates.

    >>> from_edge_list(2, [(0, 1), (1, 0)]).m
    1
    """
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    edges = set()
    for a, b in pairs:
        a, b = int(a), int(b)
        if a == b:
            raise GraphError(f"loop at vertex {a}")
        if not (0 <= a < n and 0 <= b < n):
            raise GraphError(f"edge ({a}, {b}) out of range for n={n}")
        edges.add(norm_edge(a, b))
    return Graph(n, frozenset(edges))


@dataclass(frozen=True)
class PathRecord:
    vertices: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))

    def __len__(self):
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    @property
    def internal(self) -> tuple:
        return self.vertices[1:-1]

    def edges(self) -> list[Edge]:
        vs = self.vertices
        return [norm_edge(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]

    def is_valid_in(self, g: Graph) -> bool:
        vs = self.vertices
        return (len(vs) > 0 and len(set(vs)) == len(vs)
                and all(g.has_edge(a, b) for a, b in zip(vs, vs[1:])))


@dataclass(frozen=True)
class CycleRecord:
    vertices: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))

    def __len__(self):
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    def __contains__(self, v) -> bool:
        return v in self.vertices

    def edges(self) -> list[Edge]:
        vs = self.vertices
        k = len(vs)
        return [norm_edge(vs[i], vs[(i + 1) % k]) for i in range(k)]

    def is_valid_in(self, g: Graph) -> bool:
        vs = self.vertices
        return (len(vs) >= 3 and len(vs) % 2 == 1 and len(set(vs)) == len(vs)
                and all(g.has_edge(a, b) for a, b in self.edges()))


@dataclass(frozen=True)
class Bipartition:
    left: frozenset
    right: frozenset


def _allowed_set(g: Graph, allowed: Optional[Iterable[int]]) -> set[int]:
    return set(g.vertices()) if allowed is None else set(allowed)


def components(g: Graph, excluded: Iterable[int] = ()) -> list[frozenset]:
    """Connected components of ``g`` minus ``excluded``, ordered by smallest member."""
    skip = set(excluded)
    seen = set(skip)
    out = []
    for s in g.vertices():
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            a = queue.popleft()
            for b in g.adj[a]:
                if b not in seen:
                    seen.add(b)
                    comp.append(b)
                    queue.append(b)
        out.append(frozenset(comp))
    return out


def bipartite_or_odd_cycle(g: Graph, allowed: Optional[Iterable[int]] = None
                           ) -> Union[Bipartition, CycleRecord]:
    """2-colour the subgraph induced by ``allowed`` or return an odd cycle in it.

    BFS layering per component; an edge joining two vertices of the same layer
    parity closes an odd cycle through their lowest common BFS ancestor.
    """
    keep = _allowed_set(g, allowed)
    side: dict[int, int] = {}
    parent: dict[int, int] = {}
    depth: dict[int, int] = {}
    for root in sorted(keep):
        if root in side:
            continue
        side[root], parent[root], depth[root] = 0, -1, 0
        queue = deque([root])
        while queue:
            a = queue.popleft()
            for b in g.adj[a]:
                if b not in keep:
                    continue
                if b not in side:
                    side[b] = 1 - side[a]
                    parent[b] = a
                    depth[b] = depth[a] + 1
                    queue.append(b)
                elif side[b] == side[a]:
                    return _close_odd_cycle(a, b, parent, depth)
    left = frozenset(v for v, s in side.items() if s == 0)
    return Bipartition(left, frozenset(keep) - left)


def _close_odd_cycle(a: int, b: int, parent: dict, depth: dict) -> CycleRecord:
    up_a, up_b = [a], [b]
    while depth[up_a[-1]] > depth[up_b[-1]]:
        up_a.append(parent[up_a[-1]])
    while depth[up_b[-1]] > depth[up_a[-1]]:
        up_b.append(parent[up_b[-1]])
    while up_a[-1] != up_b[-1]:
        up_a.append(parent[up_a[-1]])
        up_b.append(parent[up_b[-1]])
    # up_a: a .. lca, up_b: b .. lca
    cycle = list(reversed(up_a)) + up_b[:-1]
    return CycleRecord(cycle)


def bfs_distances(g: Graph, sources: Iterable[int], allowed: Optional[Iterable[int]] = None
                  ) -> dict[int, int]:
    keep = _allowed_set(g, allowed)
    dist = {s: 0 for s in sources if s in keep}
    queue = deque(sorted(dist))
    while queue:
        a = queue.popleft()
        for b in g.adj[a]:
            if b in keep and b not in dist:
                dist[b] = dist[a] + 1
                queue.append(b)
    return dist


def shortest_path_between_sets(g: Graph, sources: Iterable[int], targets: Iterable[int],
                               allowed: Optional[Iterable[int]] = None) -> Optional[PathRecord]:
    """Shortest path from ``sources`` to ``targets`` inside ``allowed``.

    Among all shortest paths the lexicographically smallest vertex sequence is
    returned: distances to the target set are computed first, then the path is
    grown greedily from the smallest eligible source.
    """
    keep = _allowed_set(g, allowed)
    srcs = sorted(set(sources) & keep)
    to_target = bfs_distances(g, targets, keep)
    reachable = [s for s in srcs if s in to_target]
    if not reachable:
        return None
    best = min(to_target[s] for s in reachable)
    path = [min(s for s in reachable if to_target[s] == best)]
    while to_target[path[-1]] > 0:
        here = path[-1]
        path.append(min(b for b in g.adj[here] if to_target.get(b) == to_target[here] - 1))
    return PathRecord(path)


def biconnected_blocks(g: Graph, allowed: Optional[Iterable[int]] = None) -> list[frozenset]:
    """Vertex sets of the biconnected blocks (bridges included), via Tarjan's edge stack."""
    keep = _allowed_set(g, allowed)
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks: list[frozenset] = []
    counter = 0
    for root in sorted(keep):
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        edge_stack: list[Edge] = []
        stack = [(root, -1, iter(g.adj[root]))]
        while stack:
            a, par, it = stack[-1]
            advanced = False
            for b in it:
                if b not in keep or b == par:
                    continue
                if b not in disc:
                    disc[b] = low[b] = counter
                    counter += 1
                    edge_stack.append((a, b))
                    stack.append((b, a, iter(g.adj[b])))
                    advanced = True
                    break
                if disc[b] < disc[a]:
                    edge_stack.append((a, b))
                    low[a] = min(low[a], disc[b])
            if advanced:
                continue
            stack.pop()
            if par == -1:
                continue
            low[par] = min(low[par], low[a])
            if low[a] >= disc[par]:
                block = set()
                while True:
                    e = edge_stack.pop()
                    block.update(e)
                    if e == (par, a):
                        break
                blocks.append(frozenset(block))
    return blocks


def xy_path_vertices(g: Graph, x: int, y: int, allowed: Optional[Iterable[int]] = None
                     ) -> frozenset:
    """All vertices lying on at least one simple x-y path.

    These are exactly the vertices of the blocks met along the block-cut tree
    path joining x and y.
    """
    if x == y:
        raise ValueError("x and y must differ")
    keep = _allowed_set(g, allowed)
    if x not in keep or y not in keep:
        return frozenset()
    blocks = biconnected_blocks(g, keep)
    membership: dict[int, list[int]] = {}
    for i, block in enumerate(blocks):
        for v in block:
            membership.setdefault(v, []).append(i)

    # tree nodes: ("b", i) for blocks, ("v", c) for cut vertices
    def node_of(v: int):
        mine = membership.get(v, [])
        if len(mine) == 1:
            return ("b", mine[0])
        return ("v", v) if mine else None

    start, goal = node_of(x), node_of(y)
    if start is None or goal is None:
        return frozenset()

    def tree_neighbors(node):
        kind, ident = node
        if kind == "v":
            return [("b", i) for i in membership[ident]]
        return [("v", c) for c in sorted(blocks[ident]) if len(membership[c]) > 1]

    prev = {start: None}
    queue = deque([start])
    while queue and goal not in prev:
        node = queue.popleft()
        for nxt in tree_neighbors(node):
            if nxt not in prev:
                prev[nxt] = node
                queue.append(nxt)
    if goal not in prev:
        return frozenset()
    out: set[int] = set()
    node = goal
    while node is not None:
        if node[0] == "b":
            out |= blocks[node[1]]
        node = prev[node]
    return frozenset(out)


def two_fan(g: Graph, a: int, x: int, y: int, allowed: Optional[Iterable[int]] = None
            ) -> Optional[tuple[PathRecord, PathRecord]]:
    """Paths a->x and a->y meeting only at a, or None when none exist.

    Unit vertex capacities via node splitting; two BFS augmentations.
    """
    if len({a, x, y}) != 3:
        raise ValueError("a, x, y must be distinct")
    keep = _allowed_set(g, allowed)
    if not {a, x, y} <= keep:
        return None
    # node ids: 2v = v_in, 2v+1 = v_out, sink = 2n
    sink = 2 * g.n
    cap: dict[tuple[int, int], int] = {}
    out_arcs: dict[int, list[int]] = {}

    def arc(p: int, q: int, c: int):
        if (p, q) not in cap:
            out_arcs.setdefault(p, []).append(q)
            out_arcs.setdefault(q, []).append(p)
            cap.setdefault((q, p), 0)
        cap[(p, q)] = cap.get((p, q), 0) + c

    for v in sorted(keep):
        if v != a:
            arc(2 * v, 2 * v + 1, 1)
    for p, q in g.sorted_edges():
        if p in keep and q in keep:
            arc(2 * p + 1, 2 * q, 1)
            arc(2 * q + 1, 2 * p, 1)
    arc(2 * x + 1, sink, 1)
    arc(2 * y + 1, sink, 1)
    for node in out_arcs:
        out_arcs[node].sort()

    source = 2 * a + 1
    for _ in range(2):
        prev = {source: None}
        queue = deque([source])
        while queue and sink not in prev:
            p = queue.popleft()
            for q in out_arcs.get(p, ()):
                if q not in prev and cap[(p, q)] > 0:
                    prev[q] = p
                    queue.append(q)
        if sink not in prev:
            return None
        q = sink
        while prev[q] is not None:
            p = prev[q]
            cap[(p, q)] -= 1
            cap[(q, p)] += 1
            q = p

    def flow_on(p: int, q: int) -> bool:
        # original arcs carrying flow have residual reverse capacity
        return cap.get((q, p), 0) > 0 and _is_forward(p, q)

    def _is_forward(p: int, q: int) -> bool:
        if q == sink:
            return True
        if p == sink:
            return False
        pv, qv = p // 2, q // 2
        if pv == qv:
            return p % 2 == 0 and q % 2 == 1
        return p % 2 == 1 and q % 2 == 0

    used: set[tuple[int, int]] = set()
    paths = []
    for _ in range(2):
        walk = [a]
        node = source
        while node != sink:
            nxt = next(q for q in out_arcs[node] if (node, q) not in used and flow_on(node, q))
            used.add((node, nxt))
            node = nxt
            if node != sink and node % 2 == 0:
                v = node // 2
                if v in walk:  # drop a flow cycle
                    del walk[walk.index(v) + 1:]
                else:
                    walk.append(v)
        paths.append(walk)
    by_end = {p[-1]: PathRecord(p) for p in paths}
    return by_end[x], by_end[y]
