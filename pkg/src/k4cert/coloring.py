"""Exact k-colouring by DSATUR-ordered backtracking."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .graph import Edge, Graph, norm_edge


@dataclass(frozen=True)
class Coloring:
    """Colour per vertex (``colors[v]`` in ``1..k``)."""

    colors: tuple
    k: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __len__(self):
        return len(self.colors)

    def as_dict(self) -> dict[int, int]:
        return dict(enumerate(self.colors))

    def classes(self) -> list[frozenset]:
        return [frozenset(v for v, c in enumerate(self.colors) if c == i)
                for i in range(1, self.k + 1)]


def canonical_relabel(colors: Iterable[int], k: int, first: Optional[int] = None) -> Coloring:
    """Rename colours by order of first appearance; ``first`` (a vertex) gets colour 1."""
    colors = list(colors)
    order = list(range(len(colors)))
    if first is not None:
        order.remove(first)
        order.insert(0, first)
    rename: dict[int, int] = {}
    for v in order:
        rename.setdefault(colors[v], len(rename) + 1)
    return Coloring(tuple(rename[c] for c in colors), k)


def find_proper_coloring(g: Graph, k: int) -> Optional[Coloring]:
    """Return a proper k-colouring of ``g`` or None if there is none.

    Vertices are picked by highest saturation, then higher degree, then lower
    identifier. A colour is only opened once all lower colours are in use,
    which removes colour-permutation symmetry. The witness is relabelled by
    first appearance in vertex order.
    """
    if k < 1:
        raise ValueError("k must be positive")
    n = g.n
    if n == 0:
        return Coloring((), k)
    nbr = g.masks()
    degree = [g.degree(v) for v in range(n)]
    color = [0] * n
    # forbidden[v]: bitmask of colours used on coloured neighbours
    forbidden_count = [[0] * (k + 1) for _ in range(n)]
    full = (1 << (k + 1)) - 2

    def forbidden(v: int) -> int:
        cnt = forbidden_count[v]
        mask = 0
        for c in range(1, k + 1):
            if cnt[c]:
                mask |= 1 << c
        return mask

    def pick(uncolored: int) -> int:
        best, best_key = -1, None
        m = uncolored
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            key = (bin(forbidden(v)).count("1"), degree[v])
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def assign(v: int, c: int, delta: int):
        m = nbr[v]
        while m:
            low = m & -m
            forbidden_count[low.bit_length() - 1][c] += delta
            m ^= low

    def search(uncolored: int, used: int) -> bool:
        if not uncolored:
            return True
        v = pick(uncolored)
        blocked = forbidden(v)
        if blocked & full == full:
            return False
        for c in range(1, min(k, used + 1) + 1):
            if blocked >> c & 1:
                continue
            color[v] = c
            assign(v, c, 1)
            if search(uncolored & ~(1 << v), max(used, c)):
                return True
            assign(v, c, -1)
            color[v] = 0
        return False

    if not search((1 << n) - 1, 0):
        return None
    return canonical_relabel(color, k)


def monochromatic_edges(g: Graph, c: Coloring) -> list[Edge]:
    if len(c) != g.n:
        raise ValueError(f"colouring covers {len(c)} vertices, graph has {g.n}")
    return [e for e in g.sorted_edges() if c[e[0]] == c[e[1]]]


def verify_coloring(g: Graph, c: Coloring, allowed_mono: Iterable[Edge] = ()) -> bool:
    """True iff every monochromatic edge of ``g`` under ``c`` is in ``allowed_mono``."""
    allowed = {norm_edge(*e) for e in allowed_mono}
    if any(not 1 <= col <= c.k for col in c.colors):
        return False
    return all(e in allowed for e in monochromatic_edges(g, c))


def is_colorable(g: Graph, k: int) -> bool:
    return find_proper_coloring(g, k) is not None
