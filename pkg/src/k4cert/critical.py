"""Reduce a non-3-colourable graph to an edge-critical subgraph."""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import Coloring, canonical_relabel, find_proper_coloring, verify_coloring
from .graph import Edge, Graph


class ProofViolation(AssertionError):
    """A step the construction proves impossible has happened (an internal bug)."""


def require(cond: bool, message: str) -> None:
    if not cond:
        raise ProofViolation(message)


class AlreadyColorable(ValueError):
    """The input has a proper 3-colouring, so there is no critical pair."""

    def __init__(self, coloring: Coloring):
        super().__init__("graph is 3-colourable")
        self.coloring = coloring


@dataclass(frozen=True)
class CriticalPair:
    h: Graph
    xy: Edge
    pi_witness: Coloring


def extract_critical_pair(g: Graph) -> CriticalPair:
    """Delete edges of ``g`` while it stays non-3-colourable.

    Edges are tried in ascending order and the pass is repeated until nothing
    more can go, so every surviving edge is critical. The smallest surviving
    edge becomes ``xy`` and the 3-colouring of ``h - xy`` is returned with
    x's colour relabelled to 1.
    """
    found = find_proper_coloring(g, 3)
    if found is not None:
        raise AlreadyColorable(found)
    edges = set(g.edges)
    # an edge once found critical stays critical as other edges are deleted
    critical: set[Edge] = set()
    changed = True
    while changed:
        changed = False
        for f in sorted(edges - critical):
            trial = Graph(g.n, frozenset(edges - {f}))
            if find_proper_coloring(trial, 3) is None:
                edges.discard(f)
                changed = True
            else:
                critical.add(f)
    h = Graph(g.n, frozenset(edges))
    xy = min(edges)
    x, y = xy
    witness = find_proper_coloring(h.without_edges([xy]), 3)
    witness = canonical_relabel(witness.colors, 3, first=x)
    require(witness[x] == witness[y],
            "3-colouring of H - xy separates x and y, so H would be 3-colourable")
    require(verify_coloring(h, witness, [xy]), "witness is not proper on H - xy")
    return CriticalPair(h, xy, witness)
