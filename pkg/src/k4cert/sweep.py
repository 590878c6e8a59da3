"""Cross-check suites over exhaustive or seeded random graph families."""

from __future__ import annotations

import hashlib
import random
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from multiprocessing import Pool
from typing import Iterable, Iterator, Optional

from .coloring import find_proper_coloring, verify_coloring
from .critical import ProofViolation
from .extractor import audit_trace, extract_k4_minor
from .formats import certificate_to_json, dumps, emit_graph, EDGE_LIST
from .generators import gnp
from .graph import Graph
from .oracle import BRUTE_FORCE_LIMIT, brute_force_k4_minor, is_k4_minor_free, verify_k4_minor

EXHAUSTIVE_LIMIT = 10
DEFAULT_PS = (0.3, 0.5, 0.7)


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labelled simple graph on n vertices (2^(n choose 2) of them)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(pairs[i] for i in range(len(pairs)) if mask >> i & 1))


def random_specs(seed: int, count: int, min_n: int, max_n: int,
                 ps: Iterable[float] = DEFAULT_PS) -> list[tuple[int, float, int]]:
    """(n, p, 64-bit graph seed) triples drawn from one master stream."""
    ps = tuple(ps)
    master = random.Random(seed)
    return [(master.randint(min_n, max_n), master.choice(ps), master.getrandbits(64))
            for _ in range(count)]


def random_graphs(seed: int, count: int, min_n: int, max_n: int,
                  ps: Iterable[float] = DEFAULT_PS) -> Iterator[Graph]:
    for n, p, gseed in random_specs(seed, count, min_n, max_n, ps):
        yield gnp(n, p, gseed)


@dataclass
class GraphResult:
    m: int
    colorable: bool
    has_minor: bool
    minor_free: bool
    failures: list
    digest: str


def check_graph(g: Graph) -> GraphResult:
    """Run every cross-check on one graph; failures are (check name, detail)."""
    failures = []
    cert = None
    try:
        cert = extract_k4_minor(g)
    except ProofViolation as exc:
        failures.append(("construction", str(exc)))
    colorable = find_proper_coloring(g, 3) is not None
    minor_free = is_k4_minor_free(g)
    doc = ""
    if cert is not None:
        doc = dumps(certificate_to_json(cert, g, trace=True))
        if (cert.coloring is not None) != colorable:
            failures.append(("dichotomy", cert.kind))
        if cert.coloring is not None and not verify_coloring(g, cert.coloring):
            failures.append(("coloring_verification", list(cert.coloring.colors)))
        if cert.minor is not None:
            report = verify_k4_minor(g, cert.minor)
            if not report.ok:
                failures.append(("minor_verification", report.failures))
            for problem in audit_trace(cert.trace, cert.minor):
                failures.append(("invariant", problem))
            if minor_free:
                failures.append(("minor_vs_reduction", "minor emitted for a reducible graph"))
    if g.n <= BRUTE_FORCE_LIMIT:
        if minor_free != (brute_force_k4_minor(g) is None):
            failures.append(("oracle_agreement", f"reduction says free={minor_free}"))
    if minor_free and not colorable:
        failures.append(("duffin_consistency", "K4-minor-free but not 3-colourable"))
    return GraphResult(g.m, colorable, cert is not None and cert.minor is not None,
                       minor_free, failures, hashlib.sha256(doc.encode()).hexdigest())


def _check_indexed(item):
    i, g = item
    return i, g, check_graph(g)


@dataclass
class SweepSummary:
    graphs: int = 0
    colorable: int = 0
    minor: int = 0
    minor_free: int = 0
    failure_counts: Counter = field(default_factory=Counter)
    counterexamples: list = field(default_factory=list)
    by_edges: dict = field(default_factory=dict)
    digest: str = ""

    @property
    def ok(self) -> bool:
        return not self.failure_counts

    def rows(self) -> list[tuple[str, object]]:
        out = [("graphs", self.graphs), ("three_colorable", self.colorable),
               ("k4_minor", self.minor), ("k4_minor_free", self.minor_free)]
        out += [(f"failures.{k}", v) for k, v in sorted(self.failure_counts.items())]
        out += [("failures_total", sum(self.failure_counts.values())),
                ("certificate_digest", self.digest),
                ("status", "PASS" if self.ok else "FAIL")]
        return out


def run_sweep(graphs: Iterable[Graph], workers: int = 1, keep: int = 5) -> SweepSummary:
    """Check every graph and aggregate counts in input order."""
    summary = SweepSummary()
    rolling = hashlib.sha256()
    items = enumerate(graphs)
    pool: Optional[Pool] = None
    if workers > 1:
        pool = Pool(workers)
        results = pool.imap(_check_indexed, items, chunksize=64)
    else:
        results = map(_check_indexed, items)
    try:
        for i, g, res in results:
            summary.graphs += 1
            summary.colorable += res.colorable
            summary.minor += res.has_minor
            summary.minor_free += res.minor_free
            bucket = summary.by_edges.setdefault(res.m, Counter())
            bucket["colorable" if res.colorable else "minor"] += 1
            bucket["minor_free"] += res.minor_free
            rolling.update(res.digest.encode())
            for name, _ in res.failures:
                summary.failure_counts[name] += 1
            if res.failures and len(summary.counterexamples) < keep:
                summary.counterexamples.append((i, emit_graph(g, EDGE_LIST), res.failures))
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    summary.digest = rolling.hexdigest()
    return summary
