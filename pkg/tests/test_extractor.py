from itertools import combinations

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from k4cert.coloring import Coloring, find_proper_coloring, verify_coloring
from k4cert.critical import ProofViolation, extract_critical_pair
from k4cert.extractor import (
    PAIR_KEYS,
    TriPartition,
    assemble_branch_sets,
    audit_trace,
    build_rho,
    carve_q,
    choose_separating_edge,
    construct,
    extract_k4_minor,
    odd_cycle_vertex_sets,
    partition_pi,
    realize_cycles,
    select_linkage,
)
from k4cert.generators import complete, grotzsch, moser_spindle, petersen, wheel
from k4cert.graph import CycleRecord, Graph, PathRecord, bfs_distances, components, from_edge_list
from k4cert.oracle import verify_k4_minor

from conftest import brute_odd_cycles

K4 = complete(4)
K4_XY = (0, 1)
K4_PI = Coloring((1, 1, 2, 3), 3)

# edge-critical 4-chromatic graph on which rho swaps the component {1, 2} of H - pi1
SWAP_H = from_edge_list(7, [(0, 4), (0, 5), (0, 6), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4),
                            (3, 6), (4, 5), (5, 6)])


def _pipeline(g):
    pair = extract_critical_pair(g)
    pi = partition_pi(pair.h, pair.xy, pair.pi_witness)
    return pair, pi


def _odd_cycle_vertices(h, allowed):
    return {v for c in brute_odd_cycles(h, allowed) for v in c}


class TestPartitionPi:
    def test_k4(self):
        pi = partition_pi(K4, K4_XY, K4_PI)
        assert pi.classes == (frozenset({0, 1}), frozenset({2}), frozenset({3}))

    def test_relabel_invariance(self):
        pi = partition_pi(K4, K4_XY, Coloring((2, 2, 3, 1), 3))
        assert pi.classes == (frozenset({0, 1}), frozenset({2}), frozenset({3}))

    def test_w5(self):
        pair, pi = _pipeline(wheel(6))
        x, y = pair.xy
        assert pi.class_of[x] == pi.class_of[y] == 1
        assert verify_coloring(pair.h, pi.as_coloring(), [pair.xy])
        assert not verify_coloring(pair.h, pi.as_coloring())

    def test_split_endpoints_is_a_contradiction(self):
        with pytest.raises(ProofViolation):
            partition_pi(K4, K4_XY, Coloring((1, 2, 3, 1), 3))


class TestBuildRho:
    def test_k4_no_swap(self):
        pi = partition_pi(K4, K4_XY, K4_PI)
        assert build_rho(K4, K4_XY, pi) == pi

    def test_swapped_components_avoid_odd_cycles(self):
        pair, pi = _pipeline(SWAP_H)
        assert pair.h == SWAP_H
        rho = build_rho(pair.h, pair.xy, pi)
        on_odd = _odd_cycle_vertices(pair.h, pi.without(3))
        swapped = []
        for comp in components(pair.h, pi.cls(1)):
            flipped = {v for v in comp if pi.class_of[v] != rho.class_of[v]}
            assert flipped in (set(), set(comp))
            assert bool(flipped) == comp.isdisjoint(on_odd)
            if flipped:
                swapped.append(comp)
        assert swapped == [frozenset({1, 2})]
        assert verify_coloring(pair.h, rho.as_coloring(), [pair.xy])
        assert components(pair.h, pi.cls(1)) == components(pair.h, rho.cls(1))

    def test_common_component_exists(self):
        pair, pi = _pipeline(SWAP_H)
        rho = build_rho(pair.h, pair.xy, pi)
        on3 = _odd_cycle_vertices(pair.h, rho.without(3))
        on2 = _odd_cycle_vertices(pair.h, rho.without(2))
        assert any(comp & on3 and comp & on2 for comp in components(pair.h, rho.cls(1)))


class TestOddCycleVertexSets:
    def test_k4(self):
        pi = partition_pi(K4, K4_XY, K4_PI)
        assert odd_cycle_vertex_sets(K4, K4_XY, pi) == ({2}, {3})

    @pytest.mark.parametrize("g", [wheel(6), wheel(8), SWAP_H, moser_spindle()],
                             ids=["w5", "w7", "swap", "moser"])
    def test_against_cycle_enumeration(self, g):
        pair, pi = _pipeline(g)
        rho = build_rho(pair.h, pair.xy, pi)
        a_set, b_set = odd_cycle_vertex_sets(pair.h, pair.xy, rho)
        assert a_set == _odd_cycle_vertices(pair.h, rho.without(3)) & rho.cls(2)
        assert b_set == _odd_cycle_vertices(pair.h, rho.without(2)) & rho.cls(3)
        assert a_set and b_set and not (a_set | b_set) & rho.cls(1)
        for c in brute_odd_cycles(pair.h, rho.without(3)) + brute_odd_cycles(pair.h, rho.without(2)):
            assert pair.xy in CycleRecord(c).edges()


class TestLinkageAndCycles:
    def test_k4(self):
        pi = partition_pi(K4, K4_XY, K4_PI)
        link = select_linkage(K4, pi, frozenset({2}), frozenset({3}))
        assert (link.u, link.v, link.p.vertices) == (2, 3, (2, 3))
        c2, c3 = realize_cycles(K4, K4_XY, pi, 2, 3)
        assert c2.vertices == (0, 2, 1) and c3.vertices == (0, 3, 1)

    def test_adjacent_pair_gives_single_edge(self):
        g = from_edge_list(6, [(0, 1), (2, 3), (3, 4), (4, 5)])
        rho = TriPartition((1, 1, 2, 2, 3, 3))
        link = select_linkage(g, rho, frozenset({2, 3}), frozenset({4, 5}))
        assert link.p.vertices == (3, 4)

    @pytest.mark.parametrize("g", [wheel(6), wheel(8), moser_spindle(), grotzsch(), SWAP_H],
                             ids=["w5", "w7", "moser", "grotzsch", "swap"])
    def test_closest_pair_and_cycle_properties(self, g):
        pair, pi = _pipeline(g)
        h, xy = pair.h, pair.xy
        rho = build_rho(h, xy, pi)
        a_set, b_set = odd_cycle_vertex_sets(h, xy, rho)
        link = select_linkage(h, rho, a_set, b_set)
        best = min(d[b] for a in a_set for d in [bfs_distances(h, [a], rho.without(1))]
                   for b in b_set if b in d)
        assert len(link.p) - 1 == best and link.u != link.v
        c2, c3 = realize_cycles(h, xy, rho, link.u, link.v)
        for c, dropped in ((c2, 3), (c3, 2)):
            assert c.is_valid_in(h) and len(c) % 2 == 1
            assert set(c) <= rho.without(dropped)
            assert tuple(sorted(xy)) in c.edges()
        assert link.u in c2 and link.v in c3
        assert link.u not in c3 and link.v not in c2
        assert set(link.p.internal).isdisjoint(set(c2) | set(c3))


class TestCarveQ:
    def test_k4(self):
        q = carve_q(CycleRecord((0, 3, 1)), CycleRecord((0, 2, 1)), 3)
        assert (q.w, q.z, q.q.vertices) == (0, 1, (0, 3, 1))

    def test_stops_at_first_c2_vertex(self):
        c3 = CycleRecord((0, 5, 6, 7, 8, 9, 1))
        c2 = CycleRecord((0, 6, 2, 9, 1))
        q = carve_q(c3, c2, 7)
        assert (q.w, q.z, q.q.vertices) == (6, 9, (6, 7, 8, 9))

    def test_v_on_c2_rejected(self):
        with pytest.raises(ProofViolation):
            carve_q(CycleRecord((0, 3, 1)), CycleRecord((0, 3, 1)), 3)


class TestChooseSeparatingEdge:
    C2 = CycleRecord((0, 2, 3, 4, 5, 6, 1))

    def test_k4_uses_xy(self):
        assert choose_separating_edge(CycleRecord((0, 2, 1)), K4_XY, 2, 0, 1) == (0, 1)

    def test_opposite_sides_use_xy(self):
        assert choose_separating_edge(self.C2, (0, 1), 4, 2, 6) == (0, 1)

    def test_same_side_as_x(self):
        # order x=0, 2, w=3, 4, z=5, u=6, y=1
        assert choose_separating_edge(self.C2, (0, 1), 6, 3, 5) == (3, 4)
        assert choose_separating_edge(self.C2, (0, 1), 6, 5, 3) == (3, 4)

    def test_same_side_as_y_is_reflected(self):
        # read from y=1: 6, 5, 4, 3 ... the earlier of w/z from that end is 6
        assert choose_separating_edge(self.C2, (0, 1), 2, 4, 6) == (5, 6)

    def test_w_equal_u_stops_with_diagnostic(self):
        with pytest.raises(ProofViolation, match="instance must be preserved"):
            choose_separating_edge(self.C2, (0, 1), 3, 3, 5)

    @pytest.mark.parametrize("u", [2, 3, 4, 5, 6])
    def test_postcondition_exhaustive_on_heptagon(self, u):
        others = [v for v in self.C2 if v != u]
        for w, z in combinations(others, 2):
            e = choose_separating_edge(self.C2, (0, 1), u, w, z)
            assert e in self.C2.edges() and u not in e
            ring = list(self.C2)
            # walk the cycle from u, cut at e
            start = ring.index(u)
            walk = [ring[(start + i) % 7] for i in range(1, 7)]
            cut = next(i for i in range(5) if tuple(sorted(walk[i:i + 2])) == e)
            first, second = set(walk[:cut + 1]), set(walk[cut + 1:])
            assert (w in first) != (z in first) and first and second


class TestAssemble:
    def test_k4(self):
        bd = assemble_branch_sets(CycleRecord((0, 2, 1)), (0, 1), 2, PathRecord((2, 3)), 3,
                                  PathRecord((0, 3, 1)), 0, 1)
        assert bd.sets == (frozenset({3}), frozenset({2}), frozenset({0}), frozenset({1}))
        assert set(bd.witness_edges) == set(PAIR_KEYS)
        assert verify_k4_minor(K4, bd).ok


class TestExtractK4Minor:
    def test_k4(self):
        cert = extract_k4_minor(K4)
        assert cert.coloring is None
        assert [sorted(s) for s in cert.minor.sets] == [[3], [2], [0], [1]]

    def test_petersen_colouring(self):
        cert = extract_k4_minor(petersen())
        assert cert.minor is None and verify_coloring(petersen(), cert.coloring)

    @pytest.mark.parametrize("g", [grotzsch(), wheel(6), wheel(8), moser_spindle(), SWAP_H,
                                   Graph(6, complete(4).edges)],
                             ids=["grotzsch", "w5", "w7", "moser", "swap", "k4+isolated"])
    def test_minor_certificates(self, g):
        cert = extract_k4_minor(g)
        assert cert.coloring is None
        assert verify_k4_minor(g, cert.minor).ok
        assert h1_contains_v_h2_contains_u(cert)
        assert audit_trace(cert.trace, cert.minor) == []

    def test_minor_confined_to_k4_component(self):
        cert = extract_k4_minor(Graph(6, complete(4).edges))
        assert set().union(*cert.minor.sets) <= {0, 1, 2, 3}

    def test_deterministic(self):
        assert extract_k4_minor(grotzsch()) == extract_k4_minor(grotzsch())


def h1_contains_v_h2_contains_u(cert):
    t = cert.trace
    return t.linkage.v in cert.minor.h1 and t.linkage.u in cert.minor.h2


@st.composite
def graphs(draw):
    n = draw(st.integers(4, 10))
    pairs = list(combinations(range(n), 2))
    p = draw(st.sampled_from([0.4, 0.55, 0.7]))
    bits = draw(st.lists(st.floats(0, 1), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [e for e, r in zip(pairs, bits) if r < p])


@settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(graphs())
def test_certificate_always_verifies(g):
    cert = extract_k4_minor(g)
    colorable = find_proper_coloring(g, 3) is not None
    assert (cert.coloring is not None) == colorable
    if colorable:
        assert verify_coloring(g, cert.coloring)
    else:
        assert verify_k4_minor(g, cert.minor).ok
        assert audit_trace(cert.trace, cert.minor) == []
        assert cert.trace.h.edges <= g.edges


def test_construct_from_pair_directly():
    bd, trace = construct(extract_critical_pair(wheel(6)))
    assert verify_k4_minor(wheel(6), bd).ok
    assert trace.xy == (0, 1)
