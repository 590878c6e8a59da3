import json

import pytest

from k4cert.extractor import audit_trace, extract_k4_minor
from k4cert.formats import (
    DIMACS,
    EDGE_LIST,
    FormatError,
    certificate_from_json,
    certificate_to_json,
    dumps,
    emit_dot,
    emit_graph,
    parse_graph,
    sniff_format,
)
from k4cert.generators import NAMED, complete, cycle, gnp, grotzsch, petersen
from k4cert.oracle import verify_k4_minor

CORPUS = [f() for f in NAMED.values()] + [cycle(7), gnp(12, 0.4, 5), gnp(1, 0.5, 0)]


class TestDimacs:
    def test_triangle(self):
        doc = parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n", DIMACS)
        assert doc.graph == complete(3)
        assert doc.warnings == []

    def test_duplicate_edge_warns(self):
        doc = parse_graph(b"c hello\np edge 3 2\ne 1 2\ne 2 1\n", DIMACS)
        assert doc.graph.m == 1
        assert any("duplicate" in w for w in doc.warnings)

    @pytest.mark.parametrize("text, match", [
        ("p edge 2 1\ne 1 1\n", "loop"),
        ("p edge 2 1\ne 1 3\n", "out of range"),
        ("p edge 2 1\np edge 2 1\n", "duplicate 'p'"),
        ("p edge two 1\n", "integer"),
        ("p graph 2 1\n", "malformed header"),
        ("e 1 2\n", "before 'p'"),
        ("c only comments\n", "missing"),
        ("p edge 2 1\nx 1 2\n", "unknown line"),
    ])
    def test_errors(self, text, match):
        with pytest.raises(FormatError, match=match):
            parse_graph(text, DIMACS)

    def test_is_one_based(self):
        doc = parse_graph("p edge 4 1\ne 3 4\n", DIMACS)
        assert doc.graph.sorted_edges() == [(2, 3)]


class TestEdgeList:
    def test_basic(self):
        doc = parse_graph("c name tri\nn 3\n0 1\n1 2\n0 2\n", EDGE_LIST)
        assert doc.graph == complete(3) and doc.name == "tri"

    @pytest.mark.parametrize("text", ["0 1\n", "n 2\n0 0\n", "n 2\n0 2\n", "n 2\n0 1 2\n",
                                      "n 2\nn 2\n"])
    def test_errors(self, text):
        with pytest.raises(FormatError):
            parse_graph(text, EDGE_LIST)


@pytest.mark.parametrize("fmt", [DIMACS, EDGE_LIST])
def test_round_trip(fmt):
    for g in CORPUS:
        text = emit_graph(g, fmt, name="sample graph")
        doc = parse_graph(text, fmt)
        assert doc.graph == g and doc.name == "sample graph" and not doc.warnings
        assert sniff_format(text) == fmt


def test_sniff_by_suffix():
    assert sniff_format("n 3\n", "graph.col") == DIMACS


class TestCertificateJson:
    def test_minor_schema(self):
        g = complete(4)
        doc = certificate_to_json(extract_k4_minor(g), g, "k4")
        assert doc["type"] == "k4_minor"
        assert doc["branch_sets"] == [[3], [2], [0], [1]]
        assert sorted(doc["witness_edges"]) == ["h1-h2", "h1-h3", "h1-h4", "h2-h3", "h2-h4", "h3-h4"]
        assert all(len(e) == 2 for e in doc["witness_edges"].values())
        assert "trace" not in doc

    def test_coloring_schema(self):
        g = petersen()
        doc = certificate_to_json(extract_k4_minor(g), g)
        assert doc["type"] == "three_coloring"
        assert len(doc["coloring"]) == 10 and set(doc["coloring"]) <= {1, 2, 3}

    def test_trace_round_trip_keeps_invariants(self):
        g = grotzsch()
        cert = extract_k4_minor(g)
        doc = json.loads(dumps(certificate_to_json(cert, g, trace=True)))
        assert set(doc["trace"]) == {"H_edges", "xy", "pi", "rho", "A", "B", "u", "v", "P",
                                     "C2", "C3", "Q", "w", "z", "e"}
        back = certificate_from_json(doc)
        assert back.trace == cert.trace
        assert audit_trace(back.trace, back.minor) == []
        assert verify_k4_minor(g, back.minor).ok

    def test_stable_bytes(self):
        g = grotzsch()
        first = dumps(certificate_to_json(extract_k4_minor(g), g, trace=True))
        assert first == dumps(certificate_to_json(extract_k4_minor(g), g, trace=True))

    def test_unknown_type(self):
        with pytest.raises(FormatError):
            certificate_from_json({"type": "five_coloring"})


def test_dot_has_four_clusters():
    g = complete(4)
    text = emit_dot(g, extract_k4_minor(g), "k4")
    assert text.startswith('graph "k4" {')
    assert sum(f"subgraph cluster_h{i}" in text for i in range(1, 5)) == 4
    assert text.count(" -- ") == 6
