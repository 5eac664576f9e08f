"""Smoke tests for the pybind11 module."""

try:
    import _sierpinski as sg
except ImportError:  # installed package layout
    from sierpinski_codes import _sierpinski as sg


def test_graph_basics():
    g = sg.SierpinskiGraph(2, 3)
    assert g.vertex_count == 9
    assert g.edge_count == 12
    assert g.adjacent([0, 1], [1, 0])
    assert not g.adjacent([0, 0], [1, 1])
    assert g.is_extreme([1, 1])
    assert g.crossing_partner([0, 1]) == [1, 0]
    assert g.crossing_partner([0, 0]) is None
    assert g.is_twin_free()
    assert len(g.crossing_edges()) == 3


def test_recursive_matches_rule():
    a = sg.SierpinskiGraph(3, 3)
    b = sg.SierpinskiGraph.recursive(3, 3)
    assert a.export_text("edgelist") == b.export_text("edgelist")


def test_constructions_verify():
    g = sg.SierpinskiGraph(2, 4)
    for kind in ("id", "ld", "td"):
        code = sg.construct_code(kind, 2, 4)
        assert len(code) == sg.predicted_size(kind, 2, 4)
        assert g.verify(kind, code)["valid"]


def test_verify_witness():
    g = sg.SierpinskiGraph(2, 3)
    report = g.verify("td", [])
    assert not report["valid"]
    assert "uncovered" in report


def test_solver_and_certificates():
    res = sg.solve("id", 2, 3, use_structural_bound=False)
    assert res["status"] == "ProvedOptimal"
    assert res["min_size"] == 6
    rep = sg.certify_paper_value("td", 3, 3)
    assert rep["value"] == 10
    assert rep["method"] == "bounds-met"
    assert sg.conjecture_bound(2, 4) == sg.predicted_size("id", 2, 4) == 12


def test_classify():
    g = sg.SierpinskiGraph(2, 3)
    inner = [[x, y] for x in range(3) for y in range(3) if x != y]
    assert len(g.classify(inner)) == 4
