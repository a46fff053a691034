import pytest
from fastapi.testclient import TestClient

from app.graph_core import complete_graph, cycle_graph, path_graph
from app.main import app
from app.reports import GRUNDY_METHODS, grundy_report


class TestGrundyReport:
    def test_structural(self, p4):
        report = grundy_report(p4)
        assert report.parameters == {"method": "structural"}
        assert report.results == {"Gamma": 3, "gamma_prime": 1}
        assert report.witness.endswith("I: 0 3\nM: 1 2\n")

    def test_exact_has_no_extended_clique(self, k3):
        report = grundy_report(k3, "exact")
        assert report.results == {"Gamma": 3}
        assert "I:" not in report.witness

    def test_approx_has_no_witness(self, c6):
        report = grundy_report(c6, "approx")
        assert report.results == {"chi": 3, "lower": 3, "upper": "9/2"}
        assert report.witness is None

    def test_unknown_method(self, p4):
        with pytest.raises(ValueError, match="unknown method"):
            grundy_report(p4, "guess")


@pytest.mark.parametrize("method", GRUNDY_METHODS)
@pytest.mark.parametrize("graph", [path_graph(4), cycle_graph(6), complete_graph(2)], ids=["P4", "C6", "K2"])
def test_http_matches_library(method, graph):
    payload = {"n": graph.n, "edges": [list(e) for e in graph.edges], "method": method}
    body = TestClient(app).post("/grundy", json=payload).json()
    assert body == grundy_report(graph, method).model_dump(mode="json", exclude_none=True)
