"""Run reports shared by the CLI and the HTTP API."""

from app.coloring import grundy_number_exact
from app.extended_clique import approx_grundy, grundy_number_cobipartite
from app.graph_io import format_coloring, format_extended_clique
from app.schemas import Graph, RunReport, format_fraction

GRUNDY_METHODS = ("exact", "structural", "approx")


def grundy_report(g: Graph, method: str = "structural") -> RunReport:
    """
    exact: Gamma of g itself. structural / approx: g is the bipartite b and
    the report is about complement(b).
    """
    if method == "exact":
        result = grundy_number_exact(g)
        return RunReport(
            command="grundy",
            n=g.n,
            m=g.m,
            results={"Gamma": result.gamma},
            parameters={"method": method},
            witness=format_coloring(result.witness),
        )
    if method == "approx":
        bounds = approx_grundy(g)
        return RunReport(
            command="grundy",
            n=g.n,
            m=g.m,
            results={"chi": bounds.lower, "lower": bounds.lower, "upper": format_fraction(bounds.upper)},
            parameters={"method": method},
        )
    if method != "structural":
        raise ValueError(f"unknown method {method!r}; expected one of {GRUNDY_METHODS}")

    result = grundy_number_cobipartite(g)
    return RunReport(
        command="grundy",
        n=g.n,
        m=g.m,
        results={"Gamma": result.gamma, "gamma_prime": g.n - result.gamma},
        parameters={"method": method},
        witness=format_coloring(result.witness) + format_extended_clique(result.extended_clique),
    )
