"""
FastAPI entry point for the Grundy toolkit.
Exposes the Grundy computations, the EDS reduction and the identity suite
over HTTP. Graphs travel as {"n": ..., "edges": [[u, v], ...]}.
"""

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware

from app.errors import GrundyError, SizeLimitError
from app.extended_clique import grundy_number_cobipartite
from app.graph_core import build_graph, total_graph
from app.matching_domination import min_edge_dominating_exact, min_maximal_matching_exact
from app.oracles import max_independent_set_exact
from app.reduction import reduce_eds_to_grundy, verify_reduction
from app.reports import grundy_report
from app.schemas import (
    EdsInstance,
    EdsResponse,
    GraphPayload,
    GrundyRequest,
    GrundyResult,
    ReduceRequest,
    ReduceResponse,
    RunReport,
    TotalGraphResponse,
    VerifyReport,
    VerifyRequest,
)
from app.verification import run_suite

VERSION = "1.0.0"

# Initialize FastAPI app
app = FastAPI(
    title="Grundy Toolkit",
    description="Grundy numbers of complements of bipartite graphs via extended cliques, the reduction from EDGE DOMINATING SET, and the identity suite cross-checking them.",
    version=VERSION,
    docs_url="/docs",
    redoc_url="/redoc",
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


def _http_error(e: GrundyError) -> HTTPException:
    if isinstance(e, SizeLimitError):
        return HTTPException(status_code=413, detail=str(e))
    return HTTPException(status_code=400, detail=str(e))


def _graph(payload: GraphPayload):
    return build_graph(payload.n, payload.edges)


@app.get("/")
async def root():
    """Service summary."""
    return {
        "status": "running",
        "message": "Grundy toolkit is ready!",
        "version": VERSION,
        "features": ["grundy", "reduce", "eds", "extended_clique", "total_graph", "verify"],
        "docs": "/docs",
    }


@app.get("/health")
async def health_check():
    """Health check endpoint for monitoring."""
    return {"status": "healthy"}


# ============================================
# Computations
# ============================================

@app.post("/grundy", response_model=RunReport, response_model_exclude_none=True, tags=["Grundy"])
def grundy(request: GrundyRequest):
    """
    Grundy number.

    - **exact**: exact search on the given graph
    - **structural**: the graph is the bipartite b; returns Gamma(complement(b)) = n - gamma'(b) with witnesses
    - **approx**: the graph is the bipartite b; returns chi <= Gamma <= 3 chi / 2
    """
    try:
        return grundy_report(_graph(request), request.method)
    except GrundyError as e:
        raise _http_error(e)


@app.post("/reduce", response_model=ReduceResponse, tags=["Reduction"])
def reduce(request: ReduceRequest, check: bool = False):
    """Map (b, k) to (complement(b), n - k); with ?check=true also verify the equivalence."""
    try:
        instance = EdsInstance(graph=_graph(request), budget=request.k)
        target = reduce_eds_to_grundy(instance)
        report = verify_reduction(instance) if check else None
        return ReduceResponse(complement=target.graph, threshold=target.threshold, report=report)
    except GrundyError as e:
        raise _http_error(e)


@app.post("/eds", response_model=EdsResponse, tags=["Reduction"])
def edge_dominating_set(request: GraphPayload):
    """Minimum edge dominating set and a minimum maximal matching of the same size."""
    try:
        g = _graph(request)
        eds = min_edge_dominating_exact(g)
        mmm = min_maximal_matching_exact(g)
        return EdsResponse(gamma_prime=mmm.size, edge_dominating_set=eds, min_maximal_matching=mmm)
    except GrundyError as e:
        raise _http_error(e)


@app.post("/extended-clique", response_model=GrundyResult, tags=["Grundy"])
def extended_clique(request: GraphPayload):
    """Maximum extended clique of complement(b) with the Grundy coloring it induces."""
    try:
        return grundy_number_cobipartite(_graph(request))
    except GrundyError as e:
        raise _http_error(e)


@app.post("/total-graph", response_model=TotalGraphResponse, tags=["Grundy"])
def total(request: GraphPayload, alpha: bool = False):
    """Total graph T(G); with ?alpha=true also its independence number."""
    try:
        t, origin = total_graph(_graph(request))
        alpha_total = len(max_independent_set_exact(t)) if alpha else None
        return TotalGraphResponse(
            total=t,
            origin=[node.label() for node in origin.origin],
            alpha_total=alpha_total,
        )
    except GrundyError as e:
        raise _http_error(e)


@app.post("/verify", response_model=VerifyReport, tags=["Verification"])
def verify(request: VerifyRequest):
    """Run the identity suite on a small corpus."""
    try:
        return run_suite(max_n=request.max_n, count=request.count, seeds=request.seeds)
    except GrundyError as e:
        raise _http_error(e)


if __name__ == "__main__":
    import uvicorn
    uvicorn.run(app, host="0.0.0.0", port=8000)
