"""HTTP facade over the library.

Run with ``uvicorn toeprow.service:app``.  Every operation is a pure
function of its request, so the service is stateless and safe to scale out;
the CLI talks to this app in-process by default.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, PlainTextResponse

from . import explorer, structure
from .core import (
    build_matrix,
    digraph_cycle_lengths,
    in_bounded_family,
    is_digraph_acyclic,
    matrix_to_lines,
    max_row_sum,
    normalize,
)
from .errors import DomainError, EngineMismatchError, UnknownPredicateError
from .rowgraph import (
    components_classify,
    graph_to_dot,
    graph_to_json_str,
    rowgraph_bounded,
    rowgraph_closed_form,
    rowgraph_oracle,
)
from .schemas import (
    BuildRequest,
    BuildResponse,
    CatalogRequest,
    CatalogRowModel,
    ClassifyRequest,
    ConstructRequest,
    ConstructResponse,
    CounterexampleModel,
    ExportRequest,
    GraphModel,
    PredictRequest,
    PredictResponse,
    ReportModel,
    RowgraphRequest,
    RowgraphResponse,
    SearchRequest,
    SpecModel,
    SummaryModel,
    TheoremInfoModel,
    VerifyRequest,
)

app = FastAPI(
    title="toeprow",
    description="Row graphs of (0,1)-Toeplitz matrices",
    version="0.1.0",
)


@app.exception_handler(DomainError)
async def _domain_error(request: Request, exc: DomainError) -> JSONResponse:
    return JSONResponse(
        status_code=400, content={"error": exc.code, "message": str(exc)}
    )


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.get("/theorems", response_model=list[TheoremInfoModel])
def theorems() -> list[dict]:
    return explorer.list_theorems()


@app.post("/build", response_model=BuildResponse)
def build(req: BuildRequest) -> BuildResponse:
    spec = req.spec.to_spec()
    return BuildResponse(
        spec=SpecModel.from_spec(spec),
        notation=spec.notation(),
        lines=matrix_to_lines(build_matrix(spec)),
    )


def _rowgraph(spec, engine: str):
    if engine == "oracle":
        return rowgraph_oracle(build_matrix(spec)), ["oracle"]
    if engine == "closed":
        return rowgraph_closed_form(spec), ["closed"]
    if engine == "bounded":
        return rowgraph_bounded(spec), ["bounded"]
    # cross-check: all applicable engines must agree before anything is shown
    oracle = rowgraph_oracle(build_matrix(spec))
    engines = {"oracle": oracle, "closed": rowgraph_closed_form(spec)}
    if in_bounded_family(spec):
        engines["bounded"] = rowgraph_bounded(spec)
    for name, graph in engines.items():
        if graph.edges != oracle.edges:
            raise EngineMismatchError(
                f"engine {name} disagrees with the oracle on {spec.notation()}"
            )
    return oracle, sorted(engines)


@app.post("/rowgraph", response_model=RowgraphResponse)
def rowgraph(req: RowgraphRequest) -> RowgraphResponse:
    spec = req.spec.to_spec()
    graph, engines = _rowgraph(spec, req.engine)
    return RowgraphResponse(graph=GraphModel.from_graph(graph), engines=engines)


@app.post("/classify", response_model=SummaryModel)
def classify(req: ClassifyRequest) -> SummaryModel:
    spec = req.spec.to_spec()
    summary = components_classify(rowgraph_oracle(build_matrix(spec)))
    return SummaryModel.from_summary(summary)


def _predict(name: str, spec) -> dict:
    if name == "bounded":
        return {
            "member": in_bounded_family(spec),
            "max_row_sum": max_row_sum(spec),
        }
    if name == "acyclic":
        return {
            "acyclic": is_digraph_acyclic(spec),
            "guaranteed_cycle_lengths": sorted(digraph_cycle_lengths(spec)),
        }
    if name == "triangle":
        normalized, swapped = normalize(spec)
        pred = structure.triangle_predicate(normalized)
        return {
            "has_triangle": pred.has_triangle,
            "condition": pred.condition,
            "witness": list(pred.witness) if pred.witness else None,
            "normalized": SpecModel.from_spec(normalized).model_dump(),
            "swapped": swapped,
        }
    if name == "cycle-verdict":
        verdict = structure.cycle_verdict_two_one(spec)
        return {
            "exists": verdict.exists,
            "predicted_length": verdict.predicted_length,
            "d": verdict.d,
            "r": verdict.r,
            "mirrored": verdict.mirrored,
        }
    if name == "boundary":
        pred = structure.boundary_family_structure(spec)
        return {
            "gamma": list(pred.gamma),
            "cycle_count": pred.cycle_count,
            "cycle_length": pred.cycle_length,
        }
    if name == "single-cycle":
        return {"single_cycle": structure.is_single_cycle(spec)}
    if name == "connected-triangle-free":
        return {
            "connected_triangle_free": structure.connected_triangle_free_check(
                spec
            )
        }
    raise UnknownPredicateError(
        f"unknown predicate {name!r}; known: bounded, acyclic, triangle, "
        "cycle-verdict, boundary, single-cycle, connected-triangle-free"
    )


@app.post("/predict", response_model=PredictResponse)
def predict(req: PredictRequest) -> PredictResponse:
    spec = req.spec.to_spec()
    return PredictResponse(
        predicate=req.predicate,
        spec=SpecModel.from_spec(spec),
        result=_predict(req.predicate, spec),
    )


@app.post("/construct", response_model=ConstructResponse)
def construct(req: ConstructRequest) -> ConstructResponse:
    if req.kind == "path":
        spec = structure.make_path_spec(req.n)
    elif req.kind == "cycle":
        spec = structure.make_cycle_spec(req.n)
    else:
        if req.m is None:
            raise UnknownPredicateError("cycle-component construction needs m")
        spec = structure.make_cycle_component_spec(req.m, req.n)
    summary = components_classify(rowgraph_oracle(build_matrix(spec)))
    return ConstructResponse(
        spec=SpecModel.from_spec(spec),
        notation=spec.notation(),
        summary=SummaryModel.from_summary(summary),
    )


@app.post("/verify", response_model=ReportModel)
def verify(req: VerifyRequest) -> ReportModel:
    report = explorer.verify(
        req.theorem_id, req.n_min, req.n_max, req.max_counterexamples
    )
    return ReportModel(
        theorem_id=report.theorem_id,
        registry_version=report.registry_version,
        range=report.range,
        checked=report.checked,
        passed=report.passed,
        counterexamples=[
            CounterexampleModel(
                case=c.case, expected=c.expected, observed=c.observed
            )
            for c in report.counterexamples
        ],
    )


@app.post("/catalog")
def catalog(req: CatalogRequest):
    rows = explorer.catalog(
        req.n_min, req.n_max, req.max_k1, req.max_k2, req.family, req.shape
    )
    if req.format == "csv":
        return PlainTextResponse(explorer.catalog_to_csv(rows))
    return [
        CatalogRowModel(
            spec=SpecModel.from_spec(row.spec),
            in_T_le2=row.in_T_le2,
            triangle_free=row.triangle_free,
            components=row.components,
            gamma=list(row.gamma),
        )
        for row in rows
    ]


@app.post("/export", response_class=PlainTextResponse)
def export(req: ExportRequest) -> str:
    spec = req.spec.to_spec()
    graph, _ = _rowgraph(spec, "cross")
    if req.format == "dot":
        return graph_to_dot(graph)
    return graph_to_json_str(graph)


@app.post("/search/two-cycle-lengths")
def search_two_cycle_lengths(req: SearchRequest) -> list[dict]:
    return explorer.search_two_cycle_lengths(req.n_min, req.n_max)
