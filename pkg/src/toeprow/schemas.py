"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

from .core import ToeplitzSpec, parse_spec
from .rowgraph import Graph, StructureSummary, encode_components


class SpecModel(BaseModel):
    n: int
    alpha: list[int] = Field(default_factory=list)
    beta: list[int] = Field(default_factory=list)

    def to_spec(self) -> ToeplitzSpec:
        return parse_spec(self.n, self.alpha, self.beta)

    @classmethod
    def from_spec(cls, spec: ToeplitzSpec) -> "SpecModel":
        return cls(n=spec.n, alpha=list(spec.alpha), beta=list(spec.beta))


class GraphModel(BaseModel):
    n: int
    edges: list[tuple[int, int]]

    @classmethod
    def from_graph(cls, graph: Graph) -> "GraphModel":
        return cls(n=graph.n, edges=[tuple(e) for e in graph.edges])


class ComponentModel(BaseModel):
    kind: str
    size: int
    vertices: list[int]


class SummaryModel(BaseModel):
    components: list[ComponentModel]
    triangle_free: bool
    cycle_lengths: list[int]
    path_orders: list[int]
    encoded: str

    @classmethod
    def from_summary(cls, summary: StructureSummary) -> "SummaryModel":
        return cls(
            components=[
                ComponentModel(
                    kind=c.kind.value, size=c.size, vertices=list(c.vertices)
                )
                for c in summary.components
            ],
            triangle_free=summary.triangle_free,
            cycle_lengths=list(summary.cycle_lengths),
            path_orders=list(summary.path_orders),
            encoded=encode_components(summary),
        )


class BuildRequest(BaseModel):
    spec: SpecModel


class BuildResponse(BaseModel):
    spec: SpecModel
    notation: str
    lines: list[str]


class RowgraphRequest(BaseModel):
    spec: SpecModel
    engine: Literal["cross", "oracle", "closed", "bounded"] = "cross"


class RowgraphResponse(BaseModel):
    graph: GraphModel
    engines: list[str]


class ClassifyRequest(BaseModel):
    spec: SpecModel


class PredictRequest(BaseModel):
    predicate: str
    spec: SpecModel


class PredictResponse(BaseModel):
    predicate: str
    spec: SpecModel
    result: dict


class ConstructRequest(BaseModel):
    kind: Literal["path", "cycle", "cycle-component"]
    n: int
    m: int | None = None


class ConstructResponse(BaseModel):
    spec: SpecModel
    notation: str
    summary: SummaryModel


class VerifyRequest(BaseModel):
    theorem_id: str
    n_min: int | None = None
    n_max: int | None = None
    max_counterexamples: int = 10


class CounterexampleModel(BaseModel):
    case: str
    expected: str
    observed: str


class ReportModel(BaseModel):
    theorem_id: str
    registry_version: str
    range: str
    checked: int
    passed: int
    counterexamples: list[CounterexampleModel]


class CatalogRequest(BaseModel):
    n_min: int
    n_max: int
    max_k1: int | None = None
    max_k2: int | None = None
    family: Literal["all", "bounded", "boundary", "shape"] = "all"
    shape: tuple[int, int] | None = None
    format: Literal["csv", "json"] = "csv"


class CatalogRowModel(BaseModel):
    spec: SpecModel
    in_T_le2: bool
    triangle_free: bool
    components: str
    gamma: list[int]


class ExportRequest(BaseModel):
    spec: SpecModel
    format: Literal["dot", "json"] = "dot"


class TheoremInfoModel(BaseModel):
    theorem_id: str
    description: str
    default_n_min: int
    default_n_max: int


class SearchRequest(BaseModel):
    n_min: int
    n_max: int


class ErrorModel(BaseModel):
    error: str
    message: str
