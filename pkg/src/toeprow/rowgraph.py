"""Row graphs of boolean matrices and their classification.

The row graph has one vertex per matrix row; two rows are adjacent exactly
when they put a 1 into a common column.  For the Toeplitz family this module
offers three routes to the same graph:

* :func:`rowgraph_oracle` — column intersection on the materialised matrix
  (the ground truth everything else is checked against);
* :func:`rowgraph_closed_form` — the arithmetic adjacency rule driven by the
  offset sets alone;
* :func:`rowgraph_bounded` — the specialised three-case rule valid inside
  the max-row-sum-at-most-2 family.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .core import BooleanMatrix, ToeplitzSpec, build_matrix, in_bounded_family
from .errors import OutOfRangeError, PreconditionViolatedError


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..n with a canonical edge tuple."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        seen = set()
        for pair in self.edges:
            u, v = pair
            if u == v:
                raise OutOfRangeError(f"loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise OutOfRangeError(f"edge {pair} outside [1, {self.n}]")
            seen.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


class ComponentKind(str, Enum):
    ISOLATED = "Isolated"
    PATH = "Path"
    CYCLE = "Cycle"
    OTHER = "Other"


@dataclass(frozen=True)
class ComponentSummary:
    kind: ComponentKind
    size: int
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class StructureSummary:
    components: tuple[ComponentSummary, ...]
    triangle_free: bool
    cycle_lengths: tuple[int, ...]
    path_orders: tuple[int, ...]


def rowgraph_oracle(matrix: BooleanMatrix) -> Graph:
    """Ground-truth row graph: rows u,v adjacent iff they share a 1-column."""
    m = matrix.bits.astype(np.int32)
    prod = m @ m.T
    np.fill_diagonal(prod, 0)
    us, vs = np.nonzero(np.triu(prod, 1))
    return Graph(matrix.order, tuple((int(u) + 1, int(v) + 1) for u, v in zip(us, vs)))


def rowgraph_closed_form(spec: ToeplitzSpec) -> Graph:
    """Adjacency from offset arithmetic, no matrix involved.

    Vertices i < j are adjacent iff one of:
      (1) j-i is a difference of two alpha offsets i_s < i_t with i_s <= i-1;
      (2) j-i is a difference of two beta offsets j_p < j_q with j_q <= n-i;
      (3) j-i is a cross sum i_t + j_q.
    The loops below emit, for each qualifying offset pair, every vertex pair
    the corresponding condition admits.
    """
    n, alpha, beta = spec.n, spec.alpha, spec.beta
    edges = set()
    for s in range(len(alpha)):
        for t in range(s + 1, len(alpha)):
            d = alpha[t] - alpha[s]
            for i in range(alpha[s] + 1, n - d + 1):
                edges.add((i, i + d))
    for p in range(len(beta)):
        for q in range(p + 1, len(beta)):
            d = beta[q] - beta[p]
            for i in range(1, n - beta[q] + 1):
                edges.add((i, i + d))
    for it in alpha:
        for jq in beta:
            d = it + jq
            for i in range(1, n - d + 1):
                edges.add((i, i + d))
    return Graph(n, tuple(edges))


def rowgraph_bounded(spec: ToeplitzSpec) -> Graph:
    """Three-interval adjacency rule; only valid in the bounded family."""
    if not in_bounded_family(spec):
        raise PreconditionViolatedError(
            f"{spec.notation()} has maximum row sum above 2"
        )
    n, alpha, beta = spec.n, spec.alpha, spec.beta
    edges = set()
    if len(beta) == 2:
        t = beta[1] - beta[0]
        for u in range(1, n - beta[1] + 1):
            edges.add((u, u + t))
    if len(alpha) == 2:
        s = alpha[1] - alpha[0]
        for u in range(alpha[0] + 1, n - alpha[1] + alpha[0] + 1):
            edges.add((u, u + s))
    if alpha and beta:
        d = alpha[0] + beta[0]
        for u in range(1, n - d + 1):
            edges.add((u, u + d))
    return Graph(n, tuple(edges))


def has_triangle(graph: Graph) -> tuple[int, int, int] | None:
    """Some 3-clique of the graph, or None.  Deterministic: scans edges in
    canonical order and picks the smallest common neighbour."""
    adj = graph.adjacency()
    for u, v in graph.edges:
        common = adj[u] & adj[v]
        if common:
            return tuple(sorted((u, v, min(common))))
    return None


def components_classify(graph: Graph) -> StructureSummary:
    """Partition into connected components and label each one.

    A component is Isolated (one vertex), a Path (>= 2 vertices, one fewer
    edge, maximum degree two), a Cycle (>= 3 vertices, equally many edges,
    all degrees two), or Other.
    """
    adj = graph.adjacency()
    seen: set[int] = set()
    components = []
    for start in range(1, graph.n + 1):
        if start in seen:
            continue
        queue = [start]
        seen.add(start)
        comp = []
        while queue:
            u = queue.pop()
            comp.append(u)
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        comp.sort()
        degs = [len(adj[v]) for v in comp]
        edge_count = sum(degs) // 2
        size = len(comp)
        if size == 1:
            kind = ComponentKind.ISOLATED
        elif edge_count == size - 1 and max(degs) <= 2:
            kind = ComponentKind.PATH
        elif size >= 3 and edge_count == size and all(d == 2 for d in degs):
            kind = ComponentKind.CYCLE
        else:
            kind = ComponentKind.OTHER
        components.append(ComponentSummary(kind, size, tuple(comp)))
    summary = StructureSummary(
        components=tuple(components),
        triangle_free=has_triangle(graph) is None,
        cycle_lengths=tuple(
            sorted(c.size for c in components if c.kind is ComponentKind.CYCLE)
        ),
        path_orders=tuple(
            sorted(c.size for c in components if c.kind is ComponentKind.PATH)
        ),
    )
    return summary


def encode_components(summary: StructureSummary) -> str:
    """Stable one-line encoding, e.g. ``Cycle:4+Path:4``."""
    parts = sorted((c.kind.value, c.size) for c in summary.components)
    return "+".join(f"{kind}:{size}" for kind, size in parts)


def _difference_graph(n: int, diffs) -> Graph:
    edges = []
    for d in diffs:
        if 1 <= d <= n - 1:
            edges.extend((x, x + d) for x in range(1, n - d + 1))
    return Graph(n, tuple(edges))


def symmetric_toeplitz_graph(n: int, gamma) -> Graph:
    """Graph on 1..n with an edge whenever the vertex difference lies in gamma."""
    gamma = sorted(set(int(g) for g in gamma))
    if not gamma:
        raise OutOfRangeError("gamma must be nonempty")
    if gamma[0] < 1 or gamma[-1] > n - 1:
        raise OutOfRangeError(f"gamma {gamma} outside [1, {n - 1}]")
    return _difference_graph(n, gamma)


def gamma_envelope(spec: ToeplitzSpec) -> frozenset[int]:
    """Difference set whose symmetric-Toeplitz graph contains the row graph.

    Collects within-alpha differences, within-beta differences and cross
    sums, keeping only values in [1, n-1].  Sides with fewer than two
    elements contribute no differences; cross sums need both sides nonempty.
    """
    n, alpha, beta = spec.n, spec.alpha, spec.beta
    out = set()
    for side in (alpha, beta):
        for s in range(len(side)):
            for t in range(s + 1, len(side)):
                d = side[t] - side[s]
                if d <= n - 1:
                    out.add(d)
    for i in alpha:
        for j in beta:
            if i + j <= n - 1:
                out.add(i + j)
    return frozenset(out)


def symmetric_ones_count(n: int, gamma, k: int | None = None) -> int:
    """Closed-form count of ones in the symmetric Toeplitz matrix of gamma:
    ``2*(k*n - sum(gamma))``, which is twice the edge count of its graph."""
    gamma = sorted(set(int(g) for g in gamma))
    if k is None:
        k = len(gamma)
    return 2 * (k * n - sum(gamma))


def graph_to_json(graph: Graph) -> dict:
    return {"n": graph.n, "edges": [list(e) for e in graph.edges]}


def graph_to_json_str(graph: Graph) -> str:
    return json.dumps(graph_to_json(graph), separators=(",", ":"))


def graph_from_json(data) -> Graph:
    if isinstance(data, str):
        data = json.loads(data)
    return Graph(int(data["n"]), tuple((int(u), int(v)) for u, v in data["edges"]))


def graph_to_dot(graph: Graph, name: str = "RG") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(1, graph.n + 1))
    lines.extend(f"  {u} -- {v};" for u, v in graph.edges)
    lines.append("}")
    return "\n".join(lines)
