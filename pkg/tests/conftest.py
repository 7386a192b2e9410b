"""Shared test oracles and hypothesis strategies.

The helpers here deliberately re-derive results with the dumbest possible
code (pure-python scans, exhaustive DFS) so the library's faster paths are
checked against something independent.
"""

from __future__ import annotations

from hypothesis import strategies as st

from toeprow import ToeplitzSpec


def naive_rowgraph_edges(lines: list[str]) -> set[tuple[int, int]]:
    """Column-intersection row graph straight off the matrix text dump."""
    n = len(lines)
    edges = set()
    for u in range(n):
        for v in range(u + 1, n):
            if any(lines[u][k] == "1" and lines[v][k] == "1" for k in range(n)):
                edges.add((u + 1, v + 1))
    return edges


def enumerated_directed_cycle_lengths(spec: ToeplitzSpec) -> set[int]:
    """Lengths of all simple directed cycles, by exhaustive DFS."""
    n = spec.n
    succ = {
        u: [u - i for i in spec.alpha if u - i >= 1]
        + [u + j for j in spec.beta if u + j <= n]
        for u in range(1, n + 1)
    }
    lengths: set[int] = set()

    def dfs(start: int, u: int, visited: set[int]) -> None:
        for v in succ[u]:
            if v == start:
                lengths.add(len(visited))
            elif v > start and v not in visited:
                visited.add(v)
                dfs(start, v, visited)
                visited.remove(v)

    for s in range(1, n + 1):
        dfs(s, s, {s})
    return lengths


@st.composite
def toeplitz_specs(draw, max_n: int = 12):
    n = draw(st.integers(2, max_n))
    assignment = draw(
        st.lists(st.sampled_from("nab"), min_size=n - 1, max_size=n - 1)
    )
    alpha = tuple(i + 1 for i, c in enumerate(assignment) if c == "a")
    beta = tuple(i + 1 for i, c in enumerate(assignment) if c == "b")
    if not alpha and not beta:
        pos = draw(st.integers(1, n - 1))
        if draw(st.booleans()):
            alpha = (pos,)
        else:
            beta = (pos,)
    return ToeplitzSpec(n, alpha, beta)
