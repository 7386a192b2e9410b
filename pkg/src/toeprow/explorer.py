"""Exhaustive sweeps: enumerate specs, cross-validate every structure
theorem against the brute-force oracle, and emit catalogs.

The verifier has two execution lanes.  Moderate domains (bounded-family
shapes, constructions, boundary specs) are swept spec-by-spec through the
public API.  Full-family sweeps ("every spec of order n") enumerate ternary
codes — each element of 1..n-1 is absent, a subdiagonal, or a superdiagonal
— and evaluate the matrix side in batched numpy, decoding individual specs
only where the per-spec predicate needs calling or a counterexample needs
reporting.  Reports are deterministic: same arguments, same bytes.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from math import ceil, comb, gcd
from typing import Callable, Iterator

import numpy as np

from .core import (
    ToeplitzSpec,
    build_matrix,
    col_sum,
    in_bounded_family,
    is_digraph_acyclic,
    row_sum,
)
from .errors import InvalidRangeError, UnknownTheoremError
from .rowgraph import (
    ComponentKind,
    Graph,
    components_classify,
    encode_components,
    gamma_envelope,
    has_triangle,
    rowgraph_bounded,
    rowgraph_closed_form,
    rowgraph_oracle,
    symmetric_toeplitz_graph,
)
from .structure import (
    boundary_family_structure,
    cycle_verdict_two_one,
    is_single_cycle,
    kl_cycle_witness,
    make_cycle_component_spec,
    make_cycle_spec,
    make_path_spec,
    mod_class_decomposition,
    scarcity_check,
    triangle_predicate,
)

REGISTRY_VERSION = "1"
N_CAP = 64
_CHUNK = 4096
_CATALOG_LIMIT = 200_000


# ---------------------------------------------------------------------------
# Spec enumeration


def _lex_subsets(pool: tuple[int, ...], cap: int) -> Iterator[tuple[int, ...]]:
    """All subsets of the sorted pool with at most ``cap`` elements, as
    sorted tuples in lexicographic order."""

    def rec(prefix: tuple[int, ...], start: int) -> Iterator[tuple[int, ...]]:
        yield prefix
        if len(prefix) < cap:
            for i in range(start, len(pool)):
                yield from rec(prefix + (pool[i],), i + 1)

    yield from rec((), 0)


def count_specs(n: int, max_k1: int | None = None, max_k2: int | None = None) -> int:
    """Closed-form count of valid (alpha, beta) pairs at order n."""
    cap1 = min(max_k1 if max_k1 is not None else n - 1, n - 1)
    cap2 = min(max_k2 if max_k2 is not None else n - 1, n - 1)
    total = 0
    for k1 in range(cap1 + 1):
        for k2 in range(cap2 + 1):
            total += comb(n - 1, k1) * comb(n - 1 - k1, k2)
    return total - 1  # both-empty excluded


def enumerate_specs(
    n_lo: int,
    n_hi: int,
    max_k1: int | None = None,
    max_k2: int | None = None,
    family: str = "all",
    shape: tuple[int, int] | None = None,
) -> Iterator[ToeplitzSpec]:
    """Every valid spec in the range, lexicographically by (n, alpha, beta).

    ``family`` restricts the stream: ``all``, ``bounded`` (max row sum at
    most 2), ``boundary`` (two-by-two with both cross sums equal to n), or
    ``shape`` with an explicit ``(k1, k2)`` pair.
    """
    if not 2 <= n_lo <= n_hi <= N_CAP:
        raise InvalidRangeError(f"need 2 <= n_lo <= n_hi <= {N_CAP}")
    if family not in {"all", "bounded", "boundary", "shape"}:
        raise InvalidRangeError(f"unknown family filter {family!r}")
    if family == "shape" and shape is None:
        raise InvalidRangeError("family='shape' needs a (k1, k2) pair")
    for n in range(n_lo, n_hi + 1):
        pool = tuple(range(1, n))
        cap1 = min(max_k1 if max_k1 is not None else n - 1, n - 1)
        cap2 = min(max_k2 if max_k2 is not None else n - 1, n - 1)
        if family in {"bounded", "boundary"}:
            cap1, cap2 = min(cap1, 2), min(cap2, 2)
        elif family == "shape":
            cap1, cap2 = min(cap1, shape[0]), min(cap2, shape[1])
        for alpha in _lex_subsets(pool, cap1):
            taken = set(alpha)
            rest = tuple(x for x in pool if x not in taken)
            for beta in _lex_subsets(rest, cap2):
                if not alpha and not beta:
                    continue
                if family == "shape" and (len(alpha), len(beta)) != shape:
                    continue
                spec = ToeplitzSpec(n, alpha, beta)
                if family == "bounded" and not in_bounded_family(spec):
                    continue
                if family == "boundary":
                    if spec.k1 != 2 or spec.k2 != 2:
                        continue
                    if (
                        spec.alpha[0] + spec.beta[1] != n
                        or spec.alpha[1] + spec.beta[0] != n
                    ):
                        continue
                yield spec


# ---------------------------------------------------------------------------
# Dense full-family lane


def _offsets_matrix(n: int) -> np.ndarray:
    ar = np.arange(n)
    return ar[:, None] - ar[None, :] + (n - 1)


def _family_digit_chunks(n: int, chunk: int = _CHUNK) -> Iterator[np.ndarray]:
    """Ternary codes for every spec of order n: digit e-1 is 0 (absent),
    1 (e in alpha) or 2 (e in beta).  Code 0 (both empty) is skipped."""
    total = 3 ** (n - 1)
    powers = 3 ** np.arange(n - 1, dtype=np.int64)
    for start in range(1, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        yield (idx[:, None] // powers) % 3


def _profiles(digits: np.ndarray, n: int) -> np.ndarray:
    """Per-spec diagonal profile: column n-1+o holds the entry value of
    diagonal offset o = i-j."""
    V = np.zeros((digits.shape[0], 2 * n - 1), dtype=np.float32)
    V[:, n:] = digits == 1
    V[:, n - 2 :: -1] = digits == 2
    return V


def _batch_matrices(V: np.ndarray, n: int) -> np.ndarray:
    # advanced indexing yields a transposed memory layout; matmul needs
    # contiguous input to hit the BLAS fast path
    return np.ascontiguousarray(V[:, _offsets_matrix(n)])


def _batch_adjacency(M: np.ndarray, n: int) -> np.ndarray:
    prod = M @ M.transpose(0, 2, 1)
    A = prod > 0.5
    A &= ~np.eye(n, dtype=bool)
    return A


def _batch_has_triangle(A: np.ndarray) -> np.ndarray:
    Af = A.astype(np.float32)
    sq = Af @ Af.transpose(0, 2, 1)
    return ((sq > 0.5) & A).any(axis=(1, 2))


def _decode_spec(row: np.ndarray, n: int) -> ToeplitzSpec:
    alpha = tuple(int(e) + 1 for e in np.nonzero(row == 1)[0])
    beta = tuple(int(e) + 1 for e in np.nonzero(row == 2)[0])
    return ToeplitzSpec(n, alpha, beta)


def _graph_from_bool(adj: np.ndarray, n: int) -> Graph:
    us, vs = np.nonzero(np.triu(adj, 1))
    return Graph(n, tuple((int(u) + 1, int(v) + 1) for u, v in zip(us, vs)))


def _profiles_from_specs(specs: list[ToeplitzSpec], n: int) -> np.ndarray:
    V = np.zeros((len(specs), 2 * n - 1), dtype=np.float32)
    for row, spec in enumerate(specs):
        for i in spec.alpha:
            V[row, n - 1 + i] = 1.0
        for j in spec.beta:
            V[row, n - 1 - j] = 1.0
    return V


# ---------------------------------------------------------------------------
# Reports


@dataclass(frozen=True)
class Counterexample:
    case: str
    expected: str
    observed: str


@dataclass(frozen=True)
class TheoremReport:
    theorem_id: str
    registry_version: str
    range: str
    checked: int
    passed: int
    counterexamples: tuple[Counterexample, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.passed <= self.checked:
            raise InvalidRangeError("passed must lie in [0, checked]")
        if (self.passed < self.checked) != bool(self.counterexamples):
            raise InvalidRangeError(
                "counterexamples must be nonempty exactly when passed < checked"
            )


def report_to_json(report: TheoremReport) -> dict:
    return {
        "theorem_id": report.theorem_id,
        "registry_version": report.registry_version,
        "range": report.range,
        "checked": report.checked,
        "passed": report.passed,
        "counterexamples": [
            {"case": c.case, "expected": c.expected, "observed": c.observed}
            for c in report.counterexamples
        ],
    }


def report_to_json_str(report: TheoremReport) -> str:
    return json.dumps(report_to_json(report), separators=(",", ":"))


def report_to_text(report: TheoremReport) -> str:
    lines = [
        f"theorem          : {report.theorem_id}",
        f"registry version : {report.registry_version}",
        f"range            : {report.range}",
        f"checked          : {report.checked}",
        f"passed           : {report.passed}",
    ]
    if report.counterexamples:
        missing = report.checked - report.passed
        lines.append(
            f"counterexamples  : {len(report.counterexamples)} shown"
            f" (of {missing} failing)"
        )
        for c in report.counterexamples:
            lines.append(f"  - case     : {c.case}")
            lines.append(f"    expected : {c.expected}")
            lines.append(f"    observed : {c.observed}")
    else:
        lines.append("counterexamples  : none")
    return "\n".join(lines)


@dataclass
class _Tally:
    cap: int
    checked: int = 0
    failed: int = 0
    examples: list[Counterexample] = field(default_factory=list)

    def ok(self, count: int = 1) -> None:
        self.checked += count

    def fail(self, case: str, expected: str, observed: str) -> None:
        self.checked += 1
        self.failed += 1
        if len(self.examples) < self.cap:
            self.examples.append(Counterexample(case, expected, observed))


# ---------------------------------------------------------------------------
# Theorem checkers


def _oracle_graph(spec: ToeplitzSpec) -> Graph:
    return rowgraph_oracle(build_matrix(spec))


def _check_edge_condition(lo: int, hi: int, tally: _Tally) -> None:
    for spec in enumerate_specs(lo, hi):
        want = _oracle_graph(spec)
        got = rowgraph_closed_form(spec)
        if got.edges == want.edges:
            tally.ok()
        else:
            tally.fail(
                spec.notation(),
                f"oracle edges {list(want.edges)}",
                f"closed-form edges {list(got.edges)}",
            )


def _check_row_col_symmetry(lo: int, hi: int, tally: _Tally) -> None:
    sample_stride = 101  # python-level row_sum/col_sum spot check
    seen = 0
    for n in range(lo, hi + 1):
        for digits in _family_digit_chunks(n):
            M = _batch_matrices(_profiles(digits, n), n)
            rs = M.sum(axis=2).astype(np.int64)
            cs = M.sum(axis=1).astype(np.int64)
            bad = (rs != cs[:, ::-1]).any(axis=1)
            for s in range(digits.shape[0]):
                seen += 1
                mismatch = bool(bad[s])
                if not mismatch and seen % sample_stride == 0:
                    spec = _decode_spec(digits[s], n)
                    mismatch = any(
                        row_sum(spec, ell) != col_sum(spec, n - ell + 1)
                        or row_sum(spec, ell) != rs[s, ell - 1]
                        for ell in range(1, n + 1)
                    )
                if mismatch:
                    spec = _decode_spec(digits[s], n)
                    tally.fail(
                        spec.notation(),
                        "row sums equal reversed column sums",
                        f"rows {rs[s].tolist()} cols {cs[s].tolist()}",
                    )
                else:
                    tally.ok()


def _check_star_membership(lo: int, hi: int, tally: _Tally) -> None:
    for n in range(lo, hi + 1):
        for digits in _family_digit_chunks(n):
            M = _batch_matrices(_profiles(digits, n), n)
            maxrs = M.sum(axis=2).max(axis=1).astype(np.int64)
            for s in range(digits.shape[0]):
                spec = _decode_spec(digits[s], n)
                member = in_bounded_family(spec)
                if member == (maxrs[s] <= 2):
                    tally.ok()
                else:
                    tally.fail(
                        spec.notation(),
                        f"membership test == (max row sum <= 2); max is {maxrs[s]}",
                        f"membership test returned {member}",
                    )


def _check_triangle_char(lo: int, hi: int, tally: _Tally) -> None:
    for n in range(lo, hi + 1):
        for i1 in range(1, n - 1):
            for i2 in range(i1 + 1, n):
                for j1 in range(i1 + 1, n):
                    if j1 == i2 or i2 + j1 < n:
                        continue
                    for j2 in range(j1 + 1, n):
                        if j2 == i2 or i1 + j2 < n:
                            continue
                        spec = ToeplitzSpec(n, (i1, i2), (j1, j2))
                        pred = triangle_predicate(spec)
                        graph = _oracle_graph(spec)
                        edges = set(graph.edges)
                        actual = has_triangle(graph)
                        ok = pred.has_triangle == (actual is not None)
                        if ok and pred.witness is not None:
                            a, b, c = pred.witness
                            ok = (
                                (a, b) in edges
                                and (b, c) in edges
                                and (a, c) in edges
                            )
                        if ok:
                            tally.ok()
                        else:
                            tally.fail(
                                spec.notation(),
                                f"oracle triangle {actual}",
                                f"predicted {pred.has_triangle}"
                                f" ({pred.condition}, witness {pred.witness})",
                            )


def _check_scarcity(lo: int, hi: int, tally: _Tally) -> None:
    """Triangle-free row graphs: max row sum at most 2, at most two distinct
    cycle lengths, at most six distinct path orders."""
    for n in range(lo, hi + 1):
        for digits in _family_digit_chunks(n):
            M = _batch_matrices(_profiles(digits, n), n)
            A = _batch_adjacency(M, n)
            tri = _batch_has_triangle(A)
            maxrs = M.sum(axis=2).max(axis=1).astype(np.int64)
            free = np.nonzero(~tri)[0]
            tally.ok(int(tri.sum()))
            for s in free:
                spec = _decode_spec(digits[s], n)
                if maxrs[s] > 2:
                    tally.fail(
                        spec.notation(),
                        "triangle-free row graph implies max row sum <= 2",
                        f"max row sum {maxrs[s]}",
                    )
                    continue
                summary = components_classify(_graph_from_bool(A[s], n))
                if scarcity_check(summary):
                    tally.ok()
                else:
                    tally.fail(
                        spec.notation(),
                        "<= 2 distinct cycle lengths and <= 6 distinct path orders",
                        f"cycles {summary.cycle_lengths}"
                        f" paths {summary.path_orders}",
                    )


def _check_small_isolated(lo: int, hi: int, tally: _Tally) -> None:
    hi = min(hi, 4)
    if lo > hi:
        return
    for spec in enumerate_specs(lo, hi):
        summary = components_classify(_oracle_graph(spec))
        if any(c.kind is ComponentKind.ISOLATED for c in summary.components):
            tally.ok()
        else:
            tally.fail(
                spec.notation(),
                "an isolated vertex",
                encode_components(summary),
            )


def _check_path_cycle_constructions(lo: int, hi: int, tally: _Tally) -> None:
    lo = max(lo, 5)
    for n in range(lo, hi + 1):
        for builder, kind in ((make_path_spec, ComponentKind.PATH),
                              (make_cycle_spec, ComponentKind.CYCLE)):
            spec = builder(n)
            summary = components_classify(_oracle_graph(spec))
            comps = summary.components
            if len(comps) == 1 and comps[0].kind is kind and comps[0].size == n:
                tally.ok()
            else:
                tally.fail(
                    spec.notation(),
                    f"single {kind.value}:{n}",
                    encode_components(summary),
                )


def _check_bounded_edge_rule(lo: int, hi: int, tally: _Tally) -> None:
    for spec in enumerate_specs(lo, hi, family="bounded"):
        want = _oracle_graph(spec)
        got = rowgraph_bounded(spec)
        if got.edges == want.edges:
            tally.ok()
        else:
            tally.fail(
                spec.notation(),
                f"oracle edges {list(want.edges)}",
                f"bounded-rule edges {list(got.edges)}",
            )


def _check_acyclic_paths(lo: int, hi: int, tally: _Tally) -> None:
    """Acyclic bounded matrices yield only isolated and path components, and
    acyclicity forces i1+j1 > n when both sides are nonempty.

    Only that direction is a theorem.  The converse is false: T_5<2;4> has
    i1+j1 = 6 > 5 yet carries the directed cycle 1 -> 5 -> 3 -> 1.
    """
    for spec in enumerate_specs(lo, hi, family="bounded"):
        if not is_digraph_acyclic(spec):
            tally.ok()
            continue
        if spec.alpha and spec.beta and spec.alpha[0] + spec.beta[0] <= spec.n:
            tally.fail(
                spec.notation(),
                "acyclic digraph forces i1+j1 > n",
                f"i1+j1 = {spec.alpha[0] + spec.beta[0]} <= {spec.n}",
            )
            continue
        summary = components_classify(_oracle_graph(spec))
        if all(
            c.kind in (ComponentKind.ISOLATED, ComponentKind.PATH)
            for c in summary.components
        ):
            tally.ok()
        else:
            tally.fail(
                spec.notation(),
                "only Isolated and Path components",
                encode_components(summary),
            )


def _check_kl_cycle(lo: int, hi: int, tally: _Tally) -> None:
    for spec in enumerate_specs(lo, hi, family="shape", shape=(2, 2)):
        n = spec.n
        i1, i2 = spec.alpha
        j1, j2 = spec.beta
        s, t = i2 - i1, j2 - j1
        kmax = (n - 1 - i1) // s
        lmax = (n - 1 - j1) // t
        edges = None
        for k in range(1, kmax + 1):
            rem = i1 + j1 - k * s
            if rem < t or rem % t:
                continue
            l = rem // t
            if not 1 <= l <= lmax:
                continue
            walk = kl_cycle_witness(spec, k, l)
            if edges is None:
                edges = set(_oracle_graph(spec).edges)
            pairs = list(zip(walk, walk[1:])) + [(walk[0], walk[-1])]
            genuine = (
                len(walk) == k + l + 1
                and len(set(walk)) == len(walk)
                and all((min(u, v), max(u, v)) in edges for u, v in pairs)
            )
            if genuine:
                tally.ok()
            else:
                tally.fail(
                    f"{spec.notation()} k={k} l={l}",
                    f"cycle of length {k + l + 1}",
                    f"walk {list(walk)}",
                )


def _check_cycle_component_mn(lo: int, hi: int, tally: _Tally) -> None:
    lo = max(lo, 4)
    for n in range(lo, hi + 1):
        for m in range(4, n + 1):
            if (m, n) in {(4, 4), (4, 5), (6, 8)}:
                continue
            spec = make_cycle_component_spec(m, n)
            summary = components_classify(_oracle_graph(spec))
            cycles = [
                c for c in summary.components if c.kind is ComponentKind.CYCLE
            ]
            if len(cycles) == 1 and cycles[0].size == m:
                tally.ok()
            else:
                tally.fail(
                    f"(m={m}, n={n}) -> {spec.notation()}",
                    f"exactly one Cycle:{m}",
                    encode_components(summary),
                )


def _check_mod_decomposition(lo: int, hi: int, tally: _Tally) -> None:
    for n in range(lo, hi + 1):
        pool = range(1, n)
        gammas = [(u,) for u in pool if u >= 2]
        gammas += [
            (u1, u2)
            for u1 in pool
            for u2 in range(u1 + 1, n)
            if gcd(u1, u2) >= 2
        ]
        for gamma in gammas:
            classes = mod_class_decomposition(n, gamma)
            d = gamma[0]
            for u in gamma[1:]:
                d = gcd(d, u)
            graph = symmetric_toeplitz_graph(n, gamma)
            covered = sorted(v for c in classes for v in c.vertices)
            ok = covered == list(range(1, n + 1))
            ok = ok and all(u % d == v % d for u, v in graph.edges)
            for cls in classes:
                image = dict(cls.mapping)
                ok = ok and sorted(image.values()) == list(
                    range(1, cls.quotient_order + 1)
                )
                induced = {
                    tuple(sorted((image[u], image[v])))
                    for u, v in graph.edges
                    if u in image and v in image
                }
                target = {
                    (x, x + g)
                    for g in cls.quotient_gamma
                    for x in range(1, cls.quotient_order - g + 1)
                }
                ok = ok and induced == target
            if ok:
                tally.ok()
            else:
                tally.fail(
                    f"n={n} gamma={list(gamma)}",
                    "residue classes isomorphic to the scaled difference graph",
                    "mismatch in class decomposition",
                )


def _check_cycle_verdict(lo: int, hi: int, tally: _Tally) -> None:
    for shape in ((2, 1), (1, 2)):
        for spec in enumerate_specs(lo, hi, family="shape", shape=shape):
            if not in_bounded_family(spec):
                continue
            verdict = cycle_verdict_two_one(spec)
            summary = components_classify(_oracle_graph(spec))
            cycles = [
                c for c in summary.components if c.kind is ComponentKind.CYCLE
            ]
            # several cycle components may occur (e.g. T_9<1,4;5> has two
            # 3-cycles); the verdict pins the length of every one of them
            if verdict.exists:
                ok = bool(cycles) and all(
                    c.size == verdict.predicted_length for c in cycles
                )
            else:
                ok = not cycles
            if ok:
                tally.ok()
            else:
                tally.fail(
                    spec.notation(),
                    f"exists={verdict.exists}"
                    f" length={verdict.predicted_length}",
                    encode_components(summary),
                )


def _check_envelope_bound(lo: int, hi: int, tally: _Tally) -> None:
    for n in range(lo, hi + 1):
        for digits in _family_digit_chunks(n):
            M = _batch_matrices(_profiles(digits, n), n)
            A = _batch_adjacency(M, n)
            present = np.zeros((digits.shape[0], n), dtype=bool)  # col d: diff d
            for d in range(1, n):
                idx = np.arange(n - d)
                present[:, d] = A[:, idx, idx + d].any(axis=1)
            for s in range(digits.shape[0]):
                spec = _decode_spec(digits[s], n)
                env = gamma_envelope(spec)
                extra = [
                    d for d in range(1, n) if present[s, d] and d not in env
                ]
                if extra:
                    tally.fail(
                        spec.notation(),
                        f"edge differences within envelope {sorted(env)}",
                        f"differences {extra} outside the envelope",
                    )
                else:
                    tally.ok()


def _boundary_specs(lo: int, hi: int) -> Iterator[ToeplitzSpec]:
    for spec in enumerate_specs(lo, hi, family="boundary"):
        if 2 * (spec.alpha[0] + spec.beta[0]) != spec.n:
            yield spec


def _check_boundary_exact(lo: int, hi: int, tally: _Tally) -> None:
    for spec in _boundary_specs(lo, hi):
        pred = boundary_family_structure(spec)
        want = symmetric_toeplitz_graph(spec.n, pred.gamma)
        got = _oracle_graph(spec)
        if got.edges == want.edges:
            tally.ok()
        else:
            tally.fail(
                spec.notation(),
                f"row graph equals difference graph of {list(pred.gamma)}",
                "edge sets differ",
            )


def _check_d_cycles(lo: int, hi: int, tally: _Tally) -> None:
    for spec in _boundary_specs(lo, hi):
        pred = boundary_family_structure(spec)
        summary = components_classify(_oracle_graph(spec))
        comps = summary.components
        ok = len(comps) == pred.cycle_count and all(
            c.kind is ComponentKind.CYCLE and c.size == pred.cycle_length
            for c in comps
        )
        if ok:
            tally.ok()
        else:
            tally.fail(
                spec.notation(),
                f"{pred.cycle_count} cycles of length {pred.cycle_length}",
                encode_components(summary),
            )


def _is_single_cycle_graph(adj: np.ndarray, n: int) -> bool:
    if not (adj.sum(axis=1) == 2).all():
        return False
    summary = components_classify(_graph_from_bool(adj, n))
    return len(summary.components) == 1 and (
        summary.components[0].kind is ComponentKind.CYCLE
    )


def _check_single_cycle(lo: int, hi: int, tally: _Tally) -> None:
    """Predicate vs. oracle for the one-big-cycle characterisation.

    Orders up to 12 are swept over the full family; beyond that the sweep
    covers every spec with at most two elements per side (a single-cycle row
    graph forces that shape, since it is connected and triangle-free).
    """
    full_hi = min(hi, 12)
    for n in range(lo, full_hi + 1):
        for digits in _family_digit_chunks(n):
            M = _batch_matrices(_profiles(digits, n), n)
            A = _batch_adjacency(M, n)
            deg2 = (A.sum(axis=2) == 2).all(axis=1)
            for s in range(digits.shape[0]):
                spec = _decode_spec(digits[s], n)
                pred = is_single_cycle(spec)
                if not pred and not deg2[s]:
                    tally.ok()
                    continue
                actual = _is_single_cycle_graph(A[s], n)
                if pred == actual:
                    tally.ok()
                else:
                    tally.fail(
                        spec.notation(),
                        f"single cycle through all vertices: {actual}",
                        f"predicate says {pred}",
                    )
    for n in range(max(lo, 13), hi + 1):
        specs = list(enumerate_specs(n, n, max_k1=2, max_k2=2))
        for start in range(0, len(specs), _CHUNK):
            chunk = specs[start : start + _CHUNK]
            A = _batch_adjacency(
                _batch_matrices(_profiles_from_specs(chunk, n), n), n
            )
            deg2 = (A.sum(axis=2) == 2).all(axis=1)
            for s, spec in enumerate(chunk):
                pred = is_single_cycle(spec)
                if not pred and not deg2[s]:
                    tally.ok()
                    continue
                actual = _is_single_cycle_graph(A[s], n)
                if pred == actual:
                    tally.ok()
                else:
                    tally.fail(
                        spec.notation(),
                        f"single cycle through all vertices: {actual}",
                        f"predicate says {pred}",
                    )


def _greedy_difference_cycle(order: int, a: int, b: int) -> list[int]:
    """Cycle of length a+b in the difference graph of {a, b} on 1..order,
    for coprime a < b with a+b <= order: walk +a while it fits, else -b."""
    v = 1
    seq = [1]
    plus, minus = b, a
    while plus or minus:
        if plus and v + a <= order:
            v += a
            plus -= 1
        else:
            v -= b
            minus -= 1
        seq.append(v)
    assert seq[-1] == 1
    return seq[:-1]


def _check_symmetric_acyclic(lo: int, hi: int, tally: _Tally) -> None:
    """Difference graphs of a coprime pair with sum above the order are
    forests; pairs with sum at most the order contain a cycle of length
    (u1+u2)/gcd, exhibited by an explicit witness."""
    for n in range(lo, hi + 1):
        for u1 in range(1, n - 1):
            for u2 in range(u1 + 1, n):
                d = gcd(u1, u2)
                if u1 + u2 > n:
                    if d != 1:
                        continue
                    graph = symmetric_toeplitz_graph(n, (u1, u2))
                    summary = components_classify(graph)
                    forest = len(graph.edges) == n - len(summary.components)
                    if forest:
                        tally.ok()
                    else:
                        tally.fail(
                            f"ST_{n}({u1},{u2})",
                            "acyclic (a forest)",
                            f"{len(graph.edges)} edges,"
                            f" {len(summary.components)} components",
                        )
                    continue
                length = (u1 + u2) // d
                reduced = _greedy_difference_cycle(
                    ceil(n / d), u1 // d, u2 // d
                )
                walk = [1 + d * (w - 1) for w in reduced]
                pairs = list(zip(walk, walk[1:])) + [(walk[0], walk[-1])]
                genuine = (
                    len(walk) == length
                    and len(set(walk)) == length
                    and all(abs(u - v) in (u1, u2) for u, v in pairs)
                    and all(1 <= v <= n for v in walk)
                )
                if genuine:
                    tally.ok()
                else:
                    tally.fail(
                        f"ST_{n}({u1},{u2})",
                        f"cycle of length {length}",
                        f"walk {walk}",
                    )


# ---------------------------------------------------------------------------
# Registry


@dataclass(frozen=True)
class TheoremInfo:
    theorem_id: str
    description: str
    default_lo: int
    default_hi: int
    domain: str
    checker: Callable[[int, int, _Tally], None]


def _info(tid, desc, lo, hi, domain, checker):
    return TheoremInfo(tid, desc, lo, hi, domain, checker)


REGISTRY: dict[str, TheoremInfo] = {
    info.theorem_id: info
    for info in (
        _info(
            "edge_condition",
            "closed-form adjacency rule equals the column-intersection oracle",
            2, 10, "all specs, n={lo}..{hi}", _check_edge_condition,
        ),
        _info(
            "row_col_symmetry",
            "row sum l equals column sum n-l+1 on every matrix",
            2, 12, "all specs, n={lo}..{hi}", _check_row_col_symmetry,
        ),
        _info(
            "star_membership",
            "arithmetic membership test agrees with max row sum <= 2",
            2, 12, "all specs, n={lo}..{hi}", _check_star_membership,
        ),
        _info(
            "triangle_char",
            "five-case triangle criterion agrees with the oracle and its "
            "witnesses are genuine triangles",
            2, 25,
            "two-by-two specs with i1<j1, i1+j2>=n, i2+j1>=n, n={lo}..{hi}",
            _check_triangle_char,
        ),
        _info(
            "scarcity",
            "triangle-free row graphs have max row sum <= 2, at most two "
            "distinct cycle lengths and at most six distinct path orders",
            2, 14, "all specs, n={lo}..{hi}", _check_scarcity,
        ),
        _info(
            "small_isolated",
            "row graphs of order at most 4 have an isolated vertex",
            2, 4, "all specs, n={lo}..{hi} (clamped to 4)", _check_small_isolated,
        ),
        _info(
            "path_cycle_constructions",
            "path and cycle constructions give one full-order component",
            5, 50, "n={lo}..{hi} (from 5)", _check_path_cycle_constructions,
        ),
        _info(
            "bounded_edge_rule",
            "three-interval adjacency rule equals the oracle on the bounded "
            "family",
            2, 14, "bounded-family specs, n={lo}..{hi}", _check_bounded_edge_rule,
        ),
        _info(
            "acyclic_paths",
            "acyclic bounded matrices give only isolated and path "
            "components, and acyclicity forces i1+j1 > n",
            2, 14, "bounded-family specs, n={lo}..{hi}", _check_acyclic_paths,
        ),
        _info(
            "kl_cycle",
            "step-count witnesses are genuine cycles of length k+l+1",
            2, 14,
            "two-by-two specs and all admissible (k,l), n={lo}..{hi}",
            _check_kl_cycle,
        ),
        _info(
            "cycle_component_mn",
            "constructed specs contain exactly one cycle component of the "
            "requested length",
            4, 20,
            "4 <= m <= n <= {hi} minus the three impossible pairs",
            _check_cycle_component_mn,
        ),
        _info(
            "mod_decomposition",
            "difference graphs with a common offset gcd split into residue "
            "classes isomorphic to the scaled graph",
            2, 20,
            "offset sets of size 1..2 with gcd >= 2, n={lo}..{hi}",
            _check_mod_decomposition,
        ),
        _info(
            "cycle_verdict",
            "cycle verdict for (2,1)/(1,2) shapes matches oracle existence "
            "and length",
            2, 30,
            "bounded (2,1) and (1,2) specs, n={lo}..{hi}", _check_cycle_verdict,
        ),
        _info(
            "envelope_bound",
            "every row-graph edge difference lies in the envelope set",
            2, 12, "all specs, n={lo}..{hi}", _check_envelope_bound,
        ),
        _info(
            "boundary_exact",
            "boundary specs have row graph equal to the two-offset "
            "difference graph",
            2, 30,
            "two-by-two specs with both cross sums n, 2(i1+j1) != n, "
            "n={lo}..{hi}",
            _check_boundary_exact,
        ),
        _info(
            "single_cycle",
            "one-big-cycle predicate agrees with the classifier",
            2, 30,
            "all specs for n<=12, all specs with sides of size <= 2 for "
            "n=13..{hi}",
            _check_single_cycle,
        ),
        _info(
            "d_cycles",
            "boundary specs split into gcd(n, i1+j1) cycles of equal length",
            2, 30,
            "two-by-two specs with both cross sums n, 2(i1+j1) != n, "
            "n={lo}..{hi}",
            _check_d_cycles,
        ),
        _info(
            "symmetric_acyclic",
            "two-offset difference graphs: coprime sum above n is acyclic, "
            "sum at most n contains the predicted cycle",
            2, 20, "pairs u1 < u2 <= n-1, n={lo}..{hi}", _check_symmetric_acyclic,
        ),
    )
}


def list_theorems() -> list[dict]:
    return [
        {
            "theorem_id": info.theorem_id,
            "description": info.description,
            "default_n_min": info.default_lo,
            "default_n_max": info.default_hi,
        }
        for info in REGISTRY.values()
    ]


def verify(
    theorem_id: str,
    n_lo: int | None = None,
    n_hi: int | None = None,
    max_counterexamples: int = 10,
) -> TheoremReport:
    """Sweep one registered theorem over its precondition domain."""
    info = REGISTRY.get(theorem_id)
    if info is None:
        raise UnknownTheoremError(
            f"unknown theorem {theorem_id!r}; known: {sorted(REGISTRY)}"
        )
    lo = info.default_lo if n_lo is None else int(n_lo)
    hi = info.default_hi if n_hi is None else int(n_hi)
    if not 2 <= lo <= hi <= N_CAP:
        raise InvalidRangeError(f"need 2 <= n_lo <= n_hi <= {N_CAP}")
    cap = max(1, int(max_counterexamples))
    tally = _Tally(cap=cap)
    info.checker(lo, hi, tally)
    return TheoremReport(
        theorem_id=theorem_id,
        registry_version=REGISTRY_VERSION,
        range=info.domain.format(lo=lo, hi=hi),
        checked=tally.checked,
        passed=tally.checked - tally.failed,
        counterexamples=tuple(tally.examples),
    )


# ---------------------------------------------------------------------------
# Catalog


@dataclass(frozen=True)
class CatalogRow:
    spec: ToeplitzSpec
    in_T_le2: bool
    triangle_free: bool
    components: str
    gamma: tuple[int, ...]


def catalog(
    n_lo: int,
    n_hi: int,
    max_k1: int | None = None,
    max_k2: int | None = None,
    family: str = "all",
    shape: tuple[int, int] | None = None,
) -> Iterator[CatalogRow]:
    """One classification row per enumerated spec, in enumeration order."""
    if family == "all":
        total = sum(
            count_specs(n, max_k1, max_k2) for n in range(n_lo, n_hi + 1)
        )
        if total > _CATALOG_LIMIT:
            raise InvalidRangeError(
                f"catalog of ~{total} specs exceeds the {_CATALOG_LIMIT} row "
                "limit; narrow the order range or cap the side sizes"
            )
    for spec in enumerate_specs(n_lo, n_hi, max_k1, max_k2, family, shape):
        summary = components_classify(_oracle_graph(spec))
        yield CatalogRow(
            spec=spec,
            in_T_le2=in_bounded_family(spec),
            triangle_free=summary.triangle_free,
            components=encode_components(summary),
            gamma=tuple(sorted(gamma_envelope(spec))),
        )


def catalog_to_csv(rows) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(
        ["n", "alpha", "beta", "in_T_le2", "triangle_free", "components", "gamma"]
    )
    for row in rows:
        writer.writerow(
            [
                row.spec.n,
                " ".join(map(str, row.spec.alpha)),
                " ".join(map(str, row.spec.beta)),
                "true" if row.in_T_le2 else "false",
                "true" if row.triangle_free else "false",
                row.components,
                " ".join(map(str, row.gamma)),
            ]
        )
    return out.getvalue()


def catalog_row_to_json(row: CatalogRow) -> dict:
    return {
        "spec": row.spec.to_json(),
        "in_T_le2": row.in_T_le2,
        "triangle_free": row.triangle_free,
        "components": row.components,
        "gamma": list(row.gamma),
    }


def search_two_cycle_lengths(n_lo: int, n_hi: int) -> list[dict]:
    """Hunt for a triangle-free row graph showing two distinct cycle lengths.

    No example is known; an empty result means the sweep found none either.
    """
    if not 2 <= n_lo <= n_hi <= N_CAP:
        raise InvalidRangeError(f"need 2 <= n_lo <= n_hi <= {N_CAP}")
    found = []
    for n in range(n_lo, n_hi + 1):
        for digits in _family_digit_chunks(n):
            M = _batch_matrices(_profiles(digits, n), n)
            A = _batch_adjacency(M, n)
            tri = _batch_has_triangle(A)
            for s in np.nonzero(~tri)[0]:
                summary = components_classify(_graph_from_bool(A[s], n))
                lengths = sorted(set(summary.cycle_lengths))
                if len(lengths) >= 2:
                    spec = _decode_spec(digits[s], n)
                    found.append(
                        {"spec": spec.to_json(), "cycle_lengths": lengths}
                    )
    return found
