"""Executable structure theorems for Toeplitz row graphs.

Each function here turns one structural statement into a predicate, a
witness generator or a construction.  Hypotheses are enforced as hard
preconditions (raising :class:`PreconditionViolatedError` and friends), so
every function is total on its declared domain; the explorer module sweeps
these predicates against the brute-force oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, gcd

from .core import (
    ToeplitzSpec,
    build_matrix,
    in_bounded_family,
)
from .errors import (
    InvalidRangeError,
    NotAWalkError,
    OutOfRangeError,
    PreconditionViolatedError,
    TooSmallError,
    UnsupportedError,
)
from .rowgraph import (
    ComponentKind,
    Graph,
    StructureSummary,
    _difference_graph,
    components_classify,
    rowgraph_oracle,
    symmetric_toeplitz_graph,
)


@dataclass(frozen=True)
class TrianglePrediction:
    """Outcome of the two-by-two triangle criterion."""

    has_triangle: bool
    condition: str | None  # one of "i".."v"
    witness: tuple[int, int, int] | None


@dataclass(frozen=True)
class CycleVerdict:
    """Cycle existence verdict for shapes with one two-element side and one
    singleton side."""

    exists: bool
    predicted_length: int | None
    d: int
    r: int
    mirrored: bool  # True when the singleton side is alpha


@dataclass(frozen=True)
class ShiftedWalk:
    vertices: tuple[int, ...]
    component_guaranteed: bool


@dataclass(frozen=True)
class ModClass:
    """One residue class of a difference graph whose offsets share a gcd."""

    residue: int
    vertices: tuple[int, ...]
    quotient_order: int
    quotient_gamma: tuple[int, ...]
    mapping: tuple[tuple[int, int], ...]  # (vertex, image) pairs


@dataclass(frozen=True)
class BoundaryStructure:
    gamma: tuple[int, int]
    cycle_count: int
    cycle_length: int


def triangle_predicate(spec: ToeplitzSpec) -> TrianglePrediction:
    """Decide triangle existence for normalised two-by-two specs that satisfy
    the bounded-family cross-sum hypothesis, and name a witness triple.

    The five conditions are checked in order; the witness of the first match
    is reported.
    """
    if spec.k1 != 2 or spec.k2 != 2:
        raise PreconditionViolatedError("both sides must have two elements")
    i1, i2 = spec.alpha
    j1, j2 = spec.beta
    n = spec.n
    if i1 > j1:
        raise PreconditionViolatedError("spec must be normalised (i1 < j1)")
    if i1 + j2 < n or i2 + j1 < n:
        raise PreconditionViolatedError(
            "hypothesis requires i1+j2 >= n and i2+j1 >= n"
        )
    # Case (v) walks a beta-difference step then an alpha-difference step and
    # closes with the i1+j1 jump.  Starting at vertex 1 the middle edge needs
    # i1 <= j2-j1; shifting the base to u = max(1, i1-(j2-j1)+1) keeps all
    # three edges valid whenever (v) holds.
    u = max(1, i1 - (j2 - j1) + 1)
    cases: list[tuple[str, bool, tuple[int, int, int]]] = [
        ("i", 2 * i2 == 3 * i1 + j1 and n > 2 * i1 + j1,
         (1 + i1, 1 + i2, 1 + 2 * i2 - i1)),
        ("ii", 2 * j2 == i1 + 3 * j1 and n > i1 + 2 * j1,
         (1, 1 + j2 - j1, 1 + 2 * j2 - 2 * j1)),
        ("iii", i2 == 3 * i1 + 2 * j1,
         (1 + i1, 1 + 2 * i1 + j1, 1 + 3 * i1 + 2 * j1)),
        ("iv", j2 == 2 * i1 + 3 * j1,
         (1, 1 + i1 + j1, 1 + 2 * i1 + 2 * j1)),
        ("v", i2 + j2 == 2 * (i1 + j1),
         (u, u + j2 - j1, u + i1 + j1)),
    ]
    for label, holds, witness in cases:
        if holds:
            return TrianglePrediction(True, label, tuple(sorted(witness)))
    return TrianglePrediction(False, None, None)


def _check_walk(graph: Graph, walk, closed: bool) -> None:
    walk = tuple(walk)
    if len(set(walk)) != len(walk):
        raise NotAWalkError("walk repeats a vertex")
    if closed and len(walk) < 3:
        raise NotAWalkError("a cycle needs at least three vertices")
    if not closed and len(walk) < 2:
        raise NotAWalkError("a path needs at least two vertices")
    if any(not 1 <= v <= graph.n for v in walk):
        raise NotAWalkError(f"vertex outside [1, {graph.n}]")
    edges = set(graph.edges)
    pairs = list(zip(walk, walk[1:]))
    if closed:
        pairs.append((walk[-1], walk[0]))
    for u, v in pairs:
        if (min(u, v), max(u, v)) not in edges:
            raise NotAWalkError(f"{u} and {v} are not adjacent")


def shift_walk(spec: ToeplitzSpec, walk, closed: bool = False) -> ShiftedWalk | None:
    """Slide a path or cycle of the row graph down by one vertex.

    Inside the bounded family (both sides nonempty), decrementing every
    vertex of a walk that avoids ``{1, 1+i1}`` yields another walk of the
    same kind.  Returns None when a forbidden vertex occurs.  For open
    walks, ``component_guaranteed`` reports whether the endpoints also avoid
    the four boundary vertices that could let the shifted path grow; shifted
    cycles are always whole components here because degrees stay at most 2.
    """
    if not (in_bounded_family(spec) and spec.alpha and spec.beta):
        raise PreconditionViolatedError(
            "shift rule needs both sides nonempty inside the bounded family"
        )
    graph = rowgraph_oracle(build_matrix(spec))
    walk = tuple(int(v) for v in walk)
    _check_walk(graph, walk, closed)
    i1 = spec.alpha[0]
    if any(v in (1, 1 + i1) for v in walk):
        return None
    shifted = tuple(v - 1 for v in walk)
    if closed:
        return ShiftedWalk(shifted, True)
    n, alpha, beta = spec.n, spec.alpha, spec.beta
    boundary = {n - beta[0] + 1, n - (alpha[0] + beta[0]) + 1}
    if len(alpha) == 2:
        boundary.add(n - alpha[1] + alpha[0] + 1)
    if len(beta) == 2:
        boundary.add(n - beta[1] + 1)
    guaranteed = walk[0] not in boundary and walk[-1] not in boundary
    return ShiftedWalk(shifted, guaranteed)


def scarcity_check(summary: StructureSummary) -> bool:
    """Triangle-free row graphs never show three distinct cycle lengths or
    seven distinct path orders."""
    return (
        len(set(summary.cycle_lengths)) <= 2
        and len(set(summary.path_orders)) <= 6
    )


def make_path_spec(n: int) -> ToeplitzSpec:
    """Spec whose row graph is a single path on all n vertices (n >= 5)."""
    if n <= 4:
        raise TooSmallError(
            f"order {n} too small: every row graph of order <= 4 has an "
            "isolated vertex, so n >= 5 is required"
        )
    return ToeplitzSpec(n, (1, 2), (n - 2,))


def make_cycle_spec(n: int) -> ToeplitzSpec:
    """Spec whose row graph is a single cycle on all n vertices (n >= 5)."""
    if n <= 4:
        raise TooSmallError(
            f"order {n} too small: every row graph of order <= 4 has an "
            "isolated vertex, so n >= 5 is required"
        )
    return ToeplitzSpec(n, (1, 2), (n - 2, n - 1))


def make_cycle_component_spec(m: int, n: int) -> ToeplitzSpec:
    """Spec of order n whose row graph has a cycle component of length m.

    Valid for 4 <= m <= n except the three impossible pairs (4,4), (4,5)
    and (6,8).  The construction is a six-case table keyed on how n compares
    with 2m-4 and 2m-3, with bespoke matrices for (5,6) and (5,7).
    """
    if not 4 <= m <= n:
        raise InvalidRangeError(f"need 4 <= m <= n, got m={m}, n={n}")
    if (m, n) in {(4, 4), (4, 5), (6, 8)}:
        raise UnsupportedError(f"no construction exists for (m,n)=({m},{n})")
    if n < 2 * m - 4:
        return ToeplitzSpec(n, (n - m + 1, n - m + 2), (m - 2, n - 1))
    if n == 2 * m - 4:
        if m == 5:
            return ToeplitzSpec(6, (1, 4), (3, 5))
        return ToeplitzSpec(n, (3, 5), (2 * m - 8, 2 * m - 7))
    if n == 2 * m - 3:
        if m == 5:
            return ToeplitzSpec(7, (1, 5), (4, 6))
        return ToeplitzSpec(n, (2, 4), (2 * m - 6, 2 * m - 5))
    return ToeplitzSpec(n, (m - 2, n - 1), (n - m + 1, n - m + 2))


def kl_cycle_witness(spec: ToeplitzSpec, k: int, l: int) -> tuple[int, ...]:
    """Explicit cycle of length k+l+1 for two-by-two specs.

    Requires ``i1+j1 = k*(i2-i1) + l*(j2-j1)`` with both step counts inside
    their admissible ranges.  The witness walks l steps of size j2-j1, then
    k steps of size i2-i1, and closes with the jump i1+j1; the start vertex
    is the smallest one keeping the whole walk inside [1, n].
    """
    if spec.k1 != 2 or spec.k2 != 2:
        raise PreconditionViolatedError("both sides must have two elements")
    n = spec.n
    i1, i2 = spec.alpha
    j1, j2 = spec.beta
    s = i2 - i1
    t = j2 - j1
    if k < 1 or l < 1:
        raise PreconditionViolatedError("step counts must be positive")
    if k * s > n - 1 - i1:
        raise PreconditionViolatedError(f"k={k} exceeds (n-1-i1)/(i2-i1)")
    if l * t > n - 1 - j1:
        raise PreconditionViolatedError(f"l={l} exceeds (n-1-j1)/(j2-j1)")
    if i1 + j1 != k * s + l * t:
        raise PreconditionViolatedError("i1+j1 must equal k*(i2-i1)+l*(j2-j1)")
    p = max(1, 1 + k * s - j1)
    assert p <= min(n - (i1 + j1), n - l * t - j1)
    walk = [p + q * t for q in range(l + 1)]
    walk.extend(p + l * t + q * s for q in range(1, k + 1))
    return tuple(walk)


def mod_class_decomposition(n: int, gamma) -> list[ModClass]:
    """Split a difference graph into its residue classes modulo the gcd.

    When the offsets share a gcd d >= 2, no edge crosses residue classes and
    class i is isomorphic (via ``i + d*l -> 1 + l``) to the difference graph
    on ceil(n/d) vertices — or one fewer for the short classes — with all
    offsets divided by d.  The isomorphism is verified edge-by-edge.
    """
    gamma = sorted(set(int(g) for g in gamma))
    if not gamma or gamma[0] < 1 or gamma[-1] > n - 1:
        raise OutOfRangeError(f"gamma {gamma} outside [1, {n - 1}]")
    d = gamma[0]
    for u in gamma[1:]:
        d = gcd(d, u)
    if d < 2:
        raise PreconditionViolatedError(f"gcd of {gamma} is {d}, need >= 2")
    full = symmetric_toeplitz_graph(n, gamma)
    for u, v in full.edges:
        assert u % d == v % d, f"edge {u, v} crosses residue classes"
    r = (n - 1) % d + 1
    big = ceil(n / d)
    quotient_gamma = tuple(u // d for u in gamma)
    out = []
    for residue in range(1, d + 1):
        vertices = tuple(range(residue, n + 1, d))
        order = big if residue <= r else big - 1
        assert len(vertices) == order
        mapping = tuple((v, 1 + (v - residue) // d) for v in vertices)
        image = dict(mapping)
        induced = {
            (image[u], image[v]) for u, v in full.edges if u % d == residue % d
        }
        target = _difference_graph(order, quotient_gamma)
        assert induced == set(target.edges), (
            f"class {residue} of ST_{n}{gamma} is not the scaled graph"
        )
        out.append(ModClass(residue, vertices, order, quotient_gamma, mapping))
    return out


def cycle_verdict_two_one(spec: ToeplitzSpec) -> CycleVerdict:
    """Cycle existence for bounded specs shaped (2,1) or (1,2).

    With pair side ``{x1, x2}`` and singleton ``y``, let
    ``d = gcd(x1+y, x2-x1)`` and let r be n reduced mod d into [1, d].  A
    cycle exists iff ``x2-x1 != x1+y``, ``x2+y <= d*ceil(n/d)`` and
    ``1+x1 <= r``; its length is then ceil(n/d).  The (1,2) shape is the
    mirror image and uses the same conditions with the roles swapped.
    """
    if not in_bounded_family(spec):
        raise PreconditionViolatedError(
            f"{spec.notation()} has maximum row sum above 2"
        )
    if (spec.k1, spec.k2) == (2, 1):
        (x1, x2), y = spec.alpha, spec.beta[0]
        mirrored = False
    elif (spec.k1, spec.k2) == (1, 2):
        (x1, x2), y = spec.beta, spec.alpha[0]
        mirrored = True
    else:
        raise PreconditionViolatedError("shape must be (2,1) or (1,2)")
    d = gcd(x1 + y, x2 - x1)
    r = (spec.n - 1) % d + 1
    exists = (
        x2 - x1 != x1 + y
        and x2 + y <= d * ceil(spec.n / d)
        and 1 + x1 <= r
    )
    length = ceil(spec.n / d) if exists else None
    return CycleVerdict(exists, length, d, r, mirrored)


def boundary_family_structure(spec: ToeplitzSpec) -> BoundaryStructure:
    """Exact structure for two-by-two specs with both cross sums equal to n.

    The row graph then equals the difference graph of {h, n-h} where
    h = i1+j1, and splits into gcd(n, h) cycles of length n/gcd(n, h).  The
    degenerate case 2h = n is excluded.
    """
    if spec.k1 != 2 or spec.k2 != 2:
        raise PreconditionViolatedError("both sides must have two elements")
    i1, i2 = spec.alpha
    j1, j2 = spec.beta
    n = spec.n
    if i1 + j2 != n or i2 + j1 != n:
        raise PreconditionViolatedError("both cross sums must equal n")
    h = i1 + j1
    if 2 * h == n:
        raise PreconditionViolatedError("degenerate case 2*(i1+j1) = n")
    d = gcd(n, h)
    return BoundaryStructure(
        gamma=tuple(sorted((h, n - h))),
        cycle_count=d,
        cycle_length=n // d,
    )


def is_single_cycle(spec: ToeplitzSpec) -> bool:
    """True exactly when the row graph is one cycle through all n vertices:
    two elements on each side, both cross sums equal to n, and i1+j1 coprime
    to n."""
    if spec.k1 != 2 or spec.k2 != 2:
        return False
    i1, i2 = spec.alpha
    j1, j2 = spec.beta
    return (
        i1 + j2 == spec.n
        and i2 + j1 == spec.n
        and gcd(spec.n, i1 + j1) == 1
    )


def connected_triangle_free_check(spec: ToeplitzSpec) -> bool:
    """Whether the row graph is connected and triangle-free (decided on the
    oracle graph).  Whenever true the graph is a single path or cycle."""
    summary = components_classify(rowgraph_oracle(build_matrix(spec)))
    return len(summary.components) == 1 and summary.triangle_free
