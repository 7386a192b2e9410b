"""(0,1)-Toeplitz matrices with zero diagonal and no symmetric 1-pair.

A matrix in the family is written ``T_n<alpha;beta>``: it has order ``n``,
ones on the subdiagonals listed in ``alpha`` and on the superdiagonals listed
in ``beta``.  ``alpha`` and ``beta`` are disjoint subsets of ``{1,...,n-1}``
and at most one of them may be empty.  All indices on the public surface are
1-based.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import (
    BothEmptyError,
    DuplicateError,
    IndexOutOfRangeError,
    OutOfRangeError,
    OverlapError,
)


@dataclass(frozen=True, order=True)
class ToeplitzSpec:
    """The defining tuple (n, alpha, beta) of one matrix in the family."""

    n: int
    alpha: tuple[int, ...]
    beta: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise OutOfRangeError(f"order must be at least 2, got {self.n}")
        for name, side in (("alpha", self.alpha), ("beta", self.beta)):
            for x in side:
                if not 1 <= x <= self.n - 1:
                    raise OutOfRangeError(
                        f"{name} element {x} outside [1, {self.n - 1}]"
                    )
            if any(a >= b for a, b in zip(side, side[1:])):
                raise DuplicateError(f"{name} must be strictly increasing: {side}")
        common = set(self.alpha) & set(self.beta)
        if common:
            raise OverlapError(f"alpha and beta share {sorted(common)}")
        if not self.alpha and not self.beta:
            raise BothEmptyError("alpha and beta may not both be empty")

    @property
    def k1(self) -> int:
        return len(self.alpha)

    @property
    def k2(self) -> int:
        return len(self.beta)

    def notation(self) -> str:
        """Render in the angle-bracket notation, e.g. ``T_6⟨1,3;2,5⟩``."""
        a = ",".join(map(str, self.alpha)) or "∅"
        b = ",".join(map(str, self.beta)) or "∅"
        return f"T_{self.n}⟨{a};{b}⟩"

    def to_json(self) -> dict:
        return {"n": self.n, "alpha": list(self.alpha), "beta": list(self.beta)}


def parse_spec(n: int, alpha, beta) -> ToeplitzSpec:
    """Validate raw input and return the canonical (sorted) spec.

    Input sequences may be unsorted; duplicates, out-of-range elements,
    overlapping sides and the empty/empty case are rejected.
    """
    alpha = [int(x) for x in alpha]
    beta = [int(x) for x in beta]
    if len(set(alpha)) != len(alpha):
        raise DuplicateError(f"alpha has repeated elements: {alpha}")
    if len(set(beta)) != len(beta):
        raise DuplicateError(f"beta has repeated elements: {beta}")
    return ToeplitzSpec(int(n), tuple(sorted(alpha)), tuple(sorted(beta)))


def spec_to_json_str(spec: ToeplitzSpec) -> str:
    """Canonical JSON form, e.g. ``{"n":6,"alpha":[1,3],"beta":[2,5]}``."""
    return json.dumps(spec.to_json(), separators=(",", ":"))


def spec_from_json(data) -> ToeplitzSpec:
    if isinstance(data, str):
        data = json.loads(data)
    return parse_spec(data["n"], data.get("alpha", []), data.get("beta", []))


@dataclass(frozen=True, eq=False)
class BooleanMatrix:
    """Dense (0,1)-matrix of a given order, constant along every diagonal."""

    order: int
    bits: np.ndarray  # shape (order, order), dtype uint8

    def __post_init__(self) -> None:
        bits = np.asarray(self.bits, dtype=np.uint8)
        if bits.shape != (self.order, self.order):
            raise OutOfRangeError(f"expected a {self.order}x{self.order} matrix")
        if not np.isin(bits, (0, 1)).all():
            raise OutOfRangeError("entries must be 0 or 1")
        if bits.trace() != 0:
            raise OutOfRangeError("main diagonal must be zero")
        for off in range(1, self.order):
            if len(set(np.diagonal(bits, off))) > 1 or len(set(np.diagonal(bits, -off))) > 1:
                raise OutOfRangeError(f"diagonal {off} is not constant")
        bits.flags.writeable = False
        object.__setattr__(self, "bits", bits)

    def entry(self, i: int, j: int) -> int:
        if not (1 <= i <= self.order and 1 <= j <= self.order):
            raise IndexOutOfRangeError(f"entry ({i},{j}) outside order {self.order}")
        return int(self.bits[i - 1, j - 1])

    def __eq__(self, other) -> bool:
        if not isinstance(other, BooleanMatrix):
            return NotImplemented
        return self.order == other.order and np.array_equal(self.bits, other.bits)


def build_matrix(spec: ToeplitzSpec) -> BooleanMatrix:
    """Materialise the matrix: entry (i,j)=1 iff i-j in alpha or j-i in beta."""
    n = spec.n
    bits = np.zeros((n, n), dtype=np.uint8)
    for off in spec.alpha:
        idx = np.arange(n - off)
        bits[idx + off, idx] = 1
    for off in spec.beta:
        idx = np.arange(n - off)
        bits[idx, idx + off] = 1
    return BooleanMatrix(n, bits)


def matrix_to_lines(matrix: BooleanMatrix) -> list[str]:
    """Text dump: one line of '0'/'1' characters per row."""
    return ["".join(str(int(b)) for b in row) for row in matrix.bits]


def matrix_from_lines(lines) -> BooleanMatrix:
    lines = list(lines)
    n = len(lines)
    if n == 0 or any(len(line) != n for line in lines):
        raise OutOfRangeError("expected n lines of n characters")
    if any(set(line) - {"0", "1"} for line in lines):
        raise OutOfRangeError("lines may contain only '0' and '1'")
    bits = np.array([[int(c) for c in line] for line in lines], dtype=np.uint8)
    return BooleanMatrix(n, bits)


def row_sum(spec: ToeplitzSpec, ell: int) -> int:
    """Number of ones in row ``ell``: offsets below the diagonal need
    ``i <= ell-1``, offsets above need ``j <= n-ell``."""
    if not 1 <= ell <= spec.n:
        raise IndexOutOfRangeError(f"row {ell} outside [1, {spec.n}]")
    return sum(1 for i in spec.alpha if i <= ell - 1) + sum(
        1 for j in spec.beta if j <= spec.n - ell
    )


def col_sum(spec: ToeplitzSpec, ell: int) -> int:
    """Number of ones in column ``ell``."""
    if not 1 <= ell <= spec.n:
        raise IndexOutOfRangeError(f"column {ell} outside [1, {spec.n}]")
    return sum(1 for i in spec.alpha if i <= spec.n - ell) + sum(
        1 for j in spec.beta if j <= ell - 1
    )


def max_row_sum(spec: ToeplitzSpec) -> int:
    return max(row_sum(spec, ell) for ell in range(1, spec.n + 1))


def in_bounded_family(spec: ToeplitzSpec) -> bool:
    """Arithmetic test for membership in the max-row-sum-at-most-2 family.

    With both sides nonempty the characterisation is: each side has at most
    two elements, and a two-element side forces the large cross sum to reach
    the order (``i1+j2 >= n`` when ``|beta|=2``, ``i2+j1 >= n`` when
    ``|alpha|=2``).  With one side empty the other just needs at most two
    elements.
    """
    k1, k2 = spec.k1, spec.k2
    if k1 > 2 or k2 > 2:
        return False
    if k1 == 0 or k2 == 0:
        return True
    if k2 == 2 and spec.alpha[0] + spec.beta[1] < spec.n:
        return False
    if k1 == 2 and spec.alpha[1] + spec.beta[0] < spec.n:
        return False
    return True


def normalize(spec: ToeplitzSpec) -> tuple[ToeplitzSpec, bool]:
    """Swap the two sides when ``min(alpha) > min(beta)``.

    Reflecting the vertex set by ``v -> n+1-v`` turns the row graph of the
    swapped matrix into the row graph of the original, so predicates that
    assume ``i1 < j1`` may be applied after this swap.  Specs with one empty
    side are returned unchanged.
    """
    if not spec.alpha or not spec.beta:
        return spec, False
    if spec.alpha[0] > spec.beta[0]:
        return ToeplitzSpec(spec.n, spec.beta, spec.alpha), True
    return spec, False


def _successors(spec: ToeplitzSpec, u: int) -> list[int]:
    # arcs of the digraph: u -> u-i for i in alpha, u -> u+j for j in beta
    n = spec.n
    out = [u - i for i in spec.alpha if u - i >= 1]
    out.extend(u + j for j in spec.beta if u + j <= n)
    return out


def is_digraph_acyclic(spec: ToeplitzSpec) -> bool:
    """Depth-first search for a directed cycle in the digraph of the matrix."""
    n = spec.n
    color = [0] * (n + 1)  # 0 unseen, 1 on stack, 2 finished
    for root in range(1, n + 1):
        if color[root]:
            continue
        stack = [(root, iter(_successors(spec, root)))]
        color[root] = 1
        while stack:
            u, it = stack[-1]
            advanced = False
            for v in it:
                if color[v] == 1:
                    return False
                if color[v] == 0:
                    color[v] = 1
                    stack.append((v, iter(_successors(spec, v))))
                    advanced = True
                    break
            if not advanced:
                color[u] = 2
                stack.pop()
    return True


def digraph_cycle_lengths(spec: ToeplitzSpec) -> frozenset[int]:
    """Directed-cycle lengths guaranteed by pairs (i,j) with i+j <= n.

    Each pair with ``i`` below and ``j`` above the diagonal yields a directed
    cycle of length ``(i+j)/gcd(i,j)``.
    """
    return frozenset(
        (i + j) // gcd(i, j)
        for i in spec.alpha
        for j in spec.beta
        if i + j <= spec.n
    )
