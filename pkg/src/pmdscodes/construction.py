"""Parity-check matrices of the (m;2) SD and PMDS array codes.

Coordinates are read row-wise: cell (row j, column i) of the r x n stripe is
coordinate ``j*n + i``.  The parity-check matrix has ``m*r`` local rows (an
m-row Vandermonde block per stripe row) followed by two global rows.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass
from typing import Any, Sequence

from .linalg import Matrix


class Variant(str, enum.Enum):
    SD = "sd"
    PMDS = "pmds"


class InvalidParameters(ValueError):
    def __init__(self, problems: Sequence[str]):
        super().__init__("; ".join(problems))
        self.problems = list(problems)


@dataclass(frozen=True)
class CodeParams:
    r: int
    n: int
    m: int
    variant: Variant
    algebra: Any
    s: int = 2

    def __post_init__(self):
        object.__setattr__(self, "variant", Variant(self.variant))

    @property
    def N(self) -> int:
        """Row stride of the PMDS global row: (m+1)(n-m-1) + 1."""
        return (self.m + 1) * (self.n - self.m - 1) + 1

    @property
    def length(self) -> int:
        return self.r * self.n

    @property
    def redundancy(self) -> int:
        return self.m * self.r + self.s

    @property
    def dimension(self) -> int:
        return self.r * (self.n - self.m) - self.s

    @property
    def order_bound(self) -> int:
        """Largest admissible r*n (SD) or r*N (PMDS) for the algebra."""
        order = self.algebra.order_alpha
        return order - 1 if hasattr(self.algebra, "p") else order

    def with_variant(self, variant) -> CodeParams:
        return CodeParams(self.r, self.n, self.m, Variant(variant), self.algebra, self.s)

    def describe(self) -> str:
        return "variant=%s r=%d n=%d m=%d s=%d algebra=%s" % (
            self.variant.value, self.r, self.n, self.m, self.s, self.algebra.name,
        )


def validate(params: CodeParams) -> None:
    """Raise InvalidParameters listing every violated bound."""
    problems = []
    if params.s != 2:
        problems.append("s must be 2, got %d" % params.s)
    if params.r < 1:
        problems.append("r must be >= 1, got %d" % params.r)
    if not 1 <= params.m <= params.n - 2:
        problems.append("m=%d out of range 1..n-2=%d" % (params.m, params.n - 2))
    if params.r >= 1 and params.n >= 1:
        bound = params.order_bound
        span = params.r * (params.N if params.variant is Variant.PMDS else params.n)
        label = "rN" if params.variant is Variant.PMDS else "rn"
        if span > bound:
            problems.append(
                "order bound violated: %s = %d > %d for %s" % (label, span, bound, params.algebra.name)
            )
    if problems:
        raise InvalidParameters(problems)
    if params.r == 1:
        warnings.warn("r = 1: cross-row erasure cases are vacuous", UserWarning, stacklevel=2)


@dataclass(frozen=True)
class ParityCheckMatrix:
    matrix: Matrix
    params: CodeParams

    @property
    def global_rows(self) -> tuple[int, int]:
        k = self.params.m * self.params.r
        return k, k + 1

    def local_rows(self, row: int) -> range:
        m = self.params.m
        return range(row * m, (row + 1) * m)

    def coordinate(self, row: int, col: int) -> int:
        return row * self.params.n + col

    def row_system(self, row: int, cols: Sequence[int]) -> Matrix:
        """H restricted to one stripe row's local rows, the two global rows and ``cols``.

        With ``len(cols) == m+2`` this is the square system for two extra
        erasures landing in the same row.
        """
        rows = list(self.local_rows(row)) + list(self.global_rows)
        return self.matrix.select_rows(rows).select_columns([self.coordinate(row, c) for c in cols])


def _build(params: CodeParams, stride: int) -> ParityCheckMatrix:
    validate(params)
    alg = params.algebra
    ap = alg.alpha_pow
    r, n, m = params.r, params.n, params.m
    rows = []
    for j in range(r):
        for k in range(m):
            row = [0] * (r * n)
            for i in range(n):
                row[j * n + i] = ap(k * i)
            rows.append(row)
    rows.append([ap(m * i) for _ in range(r) for i in range(n)])
    rows.append([ap(-(j * stride + i)) for j in range(r) for i in range(n)])
    return ParityCheckMatrix(Matrix(alg, rows), params)


def build_H(params: CodeParams) -> ParityCheckMatrix:
    """SD construction: last row entry at block j, column i is alpha^-(j*n + i)."""
    if params.variant is not Variant.SD:
        raise ValueError("build_H needs variant SD")
    return _build(params, params.n)


def build_H_prime(params: CodeParams) -> ParityCheckMatrix:
    """PMDS construction: last row entry at block j, column i is alpha^-(j*N + i)."""
    if params.variant is not Variant.PMDS:
        raise ValueError("build_H_prime needs variant PMDS")
    return _build(params, params.N)


def build_parity_check(params: CodeParams) -> ParityCheckMatrix:
    return build_H(params) if params.variant is Variant.SD else build_H_prime(params)


@dataclass(frozen=True)
class DeltaInputs:
    i_list: tuple[int, ...]
    j_list: tuple[int, ...]
    ell: int
    n: int
    r: int

    def __post_init__(self):
        object.__setattr__(self, "i_list", tuple(self.i_list))
        object.__setattr__(self, "j_list", tuple(self.j_list))

    @property
    def m(self) -> int:
        return len(self.i_list) - 1

    def check(self) -> None:
        if len(self.i_list) != len(self.j_list) or len(self.i_list) < 2:
            raise ValueError("index lists must both have m+1 >= 2 entries")
        for name, idx in (("i_list", self.i_list), ("j_list", self.j_list)):
            if any(not 0 <= x < self.n for x in idx):
                raise ValueError("%s has an index outside 0..%d" % (name, self.n - 1))
            if len(set(idx)) != len(idx):
                raise ValueError("%s has repeated indices" % name)
        if not 1 <= self.ell <= self.r - 1:
            raise ValueError("ell=%d outside 1..r-1" % self.ell)


def build_lemma_matrix(inp: DeltaInputs, algebra, check: bool = True) -> Matrix:
    """The (2m+2)-square matrix whose determinant the closed form predicts."""
    if check:
        inp.check()
    ap = algebra.alpha_pow
    m = inp.m
    zeros = [0] * (m + 1)
    rows = []
    for k in range(m):
        rows.append([ap(k * i) for i in inp.i_list] + zeros)
    for k in range(m):
        rows.append(zeros + [ap(k * j) for j in inp.j_list])
    rows.append([ap(m * i) for i in inp.i_list] + [ap(m * j) for j in inp.j_list])
    shift = inp.n * inp.ell
    rows.append([ap(-i) for i in inp.i_list] + [ap(-shift - j) for j in inp.j_list])
    return Matrix(algebra, rows)


def delta_closed_form(inp: DeltaInputs, algebra, check: bool = True) -> int:
    """prod_{u<v} (a^i_u + a^i_v)(a^j_u + a^j_v) * (a^-sum(i) + a^(-n*ell - sum(j)))."""
    if check:
        inp.check()
    ap, mul = algebra.alpha_pow, algebra.mul
    out = 1
    for idx in (inp.i_list, inp.j_list):
        for u in range(len(idx)):
            for v in range(u + 1, len(idx)):
                out = mul(out, ap(idx[u]) ^ ap(idx[v]))
    tail = ap(-sum(inp.i_list)) ^ ap(-inp.n * inp.ell - sum(inp.j_list))
    return mul(out, tail)


def delta_nonzero_condition(inp: DeltaInputs, algebra) -> bool:
    """Whether the last binomial survives: n*ell + sum(j) - sum(i) != 0 mod O(alpha)."""
    return (inp.n * inp.ell + sum(inp.j_list) - sum(inp.i_list)) % algebra.order_alpha != 0
