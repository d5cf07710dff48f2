"""Systematic encoding and erasure decoding of r x n stripes."""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import gf2poly
from .construction import CodeParams, ParityCheckMatrix, build_parity_check
from .linalg import (
    Matrix,
    SingularMatrixError,
    has_full_column_rank,
    inverse,
    is_invertible,
    matvec,
    solve,
)

Cell = tuple[int, int]


@dataclass(frozen=True)
class ErasurePattern:
    cells: frozenset[Cell] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "cells", frozenset((int(a), int(b)) for a, b in self.cells))

    @classmethod
    def columns(cls, cols: Iterable[int], r: int, extra: Iterable[Cell] = ()) -> ErasurePattern:
        return cls({(row, c) for c in cols for row in range(r)} | set(extra))

    @classmethod
    def parse(cls, text: str) -> ErasurePattern:
        cells = set()
        for tok in text.split():
            row, sep, col = tok.partition(":")
            if not sep:
                raise ValueError("bad erasure token %r, expected row:col" % tok)
            cell = (int(row), int(col))
            if cell in cells:
                raise ValueError("duplicate erased cell %s" % tok)
            cells.add(cell)
        return cls(cells)

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(sorted(self.cells))

    def __or__(self, other: ErasurePattern) -> ErasurePattern:
        return ErasurePattern(self.cells | other.cells)

    def check(self, params: CodeParams) -> None:
        for row, col in self.cells:
            if not (0 <= row < params.r and 0 <= col < params.n):
                raise ValueError("erased cell %d:%d outside %dx%d stripe" % (row, col, params.r, params.n))

    def coordinates(self, n: int) -> list[int]:
        return [row * n + col for row, col in sorted(self.cells)]

    def row_counts(self, r: int) -> list[int]:
        counts = [0] * r
        for row, _ in self.cells:
            counts[row] += 1
        return counts

    def to_text(self) -> str:
        return " ".join("%d:%d" % c for c in sorted(self.cells))


@dataclass(frozen=True)
class StripeArray:
    params: CodeParams
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        cells = tuple(tuple(row) for row in self.cells)
        if len(cells) != self.params.r or any(len(row) != self.params.n for row in cells):
            raise ValueError("stripe must be %dx%d" % (self.params.r, self.params.n))
        object.__setattr__(self, "cells", cells)

    @classmethod
    def from_vector(cls, params: CodeParams, vec: Sequence[int]) -> StripeArray:
        n = params.n
        return cls(params, (vec[j * n:(j + 1) * n] for j in range(params.r)))

    def vector(self) -> list[int]:
        return [x for row in self.cells for x in row]

    def erase(self, pattern: ErasurePattern) -> StripeArray:
        gone = pattern.cells
        return StripeArray(
            self.params,
            ((0 if (j, i) in gone else x for i, x in enumerate(row)) for j, row in enumerate(self.cells)),
        )

    def to_text(self) -> str:
        return "\n".join(" ".join(gf2poly.to_hex(x) for x in row) for row in self.cells)


@dataclass(frozen=True)
class Undecodable:
    """Decoding verdict for a pattern the code cannot resolve."""

    pattern: ErasurePattern
    cells: tuple[Cell, ...]
    reason: str

    def __bool__(self) -> bool:
        return False

    def describe(self) -> str:
        coords = " ".join("%d:%d" % c for c in self.cells)
        return "undecodable (%s): %s" % (self.reason, coords)


def parity_positions(params: CodeParams) -> ErasurePattern:
    """Last m columns of every row plus the two cells just left of them in the bottom row.

    This is this package's systematic convention; the pattern is itself an
    SD-decodable pattern so the parity submatrix is invertible.
    """
    r, n, m = params.r, params.n, params.m
    cells = {(j, c) for j in range(r) for c in range(n - m, n)}
    cells |= {(r - 1, n - m - 2), (r - 1, n - m - 1)}
    return ErasurePattern(cells)


class ArrayCode:
    """An (m;2) SD or PMDS code with systematic encoder and two-phase erasure decoder."""

    def __init__(self, params: CodeParams):
        self.params = params
        self.pcm: ParityCheckMatrix = build_parity_check(params)
        self.H: Matrix = self.pcm.matrix
        n = params.n
        self.parity = parity_positions(params)
        self.parity_coords = self.parity.coordinates(n)
        parity_set = set(self.parity_coords)
        self.data_coords = [k for k in range(params.length) if k not in parity_set]
        h_par = self.H.select_columns(self.parity_coords)
        if not is_invertible(h_par):
            raise RuntimeError("parity submatrix is singular; construction is broken")
        # parity = H_P^-1 H_D data (signs vanish in characteristic 2)
        self._encoder = inverse(h_par) @ self.H.select_columns(self.data_coords)

    @property
    def algebra(self):
        return self.params.algebra

    def encode(self, data: Sequence[int]) -> StripeArray:
        if len(data) != len(self.data_coords):
            raise ValueError("expected %d data symbols, got %d" % (len(self.data_coords), len(data)))
        vec = [0] * self.params.length
        for k, x in zip(self.data_coords, data):
            vec[k] = x
        for k, x in zip(self.parity_coords, matvec(self._encoder, data)):
            vec[k] = x
        return StripeArray.from_vector(self.params, vec)

    def extract(self, arr: StripeArray) -> list[int]:
        vec = arr.vector()
        return [vec[k] for k in self.data_coords]

    def syndrome(self, arr: StripeArray) -> list[int]:
        return matvec(self.H, arr.vector())

    def is_decodable(self, pattern: ErasurePattern) -> bool:
        """Rank verdict: H restricted to the erased coordinates has full column rank."""
        coords = pattern.coordinates(self.params.n)
        if len(coords) > self.H.nrows:
            return False
        return has_full_column_rank(self.H.select_columns(coords))

    def decode(self, arr: StripeArray, pattern: ErasurePattern) -> StripeArray | Undecodable:
        """Recover erased cells; prior contents of erased cells are ignored.

        Rows with at most m erasures are repaired from their local
        Vandermonde equations first; whatever is left is solved jointly
        against the full parity-check matrix.
        """
        p = self.params
        pattern.check(p)
        if len(pattern) > self.H.nrows:
            return Undecodable(
                pattern, tuple(sorted(pattern.cells)),
                "%d erasures exceed the %d parity symbols" % (len(pattern), self.H.nrows),
            )
        vec = arr.erase(pattern).vector()
        synd = matvec(self.H, vec)

        by_row: dict[int, list[int]] = {}
        for row, col in sorted(pattern.cells):
            by_row.setdefault(row, []).append(col)
        remaining = []
        for row, cols in by_row.items():
            if len(cols) > p.m:
                remaining.extend(self.pcm.coordinate(row, c) for c in cols)
                continue
            local = list(self.pcm.local_rows(row))
            coords = [self.pcm.coordinate(row, c) for c in cols]
            A = self.H.select_rows(local).select_columns(coords)
            try:
                vals = solve(A, [synd[i] for i in local])
            except SingularMatrixError:
                remaining.extend(coords)
                continue
            for k, x in zip(coords, vals):
                vec[k] = x

        if remaining:
            synd = matvec(self.H, vec)
            try:
                vals = solve(self.H.select_columns(remaining), synd)
            except SingularMatrixError as exc:
                cells = tuple(divmod(remaining[k], p.n) for k in exc.free_columns)
                return Undecodable(pattern, cells, "parity-check submatrix is rank deficient")
            for k, x in zip(remaining, vals):
                vec[k] = x
        return StripeArray.from_vector(p, vec)


@functools.lru_cache(maxsize=64)
def code_for(params: CodeParams) -> ArrayCode:
    return ArrayCode(params)


def encode(data: Sequence[int], params: CodeParams) -> StripeArray:
    return code_for(params).encode(data)


def syndrome(arr: StripeArray, H: ParityCheckMatrix | Matrix) -> list[int]:
    M = H.matrix if isinstance(H, ParityCheckMatrix) else H
    return matvec(M, arr.vector())


def decode(arr: StripeArray, pattern: ErasurePattern) -> StripeArray | Undecodable:
    return code_for(arr.params).decode(arr, pattern)
