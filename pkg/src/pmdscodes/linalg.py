"""Dense exact linear algebra over a GaloisField or QuotientRing.

Every query is answered per CRT component field and recombined, so the same
code path serves fields (one component) and M_p rings (several).  Pivoting is
first-nonzero; there are no tolerances anywhere.
"""

from __future__ import annotations

from typing import Any, Iterable, Sequence

from . import gf2poly


class SingularMatrixError(ValueError):
    """The system has no unique solution.

    ``free_columns`` lists the unknowns that elimination could not pin down
    (union over CRT components).
    """

    def __init__(self, msg: str, free_columns: Sequence[int] = ()):
        super().__init__(msg)
        self.free_columns = tuple(free_columns)


class InconsistentSystemError(ValueError):
    pass


class Matrix:
    """Immutable row-major matrix of raw algebra elements."""

    __slots__ = ("algebra", "rows")

    def __init__(self, algebra: Any, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(r) for r in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        self.algebra = algebra
        self.rows = rows

    @classmethod
    def identity(cls, algebra, k: int) -> Matrix:
        return cls(algebra, ([1 if i == j else 0 for j in range(k)] for i in range(k)))

    @classmethod
    def zeros(cls, algebra, nrows: int, ncols: int) -> Matrix:
        return cls(algebra, ([0] * ncols for _ in range(nrows)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.algebra == other.algebra and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self) -> str:
        return "Matrix(%s, %dx%d)" % (self.algebra.name, self.nrows, self.ncols)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def select_columns(self, cols: Sequence[int]) -> Matrix:
        return Matrix(self.algebra, ([r[j] for j in cols] for r in self.rows))

    def select_rows(self, rows: Sequence[int]) -> Matrix:
        return Matrix(self.algebra, (self.rows[i] for i in rows))

    def scale_row(self, i: int, c: int) -> Matrix:
        mul = self.algebra.mul
        return Matrix(
            self.algebra,
            ([mul(c, x) for x in r] if k == i else r for k, r in enumerate(self.rows)),
        )

    def transpose(self) -> Matrix:
        return Matrix(self.algebra, zip(*self.rows))

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            cols = other.transpose().rows
            return Matrix(self.algebra, ([_dot(self.algebra, r, c) for c in cols] for r in self.rows))
        return matvec(self, other)

    def to_text(self) -> str:
        return "\n".join(" ".join(gf2poly.to_hex(x) for x in r) for r in self.rows)


def _dot(algebra, u: Sequence[int], v: Sequence[int]) -> int:
    mul = algebra.mul
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc ^= mul(a, b)
    return acc


def matvec(M: Matrix, v: Sequence[int]) -> list[int]:
    if len(v) != M.ncols:
        raise ValueError("vector length %d does not match %d columns" % (len(v), M.ncols))
    return [_dot(M.algebra, r, v) for r in M.rows]


def block_diag(algebra, *blocks: Matrix) -> Matrix:
    width = sum(b.ncols for b in blocks)
    rows = []
    offset = 0
    for b in blocks:
        for r in b.rows:
            rows.append([0] * offset + list(r) + [0] * (width - offset - b.ncols))
        offset += b.ncols
    return Matrix(algebra, rows)


def _components(M: Matrix):
    """Yield (field, row lists) for each CRT component of M."""
    alg = M.algebra
    if len(alg.components) == 1:
        yield alg.components[0], [list(r) for r in M.rows]
        return
    split = [[alg.split(x) for x in r] for r in M.rows]
    for k, F in enumerate(alg.components):
        yield F, [[x[k] for x in r] for r in split]


def _eliminate(F, A: list[list[int]], ncols: int) -> list[int]:
    """Gauss-Jordan in place on the first ``ncols`` columns; returns pivot columns.

    Pivot rows are normalised to 1 and end up in rows 0..rank-1.
    """
    mul, inv = F.mul, F.inv
    nrows = len(A)
    pivots = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        piv = next((i for i in range(row, nrows) if A[i][col]), None)
        if piv is None:
            continue
        A[row], A[piv] = A[piv], A[row]
        prow = A[row]
        c = inv(prow[col])
        if c != 1:
            prow[:] = [mul(c, x) if x else 0 for x in prow]
        for i in range(nrows):
            f = A[i][col]
            if i != row and f:
                Ai = A[i]
                for j in range(col, len(prow)):
                    if prow[j]:
                        Ai[j] ^= mul(f, prow[j])
        pivots.append(col)
        row += 1
    return pivots


def _det_field(F, A: list[list[int]]) -> int:
    mul, inv = F.mul, F.inv
    n = len(A)
    det = 1
    for col in range(n):
        piv = next((i for i in range(col, n) if A[i][col]), None)
        if piv is None:
            return 0
        A[col], A[piv] = A[piv], A[col]
        p = A[col][col]
        det = mul(det, p)
        pinv = inv(p)
        for i in range(col + 1, n):
            f = A[i][col]
            if f:
                f = mul(f, pinv)
                Ai, Ac = A[i], A[col]
                for j in range(col, n):
                    if Ac[j]:
                        Ai[j] ^= mul(f, Ac[j])
    # characteristic 2: row swaps do not flip the sign
    return det


def _require_square(M: Matrix) -> None:
    if M.nrows != M.ncols:
        raise ValueError("matrix is %dx%d, not square" % M.shape)


def determinant(M: Matrix) -> int:
    _require_square(M)
    if M.nrows == 0:
        return 1
    return M.algebra.join(_det_field(F, A) for F, A in _components(M))


def component_ranks(M: Matrix) -> list[int]:
    return [len(_eliminate(F, A, M.ncols)) for F, A in _components(M)]


def rank(M: Matrix) -> int:
    """Row-echelon rank; over a split ring this is the minimum over CRT components."""
    if M.nrows == 0 or M.ncols == 0:
        return 0
    return min(component_ranks(M))


def has_full_column_rank(M: Matrix) -> bool:
    return M.ncols == 0 or rank(M) == M.ncols


def is_invertible(M: Matrix) -> bool:
    _require_square(M)
    return has_full_column_rank(M)


def solve(A: Matrix, b: Sequence[int]) -> list[int]:
    """Unique x with A x = b.

    A may be tall as long as it has full column rank and b is consistent.
    """
    if len(b) != A.nrows:
        raise ValueError("right-hand side has length %d, expected %d" % (len(b), A.nrows))
    alg = A.algebra
    n = A.ncols
    if len(alg.components) == 1:
        bs = [(x,) for x in b]
    else:
        bs = [alg.split(x) for x in b]
    solutions = []
    free: set[int] = set()
    for k, (F, rows) in enumerate(_components(A)):
        aug = [r + [bs[i][k]] for i, r in enumerate(rows)]
        pivots = _eliminate(F, aug, n)
        if len(pivots) < n:
            free.update(set(range(n)) - set(pivots))
            continue
        if any(aug[i][n] for i in range(n, len(aug))):
            raise InconsistentSystemError("right-hand side is not in the column space")
        solutions.append([aug[i][n] for i in range(n)])
    if free:
        raise SingularMatrixError("system has no unique solution", sorted(free))
    if len(solutions) == 1:
        return solutions[0]
    return [alg.join(parts) for parts in zip(*solutions)]


def inverse(A: Matrix) -> Matrix:
    _require_square(A)
    n = A.nrows
    cols = [solve(A, [1 if i == j else 0 for i in range(n)]) for j in range(n)]
    return Matrix(A.algebra, cols).transpose()
