"""
Exact integer linear algebra.

Everything here works on Python integers, so no intermediate value can
overflow. Matrices are immutable ``IntMatrix`` values; the elimination
routines copy them into lists of lists, work in place and wrap the result
again.

Smith form pivots are chosen as the entry of smallest absolute value,
ties broken by the lowest (row, column), which makes every result
deterministic for a fixed input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

INFINITE_INDEX = math.inf


@dataclass(frozen=True)
class IntMatrix:
    """Row-major integer matrix."""

    rows: int
    cols: int
    entries: tuple = ()

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        entries = tuple(int(x) for x in self.entries)
        if len(entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(entries)}"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def T(self) -> IntMatrix:
        return IntMatrix(
            self.cols, self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        other_cols = [other.col(j) for j in range(other.cols)]
        return IntMatrix(
            self.rows, other.cols,
            tuple(
                sum(a * b for a, b in zip(self.row(i), c))
                for i in range(self.rows) for c in other_cols
            ),
        )

    def apply(self, vec: Sequence[int]) -> tuple:
        """Return A·v for a column vector v."""
        if len(vec) != self.cols:
            raise ValueError(f"vector of length {len(vec)} for {self.cols} columns")
        return tuple(sum(a * b for a, b in zip(self.row(i), vec)) for i in range(self.rows))

    def vstack(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.cols:
            raise ValueError("column counts differ")
        return IntMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def hstack(self, other: IntMatrix) -> IntMatrix:
        if self.rows != other.rows:
            raise ValueError("row counts differ")
        return IntMatrix.from_rows(
            (self.row(i) + other.row(i) for i in range(self.rows)),
            self.cols + other.cols,
        )

    def take_rows(self, indices: Iterable[int]) -> IntMatrix:
        return IntMatrix.from_rows((self.row(i) for i in indices), self.cols)

    def take_cols(self, indices: Iterable[int]) -> IntMatrix:
        indices = list(indices)
        return IntMatrix.from_rows(
            ([self[i, j] for j in indices] for i in range(self.rows)), len(indices)
        )

    def scaled(self, k: int) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(k * x for x in self.entries))


@dataclass(frozen=True)
class SnfResult:
    """Witnessed Smith normal form: ``left @ A @ right == diag``."""

    left: IntMatrix
    diag: IntMatrix
    right: IntMatrix
    invariant_factors: tuple
    free_rank: int


# Elementary operations on list-of-lists, mirrored on a transform matrix.

def _eye(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _swap_rows(M, T, i, j):
    if i != j:
        M[i], M[j] = M[j], M[i]
        T[i], T[j] = T[j], T[i]


def _swap_cols(M, T, i, j):
    if i != j:
        for row in M:
            row[i], row[j] = row[j], row[i]
        for row in T:
            row[i], row[j] = row[j], row[i]


def _add_row(M, T, target, source, k):
    """row[target] += k * row[source]"""
    for X in (M, T):
        src, dst = X[source], X[target]
        for c in range(len(dst)):
            if src[c]:
                dst[c] += k * src[c]


def _add_col(M, T, target, source, k):
    """col[target] += k * col[source]"""
    for X in (M, T):
        for row in X:
            if row[source]:
                row[target] += k * row[source]


def _negate_row(M, T, i):
    M[i] = [-x for x in M[i]]
    T[i] = [-x for x in T[i]]


def _min_pivot(M, t):
    best = None
    for i in range(t, len(M)):
        for j in range(t, len(M[i])):
            x = M[i][j]
            if x and (best is None or abs(x) < best[0]):
                best = (abs(x), i, j)
    return None if best is None else best[1:]


def snf(A: IntMatrix) -> SnfResult:
    m, n = A.rows, A.cols
    D = A.to_rows()
    L = _eye(m)
    R = _eye(n)

    t = 0
    while t < min(m, n):
        if _min_pivot(D, t) is None:
            break
        while True:
            i, j = _min_pivot(D, t)
            _swap_rows(D, L, t, i)
            _swap_cols(D, R, t, j)
            p = D[t][t]

            dirty = False
            for i in range(t + 1, m):
                q = D[i][t] // p
                if q:
                    _add_row(D, L, i, t, -q)
                dirty = dirty or D[i][t] != 0
            for j in range(t + 1, n):
                q = D[t][j] // p
                if q:
                    _add_col(D, R, j, t, -q)
                dirty = dirty or D[t][j] != 0
            if dirty:
                continue

            # pivot must divide the rest of the block
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            _add_row(D, L, t, bad, 1)

        if D[t][t] < 0:
            _negate_row(D, L, t)
        t += 1

    factors = tuple(D[k][k] for k in range(min(m, n)) if D[k][k])
    return SnfResult(
        left=IntMatrix.from_rows(L, m),
        diag=IntMatrix.from_rows(D, n),
        right=IntMatrix.from_rows(R, n),
        invariant_factors=factors,
        free_rank=n - len(factors),
    )


def det(A: IntMatrix) -> int:
    """Fraction-free (Bareiss) determinant."""
    if not A.is_square:
        raise ValueError(f"determinant of a non-square {A.rows}x{A.cols} matrix")
    n = A.rows
    if n == 0:
        return 1
    M = A.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def _row_echelon(A: IntMatrix):
    """Row Hermite reduction.

    Returns ``(E, T, pivots)`` with ``E == T @ A`` as lists of lists, T
    unimodular, E in row echelon form with positive pivots and the entries
    above each pivot reduced into ``[0, pivot)``. ``pivots`` lists the pivot
    column of each nonzero row of E.
    """
    m, n = A.rows, A.cols
    E = A.to_rows()
    T = _eye(m)
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nonzero = [i for i in range(r, m) if E[i][c]]
            if not nonzero:
                break
            best = min(nonzero, key=lambda i: (abs(E[i][c]), i))
            _swap_rows(E, T, r, best)
            clean = True
            for i in range(r + 1, m):
                if E[i][c]:
                    _add_row(E, T, i, r, -(E[i][c] // E[r][c]))
                    clean = clean and E[i][c] == 0
            if clean:
                break
        if E[r][c] == 0:
            continue
        if E[r][c] < 0:
            _negate_row(E, T, r)
        for i in range(r):
            q = E[i][c] // E[r][c]
            if q:
                _add_row(E, T, i, r, -q)
        pivots.append(c)
        r += 1
    return E, T, pivots


def rank(A: IntMatrix) -> int:
    return len(_row_echelon(A)[2])


def row_basis(A: IntMatrix) -> IntMatrix:
    """Echelon basis of the row lattice of A (zero rows dropped)."""
    E, _, pivots = _row_echelon(A)
    return IntMatrix.from_rows(E[:len(pivots)], A.cols)


def kernel_basis(A: IntMatrix) -> IntMatrix:
    """Basis (as rows) of the lattice {x : A·x = 0}."""
    E, T, pivots = _row_echelon(A.T)
    null_rows = T[len(pivots):]
    if not null_rows:
        return IntMatrix.zeros(0, A.cols)
    return row_basis(IntMatrix.from_rows(null_rows, A.cols))


def lattice_membership(L: IntMatrix, v: Sequence[int]):
    """Coefficients c with c·L == v, or None when v is outside the row lattice."""
    if len(v) != L.cols:
        raise ValueError(f"vector of length {len(v)} against {L.cols} columns")
    if L.rows == 0:
        return () if not any(v) else None
    E, T, pivots = _row_echelon(L)
    rest = [int(x) for x in v]
    y = []
    for k, c in enumerate(pivots):
        p = E[k][c]
        if rest[c] % p:
            return None
        q = rest[c] // p
        y.append(q)
        if q:
            rest = [a - q * b for a, b in zip(rest, E[k])]
    if any(rest):
        return None
    return tuple(
        sum(y[k] * T[k][i] for k in range(len(y))) for i in range(L.rows)
    )


def lattice_index(F: IntMatrix):
    """Index |Z^d : F(Z^d)|, or INFINITE_INDEX when F is singular."""
    if not F.is_square:
        raise ValueError(f"lattice index of a non-square {F.rows}x{F.cols} matrix")
    d = det(F)
    return abs(d) if d else INFINITE_INDEX


def unimodular_inverse(U: IntMatrix) -> IntMatrix:
    if not U.is_square:
        raise ValueError("only square matrices can be unimodular")
    E, T, pivots = _row_echelon(U)
    if E != _eye(U.rows):
        raise ValueError("matrix is not unimodular")
    return IntMatrix.from_rows(T, U.rows)


def block_diagonal(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    top = A.hstack(IntMatrix.zeros(A.rows, B.cols))
    bottom = IntMatrix.zeros(B.rows, A.cols).hstack(B)
    return top.vstack(bottom)
