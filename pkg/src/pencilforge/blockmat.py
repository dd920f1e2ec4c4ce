"""Dense exact matrices, 2x2 partitions, Schur complements and factorizations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ModeUnsatisfiable, ShapeMismatch, SingularBlock, SingularMatrix
from .field import ONE, ZERO, GaussianRational, coerce, gr

Row = tuple[GaussianRational, ...]


def _to_scalar(value) -> GaussianRational:
    if isinstance(value, str):
        return gr(value)
    c = coerce(value)
    if c is NotImplemented:
        raise TypeError(f"cannot use {type(value).__name__} as a matrix entry")
    return c


class Matrix:
    """Immutable dense matrix over the Gaussian rationals."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, entries: Iterable[Iterable] = (), rows: int | None = None, cols: int | None = None):
        data = tuple(tuple(_to_scalar(x) for x in row) for row in entries)
        r = len(data)
        c = len(data[0]) if data else 0
        if any(len(row) != c for row in data):
            raise ShapeMismatch("ragged matrix rows")
        if rows is not None and rows != r:
            if r:
                raise ShapeMismatch("row count does not match entries")
            r = rows
        if cols is not None and cols != c:
            if c:
                raise ShapeMismatch("column count does not match entries")
            c = cols
        self.rows, self.cols, self.data = r, c, data

    @classmethod
    def _wrap(cls, data: tuple[Row, ...], rows: int, cols: int) -> Matrix:
        m = object.__new__(cls)
        m.rows, m.cols, m.data = rows, cols, data
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> Matrix:
        cols = rows if cols is None else cols
        return cls._wrap(tuple((ZERO,) * cols for _ in range(rows)), rows, cols)

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls._wrap(
            tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)), n, n
        )

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> Matrix:
        """Standard basis matrix E_ij (0-based indices)."""
        return cls._wrap(
            tuple(tuple(ONE if (a, b) == (i, j) else ZERO for b in range(n)) for a in range(n)), n, n
        )

    @classmethod
    def diag(cls, values: Sequence) -> Matrix:
        n = len(values)
        vals = [_to_scalar(v) for v in values]
        return cls._wrap(tuple(tuple(vals[i] if i == j else ZERO for j in range(n)) for i in range(n)), n, n)

    # shape and access

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: tuple[int, int]) -> GaussianRational:
        i, j = index
        return self.data[i][j]

    def tolist(self) -> list[list[GaussianRational]]:
        return [list(row) for row in self.data]

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> Matrix:
        return Matrix._wrap(tuple(row[c0:c1] for row in self.data[r0:r1]), r1 - r0, c1 - c0)

    def permute(self, row_order: Sequence[int], col_order: Sequence[int]) -> Matrix:
        return Matrix._wrap(
            tuple(tuple(self.data[i][j] for j in col_order) for i in row_order),
            len(row_order),
            len(col_order),
        )

    # algebra

    def _check_same(self, other: Matrix) -> None:
        if self.shape != other.shape:
            raise ShapeMismatch(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same(other)
        return Matrix._wrap(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.data, other.data)),
            self.rows,
            self.cols,
        )

    def __sub__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same(other)
        return Matrix._wrap(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.data, other.data)),
            self.rows,
            self.cols,
        )

    def __neg__(self) -> Matrix:
        return Matrix._wrap(tuple(tuple(-a for a in r) for r in self.data), self.rows, self.cols)

    def __mul__(self, scalar) -> Matrix:
        c = coerce(scalar)
        if c is NotImplemented:
            return NotImplemented
        return Matrix._wrap(tuple(tuple(a * c for a in r) for r in self.data), self.rows, self.cols)

    __rmul__ = __mul__

    def __matmul__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        cols = tuple(zip(*other.data)) if other.rows else tuple(() for _ in range(other.cols))
        out = []
        for row in self.data:
            nz = [(k, a) for k, a in enumerate(row) if a]
            out_row = []
            for col in cols:
                acc = ZERO
                for k, a in nz:
                    b = col[k]
                    if b:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(tuple(out_row))
        return Matrix._wrap(tuple(out), self.rows, other.cols)

    def transpose(self) -> Matrix:
        if not self.rows:
            return Matrix.zeros(self.cols, 0)
        return Matrix._wrap(tuple(zip(*self.data)), self.cols, self.rows)

    @property
    def T(self) -> Matrix:
        return self.transpose()

    def conj(self) -> Matrix:
        return Matrix._wrap(tuple(tuple(a.conj() for a in r) for r in self.data), self.rows, self.cols)

    def adjoint(self) -> Matrix:
        """Conjugate transpose."""
        return self.conj().transpose()

    @property
    def H(self) -> Matrix:
        return self.adjoint()

    # predicates

    def is_zero(self) -> bool:
        return not any(a for r in self.data for a in r)

    def is_real(self) -> bool:
        return all(a.is_real for r in self.data for a in r)

    def is_symmetric(self) -> bool:
        return self.is_square and self == self.transpose()

    def is_hermitian(self) -> bool:
        return self.is_square and self == self.adjoint()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.data))

    def __repr__(self) -> str:
        return f"Matrix({[[str(a) for a in r] for r in self.data]!r})"

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(a) for a in r) + "]" for r in self.data) + "]"


def assemble(grid: Sequence[Sequence[Matrix]]) -> Matrix:
    """Assemble a block matrix; zero-sized blocks are allowed but must agree in shape."""
    heights = [row[0].rows for row in grid]
    widths = [b.cols for b in grid[0]]
    for i, row in enumerate(grid):
        if len(row) != len(widths):
            raise ShapeMismatch("ragged block grid")
        for j, b in enumerate(row):
            if b.shape != (heights[i], widths[j]):
                raise ShapeMismatch(f"block ({i},{j}) has shape {b.shape}, expected {(heights[i], widths[j])}")
    data = []
    for row in grid:
        for r in range(row[0].rows):
            data.append(tuple(x for b in row for x in b.data[r]))
    return Matrix._wrap(tuple(data), sum(heights), sum(widths))


def direct_sum(*blocks: Matrix) -> Matrix:
    n = len(blocks)
    grid = [[blocks[i] if i == j else Matrix.zeros(blocks[i].rows, blocks[j].cols) for j in range(n)]
            for i in range(n)]
    return assemble(grid)


# elimination


def solve(A: Matrix, B: Matrix) -> Matrix:
    """Return X with A X = B by exact Gauss-Jordan elimination (first nonzero pivot by row order)."""
    if not A.is_square:
        raise ShapeMismatch("solve needs a square coefficient matrix")
    if A.rows != B.rows:
        raise ShapeMismatch("right-hand side has the wrong number of rows")
    n, p = A.rows, B.cols
    rows = [list(a) + list(b) for a, b in zip(A.data, B.data)]
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col]), None)
        if piv is None:
            raise SingularMatrix("matrix is singular")
        rows[col], rows[piv] = rows[piv], rows[col]
        prow = rows[col]
        inv = prow[col].inv()
        prow = [x * inv for x in prow]
        rows[col] = prow
        nz = [j for j in range(col, n + p) if prow[j]]
        for r in range(n):
            if r != col:
                f = rows[r][col]
                if f:
                    row = rows[r]
                    for j in nz:
                        row[j] = row[j] - f * prow[j]
    return Matrix._wrap(tuple(tuple(r[n:]) for r in rows), n, p)


def mat_inverse(A: Matrix) -> Matrix:
    """Exact inverse; raises SingularMatrix."""
    return solve(A, Matrix.identity(A.rows))


def rank(A: Matrix) -> int:
    rows = [list(r) for r in A.data]
    r = 0
    for col in range(A.cols):
        piv = next((i for i in range(r, A.rows) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][col].inv()
        for i in range(r + 1, A.rows):
            f = rows[i][col] * inv
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def det(A: Matrix) -> GaussianRational:
    if not A.is_square:
        raise ShapeMismatch("determinant of a non-square matrix")
    rows = [list(r) for r in A.data]
    n = A.rows
    result = ONE
    for col in range(n):
        piv = next((i for i in range(col, n) if rows[i][col]), None)
        if piv is None:
            return ZERO
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            result = -result
        p = rows[col][col]
        result = result * p
        inv = p.inv()
        for i in range(col + 1, n):
            f = rows[i][col] * inv
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[col])]
    return result


def is_invertible(A: Matrix) -> bool:
    return A.is_square and rank(A) == A.rows


# partitions


@dataclass(frozen=True)
class PartitionedMatrix:
    """Square matrix with a split k: A11 is the leading k x k block, A22 the trailing block."""

    m: Matrix
    split: int

    def __post_init__(self):
        if not self.m.is_square:
            raise ShapeMismatch("partitioned matrix must be square")
        if not 0 <= self.split <= self.m.rows:
            raise ShapeMismatch(f"split {self.split} outside 0..{self.m.rows}")

    @property
    def side(self) -> int:
        return self.m.rows

    @property
    def tail(self) -> int:
        """Size of the trailing block A22."""
        return self.m.rows - self.split

    @property
    def a11(self) -> Matrix:
        k = self.split
        return self.m.submatrix(0, k, 0, k)

    @property
    def a12(self) -> Matrix:
        k = self.split
        return self.m.submatrix(0, k, k, self.side)

    @property
    def a21(self) -> Matrix:
        k = self.split
        return self.m.submatrix(k, self.side, 0, k)

    @property
    def a22(self) -> Matrix:
        k = self.split
        return self.m.submatrix(k, self.side, k, self.side)

    @property
    def is_degenerate(self) -> bool:
        return self.split == self.side

    @classmethod
    def from_blocks(cls, a11: Matrix, a12: Matrix, a21: Matrix, a22: Matrix) -> PartitionedMatrix:
        return cls(assemble([[a11, a12], [a21, a22]]), a11.rows)


def schur(A: PartitionedMatrix) -> Matrix:
    """A/A22 = A11 - A12 A22^-1 A21; the degenerate split returns A itself."""
    if A.split == 0:
        raise ShapeMismatch("schur needs a nonempty leading block")
    if A.is_degenerate:
        return A.m
    try:
        x = solve(A.a22, A.a21)
    except SingularMatrix:
        raise SingularBlock("trailing block A22 is singular") from None
    return A.a11 - A.a12 @ x


def swap_partition(A: PartitionedMatrix) -> PartitionedMatrix:
    """U^T A U with U = [[0, I_k], [I_{m-k}, 0]]: exchanges the roles of A11 and A22."""
    k, s = A.split, A.side
    order = list(range(k, s)) + list(range(k))
    return PartitionedMatrix(A.m.permute(order, order), s - k)


def schur_other(A: PartitionedMatrix) -> Matrix:
    """A/A11 = A22 - A21 A11^-1 A12, computed as schur of the swapped partition."""
    if A.split == A.side:
        raise ShapeMismatch("schur_other needs a nonempty trailing block")
    try:
        return schur(swap_partition(A))
    except SingularBlock:
        raise SingularBlock("leading block A11 is singular") from None


# Kronecker products


def kron(A: Matrix, B: Matrix) -> Matrix:
    data = []
    for arow in A.data:
        for brow in B.data:
            data.append(tuple(a * b for a in arow for b in brow))
    return Matrix._wrap(tuple(data), A.rows * B.rows, A.cols * B.cols)


def commutation_matrix(m: int, n: int) -> Matrix:
    """P(m, n) = sum of E_ij (x) E_ij^T over the m x n units; satisfies B(x)A = P(m,p)^T (A(x)B) P(n,q)."""
    if m < 1 or n < 1:
        raise ShapeMismatch("commutation matrix needs positive sizes")
    size = m * n
    ones = {(i * n + j, j * m + i) for i in range(m) for j in range(n)}
    return Matrix._wrap(
        tuple(tuple(ONE if (r, c) in ones else ZERO for c in range(size)) for r in range(size)), size, size
    )


# rank and congruence factorizations

MODES = ("plain", "real", "symmetric", "hermitian", "real_symmetric")


def detect_mode(B: Matrix) -> str:
    """Strongest factorization mode whose symmetry B satisfies."""
    real, sym, herm = B.is_real(), B.is_symmetric(), B.is_hermitian()
    if real and sym:
        return "real_symmetric"
    if herm:
        return "hermitian"
    if sym:
        return "symmetric"
    if real:
        return "real"
    return "plain"


def _check_mode(B: Matrix, mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if mode in ("real", "real_symmetric") and not B.is_real():
        raise ModeUnsatisfiable("matrix is not real")
    if mode in ("symmetric", "real_symmetric") and not B.is_symmetric():
        raise ModeUnsatisfiable("matrix is not symmetric")
    if mode == "hermitian" and not B.is_hermitian():
        raise ModeUnsatisfiable("matrix is not Hermitian")


def rank_factorize(B: Matrix, mode: str = "plain") -> tuple[Matrix, Matrix, Matrix, int]:
    """Return (E, D11, F, r) with B = E (D11 (+) 0) F, E and F invertible, D11 invertible r x r.

    symmetric modes give E = F^T, hermitian gives E = F^*; D11 carries the matching symmetry.
    """
    if not B.is_square:
        raise ShapeMismatch("rank_factorize needs a square matrix")
    _check_mode(B, mode)
    if mode in ("plain", "real"):
        return _equivalence_factorize(B)
    return _congruence_factorize(B, hermitian=(mode == "hermitian"))


def _equivalence_factorize(B: Matrix) -> tuple[Matrix, Matrix, Matrix, int]:
    # Row-reduce to echelon form R B = U, then B = R^-1 (I_r (+) 0) C^-1 where C moves pivots first
    # and clears the non-pivot columns.
    n = B.rows
    work = [list(r) for r in B.data]
    R = [list(r) for r in Matrix.identity(n).data]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, n) if work[i][col]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        R[r], R[piv] = R[piv], R[r]
        inv = work[r][col].inv()
        work[r] = [x * inv for x in work[r]]
        R[r] = [x * inv for x in R[r]]
        for i in range(n):
            if i != r and work[i][col]:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(col)
        r += 1
    # work is the reduced echelon form U with U[i][pivots[i]] = 1.  F = U on the pivot rows,
    # completed with unit rows for the non-pivot columns, satisfies (I_r (+) 0) F = U.
    non_pivots = [c for c in range(n) if c not in pivots]
    F_rows = [work[i] for i in range(r)] + [
        [ONE if c == j else ZERO for c in range(n)] for j in non_pivots
    ]
    F = Matrix(F_rows)
    E = mat_inverse(Matrix(R))
    return E, Matrix.identity(r), F, r


def _congruence_factorize(B: Matrix, hermitian: bool) -> tuple[Matrix, Matrix, Matrix, int]:
    # T B T^# = diag(d_1..d_r, 0..0) by paired row/column operations, where # is transpose or adjoint.
    n = B.rows
    W = [list(r) for r in B.data]
    T = [list(r) for r in Matrix.identity(n).data]
    cj = (lambda x: x.conj()) if hermitian else (lambda x: x)

    def add_multiple(dst: int, src: int, c: GaussianRational) -> None:
        # row_dst += c row_src ; col_dst += cj(c) col_src
        W[dst] = [x + c * y for x, y in zip(W[dst], W[src])]
        cc = cj(c)
        for row in W:
            row[dst] = row[dst] + cc * row[src]
        T[dst] = [x + c * y for x, y in zip(T[dst], T[src])]

    def swap(a: int, b: int) -> None:
        W[a], W[b] = W[b], W[a]
        for row in W:
            row[a], row[b] = row[b], row[a]
        T[a], T[b] = T[b], T[a]

    p = 0
    while p < n:
        piv = next((i for i in range(p, n) if W[i][i]), None)
        if piv is None:
            off = next(((i, j) for i in range(p, n) for j in range(p, n) if i != j and W[i][j]), None)
            if off is None:
                break
            i, j = off
            # zero diagonal: new W[i][i] is 2 Re(c conj(W[i][j])) or 2c W[i][j]; c = W[i][j] or 1 keeps it nonzero
            c = W[i][j] if hermitian else ONE
            add_multiple(i, j, c)
            piv = i
        if piv != p:
            swap(p, piv)
        d = W[p][p]
        dinv = d.inv()
        for i in range(p + 1, n):
            if W[i][p]:
                add_multiple(i, p, -(W[i][p] * dinv))
        p += 1
    r = p
    D11 = Matrix([[W[i][j] for j in range(r)] for i in range(r)])
    Tinv = mat_inverse(Matrix(T))
    E = Tinv
    F = Tinv.adjoint() if hermitian else Tinv.transpose()
    return E, D11, F, r
