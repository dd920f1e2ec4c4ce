"""Schur complement calculus: each construction returns a witness C whose Schur complement is the target.

Every ``sc_*`` function accepts ``check``; with ``check=False`` invertibility preconditions are skipped,
which lets the pencil layer apply a construction coefficient by coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blockmat import (
    Matrix,
    PartitionedMatrix,
    assemble,
    commutation_matrix,
    direct_sum,
    is_invertible,
    kron,
    mat_inverse,
    rank_factorize,
    detect_mode,
    schur,
    schur_other,
    swap_partition,
)
from .errors import (
    ShapeMismatch,
    SingularBlock,
    SingularInnerBlock,
    SingularMatrix,
    SingularSchur,
    ZeroScalar,
)
from .field import coerce

Z = Matrix.zeros
I = Matrix.identity


@dataclass(frozen=True)
class SchurWitness:
    """Partitioned matrix C with C/C22 equal to the target; note names the construction."""

    C: PartitionedMatrix
    note: str
    certificate: Matrix | None = None

    @property
    def schur(self) -> Matrix:
        return schur(self.C)


def _require_block(A: PartitionedMatrix, check: bool) -> None:
    if check and A.tail and not is_invertible(A.a22):
        raise SingularBlock("trailing block A22 is singular")


def _require_schur_invertible(A: PartitionedMatrix, check: bool) -> None:
    if check and not is_invertible(schur(A)):
        raise SingularSchur("Schur complement is singular")


def _witness(m: Matrix, split: int, note: str, certificate: Matrix | None = None) -> SchurWitness:
    return SchurWitness(PartitionedMatrix(m, split), note, certificate)


def sc_scale(A: PartitionedMatrix, lam, check: bool = True) -> SchurWitness:
    """(lam A)/(lam A)22 = lam (A/A22)."""
    c = coerce(lam)
    if c is NotImplemented:
        raise TypeError("scale factor must be a scalar")
    if check:
        if not c:
            raise ZeroScalar("scale factor is zero")
        _require_block(A, check)
    return _witness(A.m * c, A.split, "scale")


def sc_add_const(A: PartitionedMatrix, B: Matrix, check: bool = True) -> SchurWitness:
    """Replace A11 by A11 + B, so C/C22 = A/A22 + B."""
    if B.shape != (A.split, A.split):
        raise ShapeMismatch(f"constant term must be {A.split}x{A.split}")
    _require_block(A, check)
    return _witness(assemble([[A.a11 + B, A.a12], [A.a21, A.a22]]), A.split, "add_const")


def sc_add(A: PartitionedMatrix, B: PartitionedMatrix, check: bool = True) -> SchurWitness:
    """C/C22 = A/A22 + B/B22 with C22 = A22 (+) B22."""
    if A.split != B.split:
        raise ShapeMismatch("Schur complements have different sizes")
    _require_block(A, check)
    _require_block(B, check)
    p, q = A.tail, B.tail
    m = assemble([
        [A.a11 + B.a11, A.a12, B.a12],
        [A.a21, A.a22, Z(p, q)],
        [B.a21, Z(q, p), B.a22],
    ])
    return _witness(m, A.split, "add")


def sc_short_left(A: PartitionedMatrix, l: int, check: bool = True) -> SchurWitness:
    """C/C22 = A/A22 (+) 0_l."""
    _require_block(A, check)
    k, p = A.split, A.tail
    m = assemble([
        [A.a11, Z(k, l), A.a12],
        [Z(l, k), Z(l, l), Z(l, p)],
        [A.a21, Z(p, l), A.a22],
    ])
    return _witness(m, k + l, "short_left")


def sc_short_right(B: PartitionedMatrix, k: int, check: bool = True) -> SchurWitness:
    """D/D22 = 0_k (+) B/B22."""
    _require_block(B, check)
    l, q = B.split, B.tail
    m = assemble([
        [Z(k, k), Z(k, l), Z(k, q)],
        [Z(l, k), B.a11, B.a12],
        [Z(q, k), B.a21, B.a22],
    ])
    return _witness(m, k + l, "short_right")


def sc_dsum(A: PartitionedMatrix, B: PartitionedMatrix, check: bool = True) -> SchurWitness:
    """C/C22 = A/A22 (+) B/B22 with C22 = A22 (+) B22."""
    _require_block(A, check)
    _require_block(B, check)
    k, p, l, q = A.split, A.tail, B.split, B.tail
    m = assemble([
        [A.a11, Z(k, l), A.a12, Z(k, q)],
        [Z(l, k), B.a11, Z(l, p), B.a12],
        [A.a21, Z(p, l), A.a22, Z(p, q)],
        [Z(q, k), B.a21, Z(q, p), B.a22],
    ])
    return _witness(m, k + l, "dsum")


def sc_matmul(A: PartitionedMatrix, B: PartitionedMatrix, check: bool = True) -> SchurWitness:
    """C/C22 = (A/A22)(B/B22)."""
    if A.split != B.split:
        raise ShapeMismatch("Schur complements have different sizes")
    _require_block(A, check)
    _require_block(B, check)
    p, q = A.tail, B.tail
    m = assemble([
        [A.a11 @ B.a11, A.a12, A.a11 @ B.a12],
        [A.a21 @ B.a11, A.a22, A.a21 @ B.a12],
        [B.a21, Z(q, p), B.a22],
    ])
    return _witness(m, A.split, "matmul")


def matmul_c22_inverse(A: PartitionedMatrix, B: PartitionedMatrix) -> Matrix:
    """Block upper-triangular inverse of the trailing block of sc_matmul(A, B)."""
    a22i, b22i = mat_inverse(A.a22), mat_inverse(B.a22)
    return assemble([
        [a22i, -(a22i @ A.a21 @ B.a12 @ b22i)],
        [Z(B.tail, A.tail), b22i],
    ])


def sc_sandwich(B: Matrix, A: PartitionedMatrix, C: Matrix, check: bool = True) -> SchurWitness:
    """D/D22 = B (A/A22) C with D22 = A22."""
    k = A.split
    if B.cols != k or C.rows != k or B.rows != C.cols:
        raise ShapeMismatch("sandwich factors do not fit the Schur complement")
    _require_block(A, check)
    m = assemble([[B @ A.a11 @ C, B @ A.a12], [A.a21 @ C, A.a22]])
    return _witness(m, B.rows, "sandwich")


def sc_inv_as_schur(A: Matrix, check: bool = True) -> SchurWitness:
    """B = [[0, I], [I, -A]] has B/B22 = A^-1."""
    if not A.is_square:
        raise ShapeMismatch("inverse needs a square matrix")
    if check and not is_invertible(A):
        raise SingularMatrix("matrix is singular")
    n = A.rows
    return _witness(assemble([[Z(n, n), I(n)], [I(n), -A]]), n, "inv_as_schur")


def sc_inv_of_schur(A: PartitionedMatrix, check: bool = True) -> SchurWitness:
    """C/C22 = (A/A22)^-1 with C22 = -A."""
    _require_block(A, check)
    _require_schur_invertible(A, check)
    k, p = A.split, A.tail
    m = assemble([
        [Z(k, k), I(k), Z(k, p)],
        [I(k), -A.a11, -A.a12],
        [Z(p, k), -A.a21, -A.a22],
    ])
    return _witness(m, k, "inv_of_schur")


def sc_kron_right(A: PartitionedMatrix, B: Matrix, check: bool = True) -> SchurWitness:
    """C = A (x) B with split k n has C/C22 = (A/A22) (x) B."""
    if not B.is_square:
        raise ShapeMismatch("Kronecker factor must be square")
    _require_block(A, check)
    if check and not is_invertible(B):
        raise SingularMatrix("Kronecker factor is singular")
    return _witness(kron(A.m, B), A.split * B.rows, "kron_right")


def sc_kron_left(A: Matrix, B: PartitionedMatrix, check: bool = True) -> SchurWitness:
    """D = Q^T (B (x) A) Q with Q = P(l, m) (+) I has D/D22 = A (x) (B/B22)."""
    if not A.is_square:
        raise ShapeMismatch("Kronecker factor must be square")
    _require_block(B, check)
    if check and not is_invertible(A):
        raise SingularMatrix("Kronecker factor is singular")
    m, l, n = A.rows, B.split, B.side
    Q = direct_sum(commutation_matrix(l, m), I(n * m - l * m)) if l else I(n * m)
    return _witness(Q.T @ kron(B.m, A) @ Q, l * m, "kron_left")


def kron_permutation(m: int, k: int, n: int, l: int) -> Matrix:
    """P = P(m, n) (P(l, m) (+) I) so that P^T (A (x) B) P leads with A11 (x) B11.

    A has side m and split k, B has side n and split l.
    """
    P_mn = commutation_matrix(m, n)
    Q = direct_sum(commutation_matrix(l, m), I(m * n - l * m)) if l else I(m * n)
    return P_mn @ Q


def sc_kron(A: PartitionedMatrix, B: PartitionedMatrix, check: bool = True) -> SchurWitness:
    """M = P^T (A (x) B) P with split k l has M/M22 = (A/A22) (x) (B/B22)."""
    _require_block(A, check)
    _require_block(B, check)
    _require_schur_invertible(A, check)
    _require_schur_invertible(B, check)
    P = kron_permutation(A.side, A.split, B.side, B.split)
    return _witness(P.T @ kron(A.m, B.m) @ P, A.split * B.split, "kron")


def sc_scalar_product(
    A: PartitionedMatrix,
    B: Matrix,
    mode: str | None = None,
    check: bool = True,
    factorization: tuple[Matrix, Matrix, Matrix, int] | None = None,
) -> SchurWitness:
    """C/C22 = (A/A22) B for a 1x1 Schur complement, via B = E (D11 (+) 0) F.

    With a symmetric or Hermitian mode, C inherits that structure from A.
    """
    if A.split != 1:
        raise ShapeMismatch("scalar product needs a 1x1 Schur complement")
    if not B.is_square:
        raise ShapeMismatch("scalar product needs a square matrix")
    _require_block(A, check)
    if factorization is None:
        factorization = rank_factorize(B, mode or detect_mode(B))
    E, D11, F, r = factorization
    n, t = B.rows, A.tail
    tr = t * r
    H = assemble([
        [kron(A.a11, D11), Z(r, n - r), kron(A.a12, D11)],
        [Z(n - r, r), Z(n - r, n - r), Z(n - r, tr)],
        [kron(A.a21, D11), Z(tr, n - r), kron(A.a22, D11)],
    ])
    left, right = direct_sum(E, I(tr)), direct_sum(F, I(tr))
    return _witness(left @ H @ right, n, "scalar_product")


def sc_compose(A: PartitionedMatrix, l: int, check: bool = True) -> SchurWitness:
    """C/C22 = (A/A22)/(A/A22)44 where block 4 is the trailing l x l of A/A22.

    C is A repartitioned with split k - l; the certificate is C22/A22, equal to (A/A22)44.
    """
    k = A.split
    if not 0 <= l < k:
        raise ShapeMismatch(f"inner split {l} must lie in 0..{k - 1}")
    _require_block(A, check)
    C = PartitionedMatrix(A.m, k - l)
    cert = None
    if check:
        C22 = PartitionedMatrix(C.a22, l)
        cert = schur(C22) if l else Matrix.zeros(0, 0)
        if l and not is_invertible(cert):
            raise SingularInnerBlock("trailing block of the Schur complement is singular")
    return SchurWitness(C, "compose", cert)


# principal pivot transforms


def ppt2(A: PartitionedMatrix) -> Matrix:
    """[[A/A22, A12 A22^-1], [-A22^-1 A21, A22^-1]]."""
    try:
        a22i = mat_inverse(A.a22)
    except SingularMatrix:
        raise SingularBlock("trailing block A22 is singular") from None
    return assemble([
        [A.a11 - A.a12 @ a22i @ A.a21, A.a12 @ a22i],
        [-(a22i @ A.a21), a22i],
    ])


def ppt1(A: PartitionedMatrix) -> Matrix:
    """[[A11^-1, -A11^-1 A12], [A21 A11^-1, A/A11]]."""
    try:
        a11i = mat_inverse(A.a11)
    except SingularMatrix:
        raise SingularBlock("leading block A11 is singular") from None
    return assemble([
        [a11i, -(a11i @ A.a12)],
        [A.a21 @ a11i, A.a22 - A.a21 @ a11i @ A.a12],
    ])


def swap_matrix(k: int, side: int) -> Matrix:
    """U = [[0, I_k], [I_{side-k}, 0]]."""
    p = side - k
    return assemble([[Z(k, p), I(k)], [I(p), Z(p, k)]])


def ppt_as_schur(A: PartitionedMatrix, which: str = "ppt2", signed: bool = False,
                 check: bool = True) -> SchurWitness:
    """Witness for ppt2 (side k + 2p) or ppt1 (side 2k + p).

    The signed form negates one identity block so that symmetry of A carries over; its Schur
    complement is (I_k (+) -I_p) ppt2(A), respectively (-I_k (+) I_p) ppt1(A).
    """
    k, p = A.split, A.tail
    if which == "ppt2":
        if check and p and not is_invertible(A.a22):
            raise SingularBlock("trailing block A22 is singular")
        m = assemble([
            [A.a11, Z(k, p), A.a12],
            [Z(p, k), Z(p, p), -I(p) if signed else I(p)],
            [A.a21, -I(p), A.a22],
        ])
        return _witness(m, k + p, "ppt2_signed" if signed else "ppt2")
    if which == "ppt1":
        if check and k and not is_invertible(A.a11):
            raise SingularBlock("leading block A11 is singular")
        m = assemble([
            [Z(k, k), Z(k, p), -I(k) if signed else I(k)],
            [Z(p, k), A.a22, A.a21],
            [-I(k), A.a12, A.a11],
        ])
        return _witness(m, k + p, "ppt1_signed" if signed else "ppt1")
    raise ValueError(f"unknown transform {which!r}")


__all__ = [
    "SchurWitness",
    "sc_scale",
    "sc_add_const",
    "sc_add",
    "sc_short_left",
    "sc_short_right",
    "sc_dsum",
    "sc_matmul",
    "matmul_c22_inverse",
    "sc_sandwich",
    "sc_inv_as_schur",
    "sc_inv_of_schur",
    "sc_kron_right",
    "sc_kron_left",
    "kron_permutation",
    "sc_kron",
    "sc_scalar_product",
    "sc_compose",
    "ppt1",
    "ppt2",
    "ppt_as_schur",
    "swap_matrix",
    "schur_other",
    "swap_partition",
]
