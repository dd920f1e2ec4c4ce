"""Seeded random cases for the Schur-complement calculus, each paired with a directly computed target.

Targets use cofactor-expansion inverses, so they share no elimination code with the witnesses
under test.
"""

import random
from fractions import Fraction

from pencilforge import schuralg as sc
from pencilforge.blockmat import Matrix, PartitionedMatrix, assemble, direct_sum, kron, swap_partition
from pencilforge.field import GaussianRational
from strategies import adjugate_inverse, nonsingular, oracle_schur

STRUCTURES = ("plain", "real_symmetric", "hermitian")


class Gen:
    def __init__(self, seed: int, structure: str = "plain"):
        self.rng = random.Random(seed)
        self.structure = structure

    def scalar(self, real: bool = False) -> GaussianRational:
        r = self.rng
        re = Fraction(r.randint(-5, 5), r.randint(1, 3))
        if real or self.structure == "real_symmetric":
            return GaussianRational(re)
        return GaussianRational(re, Fraction(r.randint(-5, 5), r.randint(1, 3)))

    def matrix(self, rows: int, cols: int | None = None) -> Matrix:
        cols = rows if cols is None else cols
        if self.structure == "plain" or rows != cols:
            return Matrix([[self.scalar() for _ in range(cols)] for _ in range(rows)], rows, cols)
        n = rows
        upper = {(i, j): self.scalar(real=(i == j and self.structure == "hermitian")) for i in range(n)
                 for j in range(i, n)}

        def entry(i, j):
            if i <= j:
                return upper[i, j]
            v = upper[j, i]
            return v.conj() if self.structure == "hermitian" else v

        return Matrix([[entry(i, j) for j in range(n)] for i in range(n)], n, n)

    def invertible(self, n: int) -> Matrix:
        while True:
            M = self.matrix(n)
            if n == 0 or nonsingular(M):
                return M

    def partitioned(self, side: int | None = None, split: int | None = None, schur_invertible=False,
                    max_side: int = 5) -> PartitionedMatrix:
        while True:
            s = side if side is not None else self.rng.randint(1, max_side)
            k = split if split is not None else self.rng.randint(1, s)
            A = PartitionedMatrix(self.matrix(s), k)
            if A.tail and not nonsingular(A.a22):
                continue
            if schur_invertible and not nonsingular(oracle_schur(A.m, k)):
                continue
            return A


def target_schur(A: PartitionedMatrix) -> Matrix:
    return oracle_schur(A.m, A.split)


def _case_scale(g: Gen):
    A = g.partitioned()
    lam = g.scalar(real=True)
    while not lam:
        lam = g.scalar(real=True)
    return sc.sc_scale(A, lam), target_schur(A) * lam


def _case_add_const(g: Gen):
    A = g.partitioned()
    B = g.matrix(A.split)
    return sc.sc_add_const(A, B), target_schur(A) + B


def _case_add(g: Gen):
    A = g.partitioned()
    B = g.partitioned(split=A.split, side=A.split + g.rng.randint(0, 5 - A.split))
    return sc.sc_add(A, B), target_schur(A) + target_schur(B)


def _case_short_left(g: Gen):
    A = g.partitioned()
    l = g.rng.randint(0, 3)
    return sc.sc_short_left(A, l), direct_sum(target_schur(A), Matrix.zeros(l))


def _case_short_right(g: Gen):
    B = g.partitioned()
    k = g.rng.randint(0, 3)
    return sc.sc_short_right(B, k), direct_sum(Matrix.zeros(k), target_schur(B))


def _case_dsum(g: Gen):
    A, B = g.partitioned(), g.partitioned()
    return sc.sc_dsum(A, B), direct_sum(target_schur(A), target_schur(B))


def _case_matmul(g: Gen):
    A = g.partitioned()
    B = g.partitioned(split=A.split, side=A.split + g.rng.randint(0, 5 - A.split))
    return sc.sc_matmul(A, B), target_schur(A) @ target_schur(B)


def _case_sandwich(g: Gen):
    A = g.partitioned()
    B = g.matrix(g.rng.randint(1, 4), A.split)
    if g.structure == "real_symmetric":
        C = B.T
    elif g.structure == "hermitian":
        C = B.adjoint()
    else:
        C = g.matrix(A.split, B.rows)
    return sc.sc_sandwich(B, A, C), B @ target_schur(A) @ C


def _case_inv_as_schur(g: Gen):
    M = g.invertible(g.rng.randint(1, 5))
    return sc.sc_inv_as_schur(M), adjugate_inverse(M)


def _case_inv_of_schur(g: Gen):
    A = g.partitioned(schur_invertible=True)
    return sc.sc_inv_of_schur(A), adjugate_inverse(target_schur(A))


def _case_kron_right(g: Gen):
    A = g.partitioned(max_side=3)
    B = g.invertible(g.rng.randint(1, 2))
    return sc.sc_kron_right(A, B), kron(target_schur(A), B)


def _case_kron_left(g: Gen):
    A = g.invertible(g.rng.randint(1, 2))
    B = g.partitioned(max_side=3)
    return sc.sc_kron_left(A, B), kron(A, target_schur(B))


def _case_kron(g: Gen):
    A = g.partitioned(max_side=3, schur_invertible=True)
    B = g.partitioned(max_side=3, schur_invertible=True)
    return sc.sc_kron(A, B), kron(target_schur(A), target_schur(B))


def _case_scalar_product(g: Gen):
    A = g.partitioned(split=1)
    n = g.rng.randint(1, 4)
    r = g.rng.randint(0, n)
    # rank-deficient B of the requested structure: X D X^# with X n x r
    X = Matrix([[g.scalar() for _ in range(r)] for _ in range(n)], n, r)
    if g.structure == "real_symmetric":
        B = X @ g.matrix(r) @ X.T if r else Matrix.zeros(n)
        mode = "real_symmetric"
    elif g.structure == "hermitian":
        B = X @ g.matrix(r) @ X.adjoint() if r else Matrix.zeros(n)
        mode = "hermitian"
    else:
        B = X @ Matrix([[g.scalar() for _ in range(n)] for _ in range(r)], r, n) if r else Matrix.zeros(n)
        mode = "plain"
    return sc.sc_scalar_product(A, B, mode), B * target_schur(A)[0, 0]


def _case_compose(g: Gen):
    while True:
        A = g.partitioned(max_side=5)
        if A.split < 2:
            continue
        l = g.rng.randint(0, A.split - 1)
        S = target_schur(A)
        T = PartitionedMatrix(S, A.split - l)
        if l and not nonsingular(T.a22):
            continue
        return sc.sc_compose(A, l), target_schur(T)


CASES = {
    "sc_scale": _case_scale,
    "sc_add_const": _case_add_const,
    "sc_add": _case_add,
    "sc_short_left": _case_short_left,
    "sc_short_right": _case_short_right,
    "sc_dsum": _case_dsum,
    "sc_matmul": _case_matmul,
    "sc_sandwich": _case_sandwich,
    "sc_inv_as_schur": _case_inv_as_schur,
    "sc_inv_of_schur": _case_inv_of_schur,
    "sc_kron_right": _case_kron_right,
    "sc_kron_left": _case_kron_left,
    "sc_kron": _case_kron,
    "sc_scalar_product": _case_scalar_product,
    "sc_compose": _case_compose,
}

# operations whose witness carries the symmetry of structured inputs
PRESERVING = tuple(name for name in CASES if name != "sc_matmul")


def structured(M: Matrix, structure: str) -> bool:
    if structure == "real_symmetric":
        return M.is_real() and M.is_symmetric()
    if structure == "hermitian":
        return M.is_hermitian()
    return True


def run_oracle(name: str, count: int, seed: int) -> list[str]:
    """Run count plain cases of one operation; return descriptions of any mismatches."""
    g = Gen(seed)
    failures = []
    for i in range(count):
        w, expected = CASES[name](g)
        if w.schur != expected:
            failures.append(f"{name} case {i}: {w.schur} != {expected}")
    return failures


def run_symmetry(name: str, structure: str, count: int, seed: int) -> list[str]:
    g = Gen(seed, structure)
    failures = []
    for i in range(count):
        w, expected = CASES[name](g)
        if w.schur != expected or not structured(w.C.m, structure):
            failures.append(f"{name}/{structure} case {i}")
    return failures


# principal pivot transforms


def ppt2_target(A: PartitionedMatrix) -> Matrix:
    a22i = adjugate_inverse(A.a22)
    return assemble([[oracle_schur(A.m, A.split), A.a12 @ a22i], [-(a22i @ A.a21), a22i]])


def ppt1_target(A: PartitionedMatrix) -> Matrix:
    a11i = adjugate_inverse(A.a11)
    return assemble([[a11i, -(a11i @ A.a12)], [A.a21 @ a11i, A.a22 - A.a21 @ a11i @ A.a12]])


def _ppt_input(g: Gen) -> PartitionedMatrix:
    # both corner blocks invertible and a nonempty trailing block
    while True:
        s = g.rng.randint(2, 5)
        A = PartitionedMatrix(g.matrix(s), g.rng.randint(1, s - 1))
        if nonsingular(A.a11) and nonsingular(A.a22):
            return A


def run_ppt(count: int, seed: int, structure: str = "plain") -> list[str]:
    """ppt block formulas, the swap-conjugation relation and the Schur-complement witnesses."""
    g = Gen(seed, structure)
    failures = []
    for i in range(count):
        A = _ppt_input(g)
        k, p = A.split, A.tail
        p2, p1 = sc.ppt2(A), sc.ppt1(A)
        U = sc.swap_matrix(k, A.side)
        checks = {
            "ppt2 blocks": p2 == ppt2_target(A),
            "ppt1 blocks": p1 == ppt1_target(A),
            "swap relation": p1 == U @ sc.ppt2(swap_partition(A)) @ U.T,
            "ppt2 witness": sc.ppt_as_schur(A, "ppt2").schur == p2,
            "ppt1 witness": sc.ppt_as_schur(A, "ppt1").schur == p1,
            "signed ppt2": sc.ppt_as_schur(A, "ppt2", signed=True).schur
            == direct_sum(Matrix.identity(k), -Matrix.identity(p)) @ p2,
            "signed ppt1": sc.ppt_as_schur(A, "ppt1", signed=True).schur
            == direct_sum(-Matrix.identity(k), Matrix.identity(p)) @ p1,
        }
        if structure != "plain":
            checks["signed ppt2 structure"] = structured(sc.ppt_as_schur(A, "ppt2", signed=True).C.m, structure)
            checks["signed ppt1 structure"] = structured(sc.ppt_as_schur(A, "ppt1", signed=True).C.m, structure)
        failures += [f"case {i}: {name}" for name, ok in checks.items() if not ok]
    return failures
