import pytest

from pencilforge import schuralg as sc
from pencilforge.blockmat import Matrix, PartitionedMatrix, commutation_matrix, kron, schur
from pencilforge.errors import ShapeMismatch, SingularBlock, SingularInnerBlock, SingularSchur, ZeroScalar
from calculus_oracles import CASES, PRESERVING, run_oracle, run_ppt, run_symmetry
from known_pencils import COMPOSE_A, KRON_A, KRON_B, KRON_M

P = PartitionedMatrix


def test_scale_examples():
    assert sc.sc_scale(KRON_A, 1).C == KRON_A
    assert sc.sc_scale(KRON_A, -3).schur == Matrix([[3]])
    with pytest.raises(ZeroScalar):
        sc.sc_scale(KRON_A, 0)


def test_add_examples():
    assert sc.sc_add_const(KRON_A, Matrix([[1]])).schur == Matrix([[0]])
    assert sc.sc_add(KRON_A, KRON_B).schur == Matrix([["-4/5"]])
    zero_witness = P(Matrix([[0, 0], [0, 1]]), 1)
    assert sc.sc_add(KRON_A, zero_witness).schur == schur(KRON_A)


def test_short_and_dsum_examples():
    assert sc.sc_short_left(KRON_A, 0).C.m == KRON_A.m
    assert sc.sc_short_left(KRON_A, 1).schur == Matrix([[-1, 0], [0, 0]])
    assert sc.sc_short_right(KRON_B, 1).schur == Matrix([[0, 0], [0, "1/5"]])
    assert sc.sc_dsum(KRON_A, KRON_B).schur == Matrix([[-1, 0], [0, "1/5"]])


def test_matmul_and_sandwich_examples():
    assert sc.sc_matmul(KRON_A, KRON_B).schur == Matrix([["-1/5"]])
    ident = P(Matrix.identity(2), 1)
    assert sc.sc_matmul(KRON_A, ident).schur == schur(KRON_A)
    assert sc.sc_sandwich(Matrix([[2]]), KRON_A, Matrix([[3]])).schur == Matrix([[-6]])
    assert sc.sc_sandwich(Matrix([[1]]), KRON_A, Matrix([[1]])).C == KRON_A


def test_matmul_c22_inverse():
    w = sc.sc_matmul(KRON_A, KRON_B)
    assert sc.matmul_c22_inverse(KRON_A, KRON_B) @ w.C.a22 == Matrix.identity(2)


def test_inverse_examples():
    assert sc.sc_inv_as_schur(Matrix([[2]])).schur == Matrix([["1/2"]])
    assert sc.sc_inv_as_schur(Matrix([[2, 3], [3, 5]])).schur == Matrix([[5, -3], [-3, 2]])
    assert sc.sc_inv_of_schur(KRON_A).schur == Matrix([[-1]])
    assert sc.sc_inv_of_schur(KRON_B).schur == Matrix([[5]])
    with pytest.raises(SingularSchur):
        sc.sc_inv_of_schur(P(Matrix([[1, 1], [1, 1]]), 1))


def test_kron_worked_examples():
    assert sc.sc_kron_right(KRON_A, KRON_B.m).schur == Matrix([[-2, -3], [-3, -5]])
    assert sc.sc_kron_left(KRON_A.m, KRON_B).schur == Matrix([[0, "2/5"], ["2/5", "4/5"]])
    w = sc.sc_kron(KRON_A, KRON_B)
    assert w.C.m == KRON_M and w.C.split == 1
    assert w.schur == Matrix([["-1/5"]])
    assert sc.sc_kron(P(Matrix.identity(2), 1), P(Matrix.identity(2), 1)).schur == Matrix([[1]])


def test_kron_identity_factors():
    I2 = Matrix.identity(2)
    assert sc.sc_kron_right(KRON_A, I2).schur == kron(schur(KRON_A), I2)
    assert sc.sc_kron_left(I2, KRON_B).schur == kron(I2, schur(KRON_B))


def test_commutation_examples():
    assert commutation_matrix(1, 2) == Matrix.identity(2)
    assert commutation_matrix(2, 2) == Matrix([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
    assert commutation_matrix(3, 1) == Matrix.identity(3)


def test_scalar_product_examples():
    w = sc.sc_scalar_product(KRON_A, Matrix.zeros(3))
    assert w.schur == Matrix.zeros(3)
    assert sc.sc_scalar_product(KRON_A, KRON_B.m).schur == Matrix([[-2, -3], [-3, -5]])
    two = P(Matrix([[2]]), 1)
    w = sc.sc_scalar_product(two, Matrix([[0, 1], [1, 0]]), "symmetric")
    assert w.schur == Matrix([[0, 2], [2, 0]])
    assert w.C.m.is_symmetric()


def test_compose_worked_example():
    assert schur(COMPOSE_A) == Matrix([[3, 2], [2, 1]])
    w = sc.sc_compose(COMPOSE_A, 1)
    assert w.schur == Matrix([[-1]])
    assert w.certificate == Matrix([[1]])
    assert sc.sc_compose(COMPOSE_A, 0).schur == schur(COMPOSE_A)


def test_compose_errors():
    with pytest.raises(ShapeMismatch):
        sc.sc_compose(COMPOSE_A, 2)
    singular_inner = P(Matrix([[1, 0, 0], [0, 0, 0], [0, 0, 1]]), 2)
    with pytest.raises(SingularInnerBlock):
        sc.sc_compose(singular_inner, 1)


def test_singular_block_is_reported():
    with pytest.raises(SingularBlock):
        sc.sc_add_const(P(Matrix([[1, 1], [1, 0]]), 1), Matrix([[1]]))


def test_ppt_examples():
    assert sc.ppt2(P(Matrix.identity(3), 1)) == Matrix.identity(3)
    assert sc.ppt2(KRON_A) == Matrix([[-1, "1/2"], ["-1/2", "1/4"]])
    assert schur(sc.ppt_as_schur(P(Matrix.identity(3), 2)).C) == Matrix.identity(3)
    sym = sc.ppt_as_schur(KRON_B, "ppt2", signed=True)
    assert sym.C.m.is_symmetric()


@pytest.mark.parametrize("name", sorted(CASES))
def test_calculus_oracle(name):
    assert run_oracle(name, 25, seed=11) == []


@pytest.mark.parametrize("structure", ["real_symmetric", "hermitian"])
@pytest.mark.parametrize("name", sorted(PRESERVING))
def test_symmetry_propagation(name, structure):
    assert run_symmetry(name, structure, 8, seed=5) == []


@pytest.mark.parametrize("structure", ["plain", "real_symmetric", "hermitian"])
def test_ppt_relations(structure):
    assert run_ppt(25, seed=2, structure=structure) == []
