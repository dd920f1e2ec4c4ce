"""Hand-entered reference pencils and block matrices shared by several test modules."""

from pencilforge.blockmat import Matrix, PartitionedMatrix
from pencilforge.expr import compile_expression
from pencilforge.realize import Pencil, Realization

Q = "1/4"
MQ = "-1/4"


def realization(coeffs, split, name):
    return Realization(Pencil(tuple(Matrix(c) for c in coeffs)), split, (name,))


def function(source, variables):
    f, _ = compile_expression(source, variables)
    return f


# z2/z1: 4x4, split 1, real symmetric coefficients
Z2_OVER_Z1 = realization(
    [
        [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, Q, 0], [0, 0, 0, MQ]],
        [[0, 0, 0, 0], [0, 0, MQ, Q], [0, MQ, 0, 0], [0, Q, 0, 0]],
        [[0, 1, 0, 0], [1, 0, MQ, MQ], [0, MQ, 0, 0], [0, MQ, 0, 0]],
    ],
    1,
    "z2/z1",
)

# z2*z3/z1: 3x3, split 1, zero constant coefficient
Z2Z3_OVER_Z1 = realization(
    [
        [[0, 0, 0], [0, 0, 0], [0, 0, 0]],
        [[0, 0, 0], [0, MQ, 0], [0, 0, Q]],
        [[0, Q, MQ], [Q, 0, 0], [MQ, 0, 0]],
        [[0, Q, Q], [Q, 0, 0], [Q, 0, 0]],
    ],
    1,
    "z2*z3/z1",
)

# (9 + 55 w1) / (3 + 3 z1) in variables (z1, w1)
D_165 = "165/4"
D_M165 = "-165/4"
NINE_55_OVER_3_3 = realization(
    [
        [[0, 9, 0, 0], [9, -27, 0, 0], [0, 0, D_165, 0], [0, 0, 0, D_M165]],
        [[0, 0, 0, 0], [0, -27, D_M165, D_165], [0, D_M165, 0, 0], [0, D_165, 0, 0]],
        [[0, 55, 0, 0], [55, -165, D_M165, D_M165], [0, D_M165, 0, 0], [0, D_M165, 0, 0]],
    ],
    1,
    "(9+55w1)/(3+3z1)",
)

# a variant w1 coefficient missing the 55 in the corner entries; it does not verify
NINE_55_VARIANT_D2 = Matrix([[0, 0, 0, 0], [0, -165, D_M165, D_M165], [0, D_M165, 0, 0], [0, D_M165, 0, 0]])

# [3 + 3 z1]^{-1} as a Schur complement of a 2x2 pencil in (z1, w1)
INV_3_3Z1 = realization([[[0, 1], [1, -3]], [[0, 0], [0, -3]], [[0, 0], [0, 0]]], 1, "1/(3+3z1)")

# z1 with a nonzero constant coefficient: [[z1, 0], [0, 1]], split 1
Z1_SHIFTED = realization([[[0, 0], [0, 1]], [[1, 0], [0, 0]]], 1, "z1")

# Kronecker reference examples
KRON_A = PartitionedMatrix(Matrix([[0, 2], [2, 4]]), 1)
KRON_B = PartitionedMatrix(Matrix([[2, 3], [3, 5]]), 1)
KRON_M = Matrix([[0, 4, 0, 6], [4, 8, 6, 12], [0, 6, 0, 10], [6, 12, 10, 20]])

# composition reference example
COMPOSE_A = PartitionedMatrix(Matrix([[4, 3, 1, 1], [4, 2, 2, 1], [1, 1, 1, 1], [2, 1, 2, 1]]), 2)

# square and product gadgets
SQUARE_A0 = Matrix([[0, 0], [0, -1]])
SQUARE_A1 = Matrix([[0, 1], [1, 0]])
PRODUCT_A1 = Matrix([[0, Q, MQ], [Q, 0, 0], [MQ, 0, 0]])
PRODUCT_A2 = Matrix([[0, Q, Q], [Q, 0, 0], [Q, 0, 0]])
PRODUCT_A0 = Matrix([[0, 0, 0], [0, MQ, 0], [0, 0, Q]])
