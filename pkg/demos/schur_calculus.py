# Building new Schur complements from old ones

# Each sc_* operation returns a witness: a partitioned matrix C whose Schur complement
# is the combined result, plus the matrix it was built from.

from pencilforge import Matrix, PartitionedMatrix, kron, schur
from pencilforge import schuralg as sc

A = PartitionedMatrix(Matrix([[0, 2], [2, 4]]), 1)
B = PartitionedMatrix(Matrix([[2, 3], [3, 5]]), 1)
print(schur(A), schur(B))

# Kronecker products: with a plain matrix on either side, and of two Schur complements.

print(sc.sc_kron_right(A, B.m).schur)
print(sc.sc_kron_left(A.m, B).schur)
w = sc.sc_kron(A, B)
print(w.C.m)
print(w.schur, kron(schur(A), schur(B)))

# Schur complement of a Schur complement, taken in one step.

C = PartitionedMatrix(Matrix([[4, 3, 1, 1], [4, 2, 2, 1], [1, 1, 1, 1], [2, 1, 2, 1]]), 2)
print(schur(C))
w = sc.sc_compose(C, 1)
print(w.schur, w.certificate)

# Principal pivot transforms swap a corner block with its inverse.

print(sc.ppt2(B))
print(sc.ppt1(B))
print(sc.ppt_as_schur(B, "ppt2").schur == sc.ppt2(B))

# ppt1 needs an invertible leading block, which A lacks.

try:
    sc.ppt1(A)
except Exception as e:
    print(type(e).__name__, e)

# Inverses are Schur complements too.

M = Matrix([[1, 2], [3, 4]])
print(sc.sc_inv_as_schur(M).schur)
