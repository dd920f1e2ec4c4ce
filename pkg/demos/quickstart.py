# Realizing a rational function as the Schur complement of a linear pencil

# Everything is exact: entries are Gaussian rationals, so equality checks are equality.

from pencilforge import compile_expression, realize, symmetry_profile
from pencilforge.verify import check_pencil_structure, check_realization

# Parse an expression. Variables are inferred in index order.

f, variables = compile_expression("z2/z1")
print(variables)
print(symmetry_profile(f))

# Realize it. The result is a pencil A(z) = A0 + z1 A1 + z2 A2 with a split k,
# and f(z) equals the Schur complement A(z)/A22(z).

R = realize(f)
print(R.side, R.split)
for j, A in enumerate(R.coeffs):
    print(f"A{j} =", A)

# Evaluate at a point and compare with the function itself.

print(R.evaluate((2, 6)), f.evaluate((2, 6)))

# Seeded random checks at Gaussian-integer points.

report = check_realization(R, f, 20, 1)
print(report.all_passed, report.trials, report.skipped_singular)

# The pencil carries the function's symmetries coefficientwise.

print(check_pencil_structure(R))

# A degree-one homogeneous function gets a pencil with zero constant term.

g, _ = compile_expression("z2*z3/z1")
H = realize(g)
print(H.side, H.coeffs[0].is_zero())
