"""Realization synthesis: express rational matrix functions as Schur complements of linear pencils."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .blockmat import Matrix, PartitionedMatrix, assemble, det, is_invertible, kron, rank_factorize, schur
from .errors import (
    IdenticallySingular,
    ModeUnsatisfiable,
    SameVariable,
    ShapeMismatch,
    SingularAtPoint,
    SingularBlock,
    VarCountMismatch,
    ZeroPolynomialMatrix,
)
from .field import ONE, ZERO, GaussianRational, coerce, gr
from .poly import (
    MatrixPoly,
    MultiPoly,
    RationalMatrixFunction,
    Symmetry,
    dehomogenize,
    dehomogenize_index,
    matpoly_det,
    realify,
    symmetry_profile,
)
from .schuralg import (
    kron_permutation,
    sc_add,
    sc_add_const,
    sc_inv_of_schur,
    sc_sandwich,
    sc_scalar_product,
    sc_scale,
)

SYMMETRIES = ("real", "symmetric", "hermitian")


@dataclass(frozen=True)
class Pencil:
    """A(z) = A_0 + z_1 A_1 + ... + z_n A_n with square coefficients of a common side."""

    coeffs: tuple[Matrix, ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if not coeffs:
            raise ShapeMismatch("a pencil needs at least the constant coefficient")
        s = coeffs[0].rows
        if any(c.shape != (s, s) for c in coeffs):
            raise ShapeMismatch("pencil coefficients must be square of equal side")

    @classmethod
    def constant(cls, A0: Matrix, nvars: int) -> Pencil:
        return cls((A0,) + (Matrix.zeros(A0.rows),) * nvars)

    @classmethod
    def zeros(cls, side: int, nvars: int) -> Pencil:
        return cls.constant(Matrix.zeros(side), nvars)

    @classmethod
    def from_matrix_poly(cls, P: MatrixPoly) -> Pencil:
        """Pencil of a polynomial matrix of degree at most one."""
        if P.degree() > 1:
            raise ValueError("polynomial matrix is not affine")
        n = P.nvars
        units = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
        return cls((P.coefficient_matrix((0,) * n),) + tuple(P.coefficient_matrix(u) for u in units))

    @property
    def nvars(self) -> int:
        return len(self.coeffs) - 1

    @property
    def side(self) -> int:
        return self.coeffs[0].rows

    def evaluate(self, point: Sequence) -> Matrix:
        if len(point) != self.nvars:
            raise VarCountMismatch(f"point has {len(point)} coordinates, expected {self.nvars}")
        acc = self.coeffs[0]
        for z, A in zip(point, self.coeffs[1:]):
            z = gr(z) if isinstance(z, str) else coerce(z)
            if z and not A.is_zero():
                acc = acc + A * z
        return acc

    def map(self, fn: Callable[[Matrix], Matrix]) -> Pencil:
        return Pencil(tuple(fn(c) for c in self.coeffs))

    def fold(self, j: int, value=1) -> Pencil:
        """Substitute z_j = value and drop that variable."""
        if not 1 <= j <= self.nvars:
            raise VarCountMismatch(f"variable z{j} outside 1..{self.nvars}")
        A0 = self.coeffs[0] + self.coeffs[j] * value
        return Pencil((A0,) + self.coeffs[1:j] + self.coeffs[j + 1:])

    def structure(self) -> Symmetry:
        return Symmetry(
            real=all(c.is_real() for c in self.coeffs),
            symmetric=all(c.is_symmetric() for c in self.coeffs),
            hermitian=all(c.is_hermitian() for c in self.coeffs),
            homogeneous=self.coeffs[0].is_zero(),
        )


@dataclass(frozen=True)
class Realization:
    """f(z) = A(z)/A22(z) for the pencil A(z) partitioned at split.

    certificate is a sample point where A22 is invertible, "symbolic" for an exact determinant
    check, () for an empty A22, or None while uncertified.
    """

    pencil: Pencil
    split: int
    provenance: tuple[str, ...] = ()
    certificate: object = field(default=None, compare=False)

    def __post_init__(self):
        if not 1 <= self.split <= self.pencil.side:
            raise ShapeMismatch(f"split {self.split} outside 1..{self.pencil.side}")

    @property
    def nvars(self) -> int:
        return self.pencil.nvars

    @property
    def side(self) -> int:
        return self.pencil.side

    @property
    def k(self) -> int:
        return self.split

    @property
    def coeffs(self) -> tuple[Matrix, ...]:
        return self.pencil.coeffs

    @property
    def flags(self) -> Symmetry:
        return self.pencil.structure()

    @property
    def is_degenerate(self) -> bool:
        return self.split == self.side

    def partitioned(self, j: int) -> PartitionedMatrix:
        return PartitionedMatrix(self.pencil.coeffs[j], self.split)

    def evaluate(self, point: Sequence) -> Matrix:
        M = PartitionedMatrix(self.pencil.evaluate(point), self.split)
        try:
            return schur(M)
        except SingularBlock:
            raise SingularAtPoint(f"A22 is singular at ({', '.join(str(x) for x in point)})") from None

    def with_provenance(self, *steps: str) -> Realization:
        return Realization(self.pencil, self.split, self.provenance + steps, self.certificate)


# certification

_CERT_SEED = 0x5EED


def _a22_poly(R: Realization) -> MatrixPoly:
    n, k = R.nvars, R.split
    blocks = [c.submatrix(k, R.side, k, R.side) for c in R.coeffs]
    size = R.side - k
    grid = []
    for i in range(size):
        row = []
        for j in range(size):
            terms = {(0,) * n: blocks[0][i, j]}
            for v in range(1, n + 1):
                terms[tuple(1 if t == v - 1 else 0 for t in range(n))] = blocks[v][i, j]
            row.append(MultiPoly(n, terms))
        grid.append(row)
    return MatrixPoly(grid, n)


def find_regular_point(R: Realization, tries: int = 64, bound: int = 8) -> tuple | None:
    """Deterministic search for a point where A22 is invertible."""
    if R.is_degenerate:
        return ()
    rng = random.Random(_CERT_SEED)
    k = R.split
    for attempt in range(tries):
        b = bound * (1 + attempt // 16)
        point = tuple(rng.randint(-b, b) for _ in range(R.nvars))
        M = R.pencil.evaluate(point)
        if is_invertible(M.submatrix(k, R.side, k, R.side)):
            return point
    return None


def certify(R: Realization, method: str = "sample") -> Realization:
    """Attach a certificate that det A22(z) is not identically zero, or raise IdenticallySingular."""
    if method not in ("sample", "symbolic"):
        raise ValueError(f"unknown certification method {method!r}")
    if R.is_degenerate:
        cert: object = ()
    elif method == "symbolic":
        if matpoly_det(_a22_poly(R)).is_zero():
            raise IdenticallySingular("det A22 vanishes identically")
        cert = "symbolic"
    else:
        cert = find_regular_point(R)
        if cert is None:
            if matpoly_det(_a22_poly(R)).is_zero():
                raise IdenticallySingular("det A22 vanishes identically")
            cert = "symbolic"
    return Realization(R.pencil, R.split, R.provenance, cert)


def degenerate(pencil: Pencil, provenance: tuple[str, ...] = ("pencil",)) -> Realization:
    """A pencil viewed as its own Schur complement (empty A22)."""
    return Realization(pencil, pencil.side, provenance, ())


# lifting constant-matrix constructions to pencils


def lift(construct: Callable, *args, note: str | None = None) -> Realization:
    """Apply an affine witness construction coefficient by coefficient.

    Realization and Pencil arguments vary with the coefficient index; anything else is passed
    through unchanged. Coefficient j >= 1 is construct(args_j) - construct(zero args).
    """
    nvars = {a.nvars for a in args if isinstance(a, (Realization, Pencil))}
    if len(nvars) != 1:
        raise VarCountMismatch("lifted operands disagree on the variable count")
    n = nvars.pop()

    def at(j: int) -> list:
        out = []
        for a in args:
            if isinstance(a, Realization):
                out.append(a.partitioned(j))
            elif isinstance(a, Pencil):
                out.append(a.coeffs[j])
            else:
                out.append(a)
        return out

    def zero() -> list:
        out = []
        for a in args:
            if isinstance(a, Realization):
                out.append(PartitionedMatrix(Matrix.zeros(a.side), a.split))
            elif isinstance(a, Pencil):
                out.append(Matrix.zeros(a.side))
            else:
                out.append(a)
        return out

    w0 = construct(*at(0), check=False)
    base = construct(*zero(), check=False).C.m
    coeffs = [w0.C.m] + [construct(*at(j), check=False).C.m - base for j in range(1, n + 1)]
    prov: tuple[str, ...] = ()
    for a in args:
        if isinstance(a, Realization):
            prov += a.provenance
    return Realization(Pencil(tuple(coeffs)), w0.C.split, prov + (note or w0.note,))


def _sum(parts: list[Realization]) -> Realization:
    acc = parts[0]
    for p in parts[1:]:
        acc = lift(sc_add, acc, p)
    return acc


# base gadgets


def realize_square(j: int, nvars: int) -> Realization:
    """[z_j^2] = A/A22 with A = [[0, z_j], [z_j, -1]]."""
    if not 1 <= j <= nvars:
        raise VarCountMismatch(f"variable z{j} outside 1..{nvars}")
    coeffs = [Matrix.zeros(2)] * (nvars + 1)
    coeffs[0] = Matrix([[0, 0], [0, -1]])
    coeffs[j] = Matrix([[0, 1], [1, 0]])
    return Realization(Pencil(tuple(coeffs)), 1, ("square",), ())


def realize_simple_product(j: int, l: int, nvars: int) -> Realization:
    """[z_j z_l] for distinct variables via a 3x3 pencil with constant det A22 = -1/16."""
    if j == l:
        raise SameVariable("use realize_square for a repeated variable")
    for v in (j, l):
        if not 1 <= v <= nvars:
            raise VarCountMismatch(f"variable z{v} outside 1..{nvars}")
    q = gr("1/4")
    coeffs = [Matrix.zeros(3)] * (nvars + 1)
    coeffs[0] = Matrix.diag([0, -q, q])
    coeffs[j] = Matrix([[0, q, -q], [q, 0, 0], [-q, 0, 0]])
    coeffs[l] = Matrix([[0, q, q], [q, 0, 0], [q, 0, 0]])
    return Realization(Pencil(tuple(coeffs)), 1, ("simple_product",), (0,) * nvars)


# Kronecker products of realizations


def _kron_pencils(A: Pencil, B: Pencil) -> Realization:
    """Realize the product pencil A(z) (x) B(z): linear part as a pencil, cross terms via gadgets."""
    if A.nvars != B.nvars:
        raise VarCountMismatch("pencils disagree on the variable count")
    n = A.nvars
    a, b = A.coeffs, B.coeffs
    linear = Pencil(
        (kron(a[0], b[0]),) + tuple(kron(a[v], b[0]) + kron(a[0], b[v]) for v in range(1, n + 1))
    )
    parts = []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            K = kron(a[i], b[i]) if i == j else kron(a[i], b[j]) + kron(a[j], b[i])
            if K.is_zero():
                continue
            gadget = realize_square(i, n) if i == j else realize_simple_product(i, j, n)
            parts.append(lift(sc_scalar_product, gadget, K))
    if not parts:
        return degenerate(linear, ("kron_pencils",))
    return lift(sc_add_const, _sum(parts), linear, note="kron_pencils")


def pencil_kron_const(R: Realization, B: Matrix | Pencil, certify_with: str | None = "sample") -> Realization:
    """Realize (A/A22)(z) (x) B(z) for a realization A and a constant or pencil B."""
    Bp = Pencil.constant(B, R.nvars) if isinstance(B, Matrix) else B
    C = _kron_pencils(R.pencil, Bp)
    # repartition: the trailing A22 (x) B block of A (x) B joins the inner block
    out = Realization(C.pencil, R.split * Bp.side, C.provenance + ("compose",))
    return certify(out, certify_with) if certify_with else out


def kron_realizations(RA: Realization, RB: Realization, certify_with: str | None = "sample") -> Realization:
    """Realize (A/A22) (x) (B/B22) from realizations over the same variables."""
    m, k, n, l = RA.side, RA.split, RB.side, RB.split
    C = _kron_pencils(RA.pencil, RB.pencil)
    P = kron_permutation(m, k, n, l)
    D = lift(sc_sandwich, P.T, C, P)
    out = Realization(D.pencil, k * l, D.provenance + ("compose",))
    return certify(out, certify_with) if certify_with else out


# polynomials


def _affine_pencil(P: MatrixPoly) -> Pencil:
    n = P.nvars
    return Pencil.from_matrix_poly(P.homogeneous_part(0) + P.homogeneous_part(1))


def realize_monomial(alpha: Sequence[int]) -> Realization:
    """Real symmetric realization of z^alpha, pairing variables left to right."""
    alpha = tuple(alpha)
    n = len(alpha)
    vars_ = [i + 1 for i, e in enumerate(alpha) for _ in range(e)]
    if len(vars_) <= 1:
        A0 = Matrix([[1 if not vars_ else 0]])
        coeffs = [Matrix.zeros(1)] * (n + 1)
        coeffs[0] = A0
        if vars_:
            coeffs[vars_[0]] = Matrix([[1]])
        return degenerate(Pencil(tuple(coeffs)), ("monomial",))
    pieces = []
    for t in range(0, len(vars_) - 1, 2):
        x, y = vars_[t], vars_[t + 1]
        pieces.append(realize_square(x, n) if x == y else realize_simple_product(x, y, n))
    if len(vars_) % 2:
        padded = realize_simple_product(vars_[-1], n + 1, n + 1)
        pieces.append(Realization(padded.pencil.fold(n + 1), 1, ("simple_product", "fold_pad")))
    acc = pieces[0]
    for p in pieces[1:]:
        acc = kron_realizations(acc, p, certify_with=None)
    return certify(acc.with_provenance("monomial"))


def realize_scalar_poly(p: MultiPoly) -> Realization:
    """Sum of scaled monomial realizations with the affine part added as a pencil."""
    n = p.nvars
    affine = _affine_pencil(MatrixPoly([[p]], n))
    higher = sorted(((a, c) for a, c in p.terms.items() if sum(a) > 1), key=lambda t: (sum(t[0]), t[0]))
    if not higher:
        return degenerate(affine, ("scalar_poly",))
    parts = [lift(sc_scale, realize_monomial(a), c) for a, c in higher]
    acc = _sum(parts)
    if not all(c.is_zero() for c in affine.coeffs):
        acc = lift(sc_add_const, acc, affine)
    return certify(acc.with_provenance("scalar_poly"))


MODES = ("plain", "real", "symmetric", "hermitian", "real_symmetric")


def mode_for(symmetries: Iterable[str]) -> str:
    """Factorization mode for a set of requested symmetries; any two of them force real symmetric."""
    s = set(symmetries)
    if len(s) >= 2:
        return "real_symmetric"
    if s:
        return s.pop()
    return "plain"


def _check_mode(P: MatrixPoly, mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if mode in ("real", "real_symmetric") and not P.is_real():
        raise ModeUnsatisfiable("polynomial matrix is not real")
    if mode in ("symmetric", "real_symmetric") and not P.is_symmetric():
        raise ModeUnsatisfiable("polynomial matrix is not symmetric")
    if mode == "hermitian" and not P.is_hermitian():
        raise ModeUnsatisfiable("polynomial matrix is not Hermitian")


def _structured_terms(H: MatrixPoly, mode: str) -> list[tuple[MultiPoly, Matrix]]:
    """Write H as a sum of p(z) B with B matching the mode's symmetry."""
    k = H.k
    E = Matrix.unit
    out = []
    if mode in ("plain", "real"):
        for i in range(k):
            for j in range(k):
                out.append((H[i, j], E(k, i, j)))
    elif mode in ("symmetric", "real_symmetric"):
        for i in range(k):
            out.append((H[i, i], E(k, i, i)))
            for j in range(i + 1, k):
                out.append((H[i, j], E(k, i, j) + E(k, j, i)))
    else:
        half = GaussianRational(1, 0) / 2
        i_unit = GaussianRational(0, 1)
        for i in range(k):
            out.append((H[i, i], E(k, i, i)))
            for j in range(i + 1, k):
                s = (H[i, j] + H[j, i]) * half
                a = (H[i, j] - H[j, i]) * (half / i_unit)
                out.append((s, E(k, i, j) + E(k, j, i)))
                out.append((a, (E(k, i, j) - E(k, j, i)) * i_unit))
    return [(p, B) for p, B in out if not p.is_zero()]


def realize_matrix_poly(P: MatrixPoly, mode: str = "plain") -> Realization:
    """Realize a polynomial matrix with coefficients carrying the mode's symmetry."""
    _check_mode(P, mode)
    if P.k == 1:
        return realize_scalar_poly(P[0, 0])
    affine = _affine_pencil(P)
    H = P - P.homogeneous_part(0) - P.homogeneous_part(1)
    terms = _structured_terms(H, mode)
    if not terms:
        return degenerate(affine, ("matrix_poly",))
    parts = []
    for p, B in terms:
        fac = rank_factorize(B, mode)
        parts.append(lift(lambda A, check: sc_scalar_product(A, B, mode, check, fac),
                          realize_scalar_poly(p), note="scalar_product"))
    acc = _sum(parts)
    if not all(c.is_zero() for c in affine.coeffs):
        acc = lift(sc_add_const, acc, affine)
    return certify(acc.with_provenance("matrix_poly"))


# shift for singular numerators


def _value_key(x: int) -> tuple[int, bool]:
    return (abs(x), x < 0)


def lattice_points(nvars: int) -> Iterable[tuple[int, ...]]:
    """Integer points by increasing max-norm, ties ordered coordinatewise by 0, 1, -1, 2, -2, ..."""
    if nvars == 0:
        yield ()
        return
    r = 0
    while True:
        vals = sorted(range(-r, r + 1), key=_value_key)
        for pt in itertools.product(vals, repeat=nvars):
            if max(abs(x) for x in pt) == r:
                yield pt
        r += 1


def choose_shift(P: MatrixPoly, max_radius: int = 64) -> tuple[tuple[int, ...], int]:
    """First lattice point z0 with P(z0) != 0 and least positive lambda0 with det(P(z0) - lambda0 I) != 0."""
    if P.is_zero():
        raise ZeroPolynomialMatrix("polynomial matrix is identically zero")
    k = P.k
    for z0 in lattice_points(P.nvars):
        if z0 and max(abs(x) for x in z0) > max_radius:
            break
        P0 = P.evaluate(z0)
        if P0.is_zero():
            continue
        for lam in range(1, k + 2):
            if det(P0 - Matrix.identity(k) * lam):
                return z0, lam
    raise ZeroPolynomialMatrix("no nonzero lattice value found")


def det_not_identically_zero(P: MatrixPoly, tries: int = 16) -> bool:
    rng = random.Random(_CERT_SEED)
    for _ in range(tries):
        pt = tuple(rng.randint(-64, 64) for _ in range(P.nvars))
        if det(P.evaluate(pt)):
            return True
    return not matpoly_det(P).is_zero()


# the synthesizer


def _normalize_symmetry(symmetry, profile: Symmetry) -> set[str]:
    if symmetry == "auto":
        return {s for s in SYMMETRIES if getattr(profile, s)}
    if symmetry in (None, "none", ""):
        return set()
    names = {symmetry} if isinstance(symmetry, str) else set(symmetry)
    names = {s for name in names for s in name.split(",") if s}
    if "real_symmetric" in names:
        names = (names - {"real_symmetric"}) | {"real", "symmetric"}
    unknown = names - set(SYMMETRIES)
    if unknown:
        raise ValueError(f"unknown symmetry {sorted(unknown)}")
    missing = sorted(s for s in names if not getattr(profile, s))
    if missing:
        raise ModeUnsatisfiable(f"function lacks the requested symmetry: {', '.join(missing)}")
    return names


def _realize_rational(f: RationalMatrixFunction, wanted: set[str]) -> Realization:
    if ({"real", "hermitian"} & wanted) and not f.q.is_real():
        f = realify(f)
    mode = mode_for(wanted)
    P, q = f.P, f.q
    if q.is_constant():
        return realize_matrix_poly(P * q.constant_term().inv(), mode)
    Rinv = lift(sc_inv_of_schur, realize_scalar_poly(q))
    if det_not_identically_zero(P):
        return kron_realizations(Rinv, realize_matrix_poly(P, mode))
    z0, lam = choose_shift(P)
    k = P.k
    P0 = P.evaluate(z0)
    shift = Matrix.identity(k) * lam - P0
    P1 = P + MatrixPoly.from_constant(shift, P.nvars)
    R1 = kron_realizations(Rinv, realize_matrix_poly(P1, mode))
    R2 = pencil_kron_const(Rinv, -shift)
    return lift(sc_add, R1, R2, note="shift_sum")


def rehomogenize(R: Realization, j: int, nvars: int) -> Realization:
    """From a realization of f(z_j = 1) build z_j B(z / z_j): A_0 = 0 and A_j = B_0."""
    B = R.coeffs
    coeffs = [Matrix.zeros(R.side)] * (nvars + 1)
    coeffs[j] = B[0]
    for v in range(1, nvars + 1):
        if v != j:
            coeffs[v] = B[v if v < j else v - 1]
    return Realization(Pencil(tuple(coeffs)), R.split, R.provenance + ("rehomogenize",))


def realize(
    f: RationalMatrixFunction,
    symmetry="auto",
    homogeneous: str = "auto",
    certify_with: str = "sample",
) -> Realization:
    """Synthesize a realization of f preserving the requested (or detected) symmetries.

    symmetry: "auto", "none", a name or an iterable of names among real, symmetric, hermitian.
    homogeneous: "auto" uses it when present, "force" requires it, "off" ignores it.
    """
    if homogeneous not in ("auto", "force", "off"):
        raise ValueError(f"unknown homogeneous option {homogeneous!r}")
    profile = symmetry_profile(f)
    wanted = _normalize_symmetry(symmetry, profile)
    if homogeneous == "force" and not profile.homogeneous:
        raise ModeUnsatisfiable("function is not homogeneous of degree one")
    homog = profile.homogeneous and homogeneous != "off"
    n, k = f.nvars, f.k
    if f.P.is_zero():
        R = degenerate(Pencil.zeros(k, n), ("zero",))
    elif homog:
        j = dehomogenize_index(f)
        g = dehomogenize(f, j)
        R = rehomogenize(_realize_rational(g, wanted), j, n)
    else:
        R = _realize_rational(f, wanted)
    return certify(R, certify_with)


# special forms embedded as realizations


def _blocks(grid) -> Matrix:
    return assemble(grid)


def _finish(coeffs: list[Matrix], split: int, name: str) -> Realization:
    return certify(Realization(Pencil(tuple(coeffs)), split, (name,)))


def kalman(A: Matrix, B: Matrix, C: Matrix, D: Matrix) -> Realization:
    """D + C (z_1 I - A)^-1 B."""
    return descriptor(A, B, C, D, Matrix.identity(A.rows))


def descriptor(A: Matrix, B: Matrix, C: Matrix, D: Matrix, E: Matrix) -> Realization:
    """D + C (z_1 E - A)^-1 B."""
    p, s = D.rows, A.rows
    A0 = _blocks([[D, C], [B, A]])
    A1 = _blocks([[Matrix.zeros(p), Matrix.zeros(p, s)], [Matrix.zeros(s, p), -E]])
    return _finish([A0, A1], p, "descriptor")


def descriptor_multi(As: Sequence[Matrix], B: Matrix, C: Matrix, D: Matrix, E: Matrix) -> Realization:
    """D + C (E - sum z_j A_j)^-1 B."""
    p, s = D.rows, E.rows
    zp, zps, zsp = Matrix.zeros(p), Matrix.zeros(p, s), Matrix.zeros(s, p)
    coeffs = [_blocks([[D, C], [B, -E]])] + [_blocks([[zp, zps], [zsp, Aj]]) for Aj in As]
    return _finish(coeffs, p, "descriptor_multi")


def fornasini_marchesini(As: Sequence[Matrix], Bs: Sequence[Matrix], C: Matrix, D: Matrix) -> Realization:
    """D + C (I - sum z_j A_j)^-1 (sum z_j B_j)."""
    if len(As) != len(Bs):
        raise ShapeMismatch("need one B_j per A_j")
    p, s = D.rows, C.cols
    zp, zps = Matrix.zeros(p), Matrix.zeros(p, s)
    coeffs = [_blocks([[D, C], [Matrix.zeros(s, p), -Matrix.identity(s)]])]
    coeffs += [_blocks([[zp, zps], [Bj, Aj]]) for Aj, Bj in zip(As, Bs)]
    return _finish(coeffs, p, "fornasini_marchesini")


def centered_at_zero(As: Sequence[Matrix], Bs: Sequence[Matrix], C: Matrix, D: Matrix) -> Realization:
    """D + C (I - A(z))^-1 B(z) with A(z), B(z) linear and vanishing at 0."""
    R = fornasini_marchesini(As, Bs, C, D)
    return Realization(R.pencil, R.split, ("centered_at_zero",), R.certificate)


def givone_roesser(A: Matrix, B: Matrix, C: Matrix, D: Matrix, dims: Sequence[int]) -> Realization:
    """D + C (I - Z(z) A)^-1 Z(z) B with Z(z) = z_1 I_{d_1} (+) ... (+) z_n I_{d_n}."""
    if sum(dims) != A.rows:
        raise ShapeMismatch("state dimensions do not add up to the side of A")
    As, Bs, start = [], [], 0
    for d in dims:
        proj = Matrix.diag([1 if start <= t < start + d else 0 for t in range(A.rows)])
        As.append(proj @ A)
        Bs.append(proj @ B)
        start += d
    R = fornasini_marchesini(As, Bs, C, D)
    return Realization(R.pencil, R.split, ("givone_roesser",), R.certificate)


def formal_linear(Qs: Sequence[Matrix], u: Matrix, v: Matrix) -> Realization:
    """-u Q(z)^-1 v with Q(z) = Q_0 + sum z_j Q_j."""
    p, s = u.rows, Qs[0].rows
    zp, zps, zsp = Matrix.zeros(p), Matrix.zeros(p, s), Matrix.zeros(s, p)
    coeffs = [_blocks([[zp, u], [v, Qs[0]]])] + [_blocks([[zp, zps], [zsp, Q]]) for Q in Qs[1:]]
    return _finish(coeffs, p, "formal_linear")


def recognizable(As: Sequence[Matrix], B: Matrix, C: Matrix) -> Realization:
    """C (I - sum z_j A_j)^-1 B."""
    p, s = C.rows, B.rows
    zp, zps, zsp = Matrix.zeros(p), Matrix.zeros(p, s), Matrix.zeros(s, p)
    coeffs = [_blocks([[zp, C], [B, -Matrix.identity(s)]])]
    coeffs += [_blocks([[zp, zps], [zsp, Aj]]) for Aj in As]
    return _finish(coeffs, p, "recognizable")


def butterfly(
    r0: Matrix,
    r1: Matrix,
    Lambdas: Sequence[Matrix],
    ells: Sequence[Matrix],
    As: Sequence[Matrix],
    J: Matrix,
) -> Realization:
    """r(z) + l(z) l(z)^T + Lambda(z) (J - A(z))^-1 Lambda(z)^T as the sum of two Schur complements.

    r(z) = r0 + z_1 r1, Lambda(z) = Lambda_0 + sum z_j Lambda_j, l(z) = sum z_j l_j, A(z) = sum z_j A_j.
    """
    n = len(As)
    if len(Lambdas) != n + 1 or len(ells) != n or n < 1:
        raise ShapeMismatch("need Lambda_0..Lambda_n, l_1..l_n and A_1..A_n")
    p, s, t = r0.rows, J.rows, ells[0].cols
    zp = Matrix.zeros(p)
    first = [_blocks([[r0, Lambdas[0]], [Lambdas[0].T, -J]])]
    second = [_blocks([[zp, Matrix.zeros(p, t)], [Matrix.zeros(t, p), -Matrix.identity(t)]])]
    for j in range(1, n + 1):
        rj = r1 if j == 1 else zp
        first.append(_blocks([[rj, Lambdas[j]], [Lambdas[j].T, As[j - 1]]]))
        second.append(_blocks([[zp, ells[j - 1]], [ells[j - 1].T, Matrix.zeros(t)]]))
    R1 = Realization(Pencil(tuple(first)), p, ("butterfly_resolvent",))
    R2 = Realization(Pencil(tuple(second)), p, ("butterfly_outer",))
    out = lift(sc_add, R1, R2, note="butterfly")
    return certify(out)


SPECIAL_FORMS: dict[str, Callable[..., Realization]] = {
    "kalman": kalman,
    "descriptor": descriptor,
    "descriptor_multi": descriptor_multi,
    "fornasini_marchesini": fornasini_marchesini,
    "givone_roesser": givone_roesser,
    "formal_linear": formal_linear,
    "recognizable": recognizable,
    "centered_at_zero": centered_at_zero,
    "butterfly": butterfly,
}


def embed_special(form: str, **params) -> Realization:
    """Dispatch to a special-form constructor by name."""
    try:
        fn = SPECIAL_FORMS[form]
    except KeyError:
        raise ValueError(f"unknown special form {form!r}; choose from {sorted(SPECIAL_FORMS)}") from None
    return fn(**params)
