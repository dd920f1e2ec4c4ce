"""Sparse multivariate polynomials, polynomial matrices and rational matrix functions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .blockmat import Matrix
from .errors import (
    AllSubstitutionsSingular,
    DivisionByZero,
    IdenticallyZeroDenominator,
    ShapeMismatch,
    SymmetryAbsent,
    VarCountMismatch,
)
from .field import ONE, ZERO, GaussianRational, coerce, gr

Exponent = tuple[int, ...]


def _scalar(value) -> GaussianRational:
    if isinstance(value, str):
        return gr(value)
    c = coerce(value)
    if c is NotImplemented:
        raise TypeError(f"not a scalar: {value!r}")
    return c


class MultiPoly:
    """Polynomial in z_1..z_n stored as {exponent tuple: nonzero coefficient}.

    Variables are numbered from 1 in the public API.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, object] | None = None):
        clean: dict[Exponent, GaussianRational] = {}
        for alpha, c in (terms or {}).items():
            alpha = tuple(alpha)
            if len(alpha) != nvars or any(e < 0 for e in alpha):
                raise VarCountMismatch(f"exponent {alpha} does not fit {nvars} variables")
            c = _scalar(c)
            if c:
                clean[alpha] = clean.get(alpha, ZERO) + c
                if not clean[alpha]:
                    del clean[alpha]
        self.nvars = nvars
        self.terms = clean

    @classmethod
    def _wrap(cls, nvars: int, terms: dict[Exponent, GaussianRational]) -> MultiPoly:
        p = object.__new__(cls)
        p.nvars, p.terms = nvars, terms
        return p

    @classmethod
    def zero(cls, nvars: int) -> MultiPoly:
        return cls._wrap(nvars, {})

    @classmethod
    def const(cls, value, nvars: int) -> MultiPoly:
        c = _scalar(value)
        return cls._wrap(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def one(cls, nvars: int) -> MultiPoly:
        return cls.const(1, nvars)

    @classmethod
    def var(cls, j: int, nvars: int) -> MultiPoly:
        if not 1 <= j <= nvars:
            raise VarCountMismatch(f"variable z{j} outside 1..{nvars}")
        alpha = tuple(1 if i == j - 1 else 0 for i in range(nvars))
        return cls._wrap(nvars, {alpha: ONE})

    @classmethod
    def monomial(cls, alpha: Sequence[int], coeff=1) -> MultiPoly:
        return cls(len(alpha), {tuple(alpha): coeff})

    # predicates

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(a) for a in self.terms)

    def constant_term(self) -> GaussianRational:
        return self.terms.get((0,) * self.nvars, ZERO)

    def is_real(self) -> bool:
        return all(c.is_real for c in self.terms.values())

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(a) for a in self.terms), default=-1)

    def homogeneous_part(self, d: int) -> MultiPoly:
        return MultiPoly._wrap(self.nvars, {a: c for a, c in self.terms.items() if sum(a) == d})

    def variables(self) -> set[int]:
        return {i + 1 for a in self.terms for i, e in enumerate(a) if e}

    # arithmetic

    def _coerce(self, other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise VarCountMismatch(f"{self.nvars} vs {other.nvars} variables")
            return other
        c = coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return MultiPoly.const(c, self.nvars)

    def __add__(self, other) -> MultiPoly:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for a, c in o.terms.items():
            s = out.get(a, ZERO) + c
            if s:
                out[a] = s
            else:
                out.pop(a, None)
        return MultiPoly._wrap(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly._wrap(self.nvars, {a: -c for a, c in self.terms.items()})

    def __sub__(self, other) -> MultiPoly:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> MultiPoly:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> MultiPoly:
        if not isinstance(other, MultiPoly):
            c = coerce(other)
            if c is NotImplemented:
                return NotImplemented
            if not c:
                return MultiPoly.zero(self.nvars)
            return MultiPoly._wrap(self.nvars, {a: v * c for a, v in self.terms.items()})
        o = self._coerce(other)
        out: dict[Exponent, GaussianRational] = {}
        for a, c in self.terms.items():
            for b, d in o.terms.items():
                e = tuple(x + y for x, y in zip(a, b))
                out[e] = out.get(e, ZERO) + c * d
        return MultiPoly._wrap(self.nvars, {a: c for a, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> MultiPoly:
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result, base = MultiPoly.one(self.nvars), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> MultiPoly:
        """Coefficient conjugate: p-bar(z) = conj(p(conj z))."""
        return MultiPoly._wrap(self.nvars, {a: c.conj() for a, c in self.terms.items()})

    def exact_div(self, d: MultiPoly) -> MultiPoly:
        """Quotient of an exact division; raises ValueError if d does not divide self."""
        d = self._coerce(d)
        if d.is_zero():
            raise DivisionByZero("division by the zero polynomial")
        lead_d = max(d.terms)
        inv_d = d.terms[lead_d].inv()
        rem = dict(self.terms)
        quot: dict[Exponent, GaussianRational] = {}
        while rem:
            lead = max(rem)
            shift = tuple(x - y for x, y in zip(lead, lead_d))
            if any(s < 0 for s in shift):
                raise ValueError("polynomial division is not exact")
            c = rem[lead] * inv_d
            quot[shift] = c
            for b, v in d.terms.items():
                e = tuple(x + y for x, y in zip(b, shift))
                s = rem.get(e, ZERO) - c * v
                if s:
                    rem[e] = s
                else:
                    rem.pop(e, None)
        return MultiPoly._wrap(self.nvars, quot)

    # evaluation and substitution

    def evaluate(self, point: Sequence) -> GaussianRational:
        if len(point) != self.nvars:
            raise VarCountMismatch(f"point has {len(point)} coordinates, expected {self.nvars}")
        pts = [_scalar(x) for x in point]
        powers: list[dict[int, GaussianRational]] = [{0: ONE} for _ in pts]

        def pw(i: int, e: int) -> GaussianRational:
            cache = powers[i]
            if e not in cache:
                cache[e] = pts[i] ** e
            return cache[e]

        acc = ZERO
        for a, c in self.terms.items():
            t = c
            for i, e in enumerate(a):
                if e:
                    t = t * pw(i, e)
            acc = acc + t
        return acc

    def specialize(self, j: int, value) -> MultiPoly:
        """Substitute z_j = value and drop the variable, leaving nvars - 1 variables."""
        if not 1 <= j <= self.nvars:
            raise VarCountMismatch(f"variable z{j} outside 1..{self.nvars}")
        v = _scalar(value)
        out: dict[Exponent, GaussianRational] = {}
        for a, c in self.terms.items():
            e = a[:j - 1] + a[j:]
            out[e] = out.get(e, ZERO) + c * v ** a[j - 1]
        return MultiPoly._wrap(self.nvars - 1, {a: c for a, c in out.items() if c})

    def embed(self, nvars: int, positions: Sequence[int] | None = None) -> MultiPoly:
        """Re-express in nvars variables, sending z_i to z_{positions[i-1]} (default: identity)."""
        positions = list(positions) if positions is not None else list(range(1, self.nvars + 1))
        if len(positions) != self.nvars or any(not 1 <= p <= nvars for p in positions):
            raise VarCountMismatch("bad variable embedding")
        out: dict[Exponent, GaussianRational] = {}
        for a, c in self.terms.items():
            e = [0] * nvars
            for i, x in enumerate(a):
                e[positions[i] - 1] += x
            e = tuple(e)
            out[e] = out.get(e, ZERO) + c
        return MultiPoly._wrap(nvars, {a: c for a, c in out.items() if c})

    def scaled(self) -> MultiPoly:
        """p(lambda z) as a polynomial in nvars + 1 variables, lambda last."""
        return MultiPoly._wrap(self.nvars + 1, {a + (sum(a),): c for a, c in self.terms.items()})

    # comparison and display

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        c = coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return self.terms == MultiPoly.const(c, self.nvars).terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[Exponent, GaussianRational]]:
        """Terms by descending total degree, then descending lexicographic exponent."""
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-x for x in t[0])))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for a, c in self.sorted_terms():
            mono = "*".join(f"z{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(a) if e)
            if not mono:
                body, sign = _coef_text(c), ""
            elif c == ONE:
                body, sign = mono, ""
            elif c == -ONE:
                body, sign = mono, "-"
            else:
                body, sign = f"{_coef_text(c)}*{mono}", ""
            parts.append(sign + body)
        text = parts[0]
        for p in parts[1:]:
            text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return text

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {str(self)!r})"


def _coef_text(c: GaussianRational) -> str:
    s = str(c)
    return f"({s})" if c.re and c.im else s


class MatrixPoly:
    """Matrix of MultiPoly entries over a shared variable count."""

    __slots__ = ("rows", "cols", "nvars", "entries")

    def __init__(self, entries: Sequence[Sequence[MultiPoly]], nvars: int | None = None):
        grid = tuple(tuple(row) for row in entries)
        rows = len(grid)
        cols = len(grid[0]) if grid else 0
        if any(len(r) != cols for r in grid):
            raise ShapeMismatch("ragged polynomial matrix")
        if nvars is None:
            if not rows or not cols:
                raise ShapeMismatch("cannot infer nvars of an empty matrix")
            nvars = grid[0][0].nvars
        if any(p.nvars != nvars for r in grid for p in r):
            raise VarCountMismatch("entries disagree on nvars")
        self.rows, self.cols, self.nvars, self.entries = rows, cols, nvars, grid

    @classmethod
    def from_constant(cls, M: Matrix, nvars: int) -> MatrixPoly:
        return cls([[MultiPoly.const(x, nvars) for x in row] for row in M.data], nvars)

    @classmethod
    def identity(cls, k: int, nvars: int) -> MatrixPoly:
        return cls.from_constant(Matrix.identity(k), nvars)

    @classmethod
    def zeros(cls, rows: int, cols: int, nvars: int) -> MatrixPoly:
        return cls([[MultiPoly.zero(nvars)] * cols for _ in range(rows)], nvars)

    @property
    def k(self) -> int:
        if self.rows != self.cols:
            raise ShapeMismatch("matrix polynomial is not square")
        return self.rows

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, index: tuple[int, int]) -> MultiPoly:
        i, j = index
        return self.entries[i][j]

    def map(self, fn) -> MatrixPoly:
        grid = [[fn(p) for p in row] for row in self.entries]
        nvars = grid[0][0].nvars if grid and grid[0] else self.nvars
        return MatrixPoly(grid, nvars)

    def __add__(self, other: MatrixPoly) -> MatrixPoly:
        if not isinstance(other, MatrixPoly):
            return NotImplemented
        if self.shape != other.shape:
            raise ShapeMismatch(f"shapes {self.shape} and {other.shape} differ")
        return MatrixPoly(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)], self.nvars
        )

    def __neg__(self) -> MatrixPoly:
        return self.map(lambda p: -p)

    def __sub__(self, other: MatrixPoly) -> MatrixPoly:
        if not isinstance(other, MatrixPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar) -> MatrixPoly:
        """Entrywise product with a scalar or a scalar polynomial."""
        if not isinstance(scalar, MultiPoly) and coerce(scalar) is NotImplemented:
            return NotImplemented
        return self.map(lambda p: p * scalar)

    __rmul__ = __mul__

    def __matmul__(self, other: MatrixPoly) -> MatrixPoly:
        if not isinstance(other, MatrixPoly):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        if self.nvars != other.nvars:
            raise VarCountMismatch("operands disagree on nvars")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = MultiPoly.zero(self.nvars)
                for t in range(self.cols):
                    a, b = self.entries[i][t], other.entries[t][j]
                    if a.terms and b.terms:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return MatrixPoly(out, self.nvars)

    def transpose(self) -> MatrixPoly:
        return MatrixPoly([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)], self.nvars)

    @property
    def T(self) -> MatrixPoly:
        return self.transpose()

    def conj(self) -> MatrixPoly:
        return self.map(MultiPoly.conj)

    def adjoint(self) -> MatrixPoly:
        return self.conj().transpose()

    def is_zero(self) -> bool:
        return all(p.is_zero() for r in self.entries for p in r)

    def is_real(self) -> bool:
        return all(p.is_real() for r in self.entries for p in r)

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self == self.transpose()

    def is_hermitian(self) -> bool:
        return self.rows == self.cols and self == self.adjoint()

    def degree(self) -> int:
        return max((p.degree() for r in self.entries for p in r), default=-1)

    def evaluate(self, point: Sequence) -> Matrix:
        return Matrix([[p.evaluate(point) for p in row] for row in self.entries])

    def specialize(self, j: int, value) -> MatrixPoly:
        return MatrixPoly([[p.specialize(j, value) for p in row] for row in self.entries], self.nvars - 1)

    def embed(self, nvars: int, positions: Sequence[int] | None = None) -> MatrixPoly:
        return MatrixPoly([[p.embed(nvars, positions) for p in row] for row in self.entries], nvars)

    def homogeneous_part(self, d: int) -> MatrixPoly:
        return self.map(lambda p: p.homogeneous_part(d))

    def coefficient_matrix(self, alpha: Sequence[int]) -> Matrix:
        alpha = tuple(alpha)
        return Matrix([[p.terms.get(alpha, ZERO) for p in row] for row in self.entries], self.rows, self.cols)

    def exponents(self) -> list[Exponent]:
        return sorted({a for r in self.entries for p in r for a in p.terms}, key=lambda a: (sum(a), a))

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixPoly):
            return NotImplemented
        return self.shape == other.shape and self.nvars == other.nvars and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.nvars, self.entries))

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(p) for p in r) + "]" for r in self.entries) + "]"

    def __repr__(self) -> str:
        return f"MatrixPoly({self.nvars}, {str(self)!r})"


def kron_matpoly(A: MatrixPoly, B: MatrixPoly) -> MatrixPoly:
    if A.nvars != B.nvars:
        raise VarCountMismatch("operands disagree on nvars")
    rows = []
    for arow in A.entries:
        for brow in B.entries:
            rows.append([a * b for a in arow for b in brow])
    return MatrixPoly(rows, A.nvars)


# determinant and adjugate

def _det_cofactor(grid: list[list[MultiPoly]], nvars: int) -> MultiPoly:
    n = len(grid)
    if n == 0:
        return MultiPoly.one(nvars)
    if n == 1:
        return grid[0][0]
    if n == 2:
        return grid[0][0] * grid[1][1] - grid[0][1] * grid[1][0]
    acc = MultiPoly.zero(nvars)
    for j in range(n):
        a = grid[0][j]
        if a.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in grid[1:]]
        term = a * _det_cofactor(minor, nvars)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def _det_bareiss(grid: list[list[MultiPoly]], nvars: int) -> MultiPoly:
    n = len(grid)
    if n == 0:
        return MultiPoly.one(nvars)
    M = [list(r) for r in grid]
    sign = 1
    prev = MultiPoly.one(nvars)
    for k in range(n - 1):
        if M[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not M[i][k].is_zero()), None)
            if swap is None:
                return MultiPoly.zero(nvars)
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        piv = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (piv * M[i][j] - M[i][k] * M[k][j]).exact_div(prev)
            M[i][k] = MultiPoly.zero(nvars)
        prev = piv
    d = M[n - 1][n - 1]
    return d if sign > 0 else -d


def _det(grid: list[list[MultiPoly]], nvars: int) -> MultiPoly:
    return _det_cofactor(grid, nvars) if len(grid) <= 4 else _det_bareiss(grid, nvars)


def matpoly_det(Q: MatrixPoly) -> MultiPoly:
    return _det([list(r) for r in Q.entries], Q.nvars)


def matpoly_det_adj(Q: MatrixPoly) -> tuple[MultiPoly, MatrixPoly]:
    """Return (det Q, adj Q) with Q adj(Q) = det(Q) I; cofactors for k <= 4, Bareiss beyond."""
    k = Q.k
    grid = [list(r) for r in Q.entries]
    det = _det(grid, Q.nvars)
    if k == 1:
        return det, MatrixPoly.identity(1, Q.nvars)
    adj = [[None] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            minor = [row[:j] + row[j + 1:] for r, row in enumerate(grid) if r != i]
            c = _det(minor, Q.nvars)
            adj[j][i] = c if (i + j) % 2 == 0 else -c
    return det, MatrixPoly(adj, Q.nvars)


# rational matrix functions


@dataclass(frozen=True)
class RationalMatrixFunction:
    """f(z) = P(z) / q(z) with q not the zero polynomial."""

    P: MatrixPoly
    q: MultiPoly

    def __post_init__(self):
        if self.q.is_zero():
            raise IdenticallyZeroDenominator("denominator is the zero polynomial")
        if self.P.nvars != self.q.nvars:
            raise VarCountMismatch("numerator and denominator disagree on nvars")
        if self.P.rows != self.P.cols:
            raise ShapeMismatch("rational matrix function must be square")

    @property
    def nvars(self) -> int:
        return self.q.nvars

    @property
    def k(self) -> int:
        return self.P.rows

    @classmethod
    def polynomial(cls, P: MatrixPoly) -> RationalMatrixFunction:
        return cls(P, MultiPoly.one(P.nvars))

    def evaluate(self, point: Sequence) -> Matrix:
        d = self.q.evaluate(point)
        if not d:
            raise DivisionByZero("denominator vanishes at the point")
        return self.P.evaluate(point) * d.inv()

    def __str__(self) -> str:
        return f"({self.P}) / ({self.q})"


@dataclass(frozen=True)
class Symmetry:
    real: bool
    symmetric: bool
    hermitian: bool
    homogeneous: bool

    def as_dict(self) -> dict[str, bool]:
        return {
            "real": self.real,
            "symmetric": self.symmetric,
            "hermitian": self.hermitian,
            "homogeneous": self.homogeneous,
        }


def is_real_function(f: RationalMatrixFunction) -> bool:
    return (f.P.conj() * f.q - f.P * f.q.conj()).is_zero()


def is_symmetric_function(f: RationalMatrixFunction) -> bool:
    return f.P.is_symmetric()


def is_hermitian_function(f: RationalMatrixFunction) -> bool:
    return (f.P.adjoint() * f.q - f.P * f.q.conj()).is_zero()


def is_homogeneous_function(f: RationalMatrixFunction) -> bool:
    """P(lambda z) q(z) - lambda P(z) q(lambda z) vanishes identically."""
    n = f.nvars
    lam = MultiPoly.var(n + 1, n + 1)
    lhs = f.P.map(MultiPoly.scaled) * f.q.embed(n + 1)
    rhs = f.P.embed(n + 1) * (lam * f.q.scaled())
    return (lhs - rhs).is_zero()


def symmetry_profile(f: RationalMatrixFunction) -> Symmetry:
    """Exact identity tests for the four structural symmetries."""
    return Symmetry(
        real=is_real_function(f),
        symmetric=is_symmetric_function(f),
        hermitian=is_hermitian_function(f),
        homogeneous=is_homogeneous_function(f),
    )


def realify(f: RationalMatrixFunction) -> RationalMatrixFunction:
    """Multiply through by conj(q) so the denominator has real coefficients."""
    if not (is_real_function(f) or is_hermitian_function(f)):
        raise SymmetryAbsent("function is neither real nor Hermitian")
    qb = f.q.conj()
    return RationalMatrixFunction(f.P * qb, f.q * qb)


def dehomogenize_index(f: RationalMatrixFunction) -> int:
    """First variable j with q(z_j = 1) not identically zero."""
    for j in range(1, f.nvars + 1):
        if not f.q.specialize(j, 1).is_zero():
            return j
    raise AllSubstitutionsSingular("no unit substitution keeps the denominator nonzero")


def dehomogenize(f: RationalMatrixFunction, var: int | None = None) -> RationalMatrixFunction:
    """g(w) = f with z_var = 1, in nvars - 1 variables; var defaults to dehomogenize_index(f)."""
    j = dehomogenize_index(f) if var is None else var
    q = f.q.specialize(j, 1)
    if q.is_zero():
        raise AllSubstitutionsSingular(f"denominator vanishes identically at z{j} = 1")
    return RationalMatrixFunction(f.P.specialize(j, 1), q)

