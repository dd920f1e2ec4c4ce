"""Expression language for rational matrix functions: lexer, recursive-descent parser, lowering.

Grammar (z<d> and w<d> are variables, i is the imaginary unit):

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := ('-' | '+') factor | power
    power  := postfix ('^' INTEGER)?
    postfix:= atom ("'" | "*'")*
    atom   := NUMBER | RATIONAL | 'i' | VARIABLE | '(' expr ')' | matrix
            | 'inv' '(' expr ')' | 'kron' '(' expr ',' expr ')'
    matrix := '[' row (',' row)* ']'     row := '[' expr (',' expr)* ']'

A RATIONAL literal is digits '/' digits with no spaces and binds as a single atom.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .blockmat import Matrix, kron, mat_inverse
from .errors import (
    DivisorNotScalar,
    LexError,
    ParseError,
    ShapeMismatch,
    SingularInverse,
    SingularMatrix,
    ZeroDivisor,
)
from .field import GaussianRational, gr
from .poly import MatrixPoly, MultiPoly, RationalMatrixFunction, kron_matpoly, matpoly_det_adj

# tokens


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<newline>\n)
  | (?P<rational>\d+/\d+)
  | (?P<number>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<ctranspose>\*')
  | (?P<op>[-+*/^'])
  | (?P<bracket>[\[\]()])
  | (?P<comma>,)
    """,
    re.VERBOSE,
)

_VAR_RE = re.compile(r"^([zw])(\d+)$")
KEYWORDS = {"i", "inv", "kron"}


def tokenize(source: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        col = pos - line_start + 1
        if not m:
            raise LexError(f"unexpected character {source[pos]!r}", line, col)
        kind, text = m.lastgroup, m.group()
        if kind == "newline":
            line, line_start = line + 1, m.end()
        elif kind == "ident":
            if text in KEYWORDS:
                tokens.append(Token(text, text, line, col))
            elif _VAR_RE.match(text):
                tokens.append(Token("variable", text, line, col))
            else:
                raise LexError(f"unknown identifier {text!r}", line, col)
        elif kind != "ws":
            tokens.append(Token(kind if kind not in ("op", "bracket") else text, text, line, col))
        pos = m.end()
    tokens.append(Token("eof", "", line, len(source) - line_start + 1))
    return tokens


# syntax tree


@dataclass(frozen=True)
class Const:
    num: int
    den: int
    imag: bool
    pos: tuple[int, int]


@dataclass(frozen=True)
class Var:
    name: str
    pos: tuple[int, int]


@dataclass(frozen=True)
class Binary:
    left: "Ast"
    right: "Ast"
    pos: tuple[int, int]


class Add(Binary):
    pass


class Sub(Binary):
    pass


class Mul(Binary):
    pass


class Div(Binary):
    pass


class Kron(Binary):
    pass


@dataclass(frozen=True)
class Unary:
    operand: "Ast"
    pos: tuple[int, int]


class Neg(Unary):
    pass


class Inv(Unary):
    pass


class Transpose(Unary):
    pass


class ConjTranspose(Unary):
    pass


@dataclass(frozen=True)
class Pow:
    base: "Ast"
    exponent: int
    pos: tuple[int, int]


@dataclass(frozen=True)
class MatrixLit:
    rows: tuple[tuple["Ast", ...], ...]
    pos: tuple[int, int]


Ast = Union[Const, Var, Add, Sub, Mul, Div, Kron, Neg, Inv, Transpose, ConjTranspose, Pow, MatrixLit]


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, message: str, tok: Token | None = None) -> ParseError:
        tok = tok or self.tok
        return ParseError(message, tok.line, tok.column)

    def take(self, kind: str) -> Token:
        tok = self.tok
        if tok.kind != kind:
            found = tok.text or "end of input"
            raise self.error(f"expected {kind!r}, found {found!r}")
        self.i += 1
        return tok

    def at(self, *kinds: str) -> bool:
        return self.tok.kind in kinds

    def parse(self) -> Ast:
        node = self.expr()
        if not self.at("eof"):
            raise self.error(f"unexpected {self.tok.text!r}")
        return node

    def expr(self) -> Ast:
        node = self.term()
        while self.at("+", "-"):
            op = self.take(self.tok.kind)
            rhs = self.term()
            node = (Add if op.kind == "+" else Sub)(node, rhs, (op.line, op.column))
        return node

    def term(self) -> Ast:
        node = self.factor()
        while self.at("*", "/"):
            op = self.take(self.tok.kind)
            rhs = self.factor()
            node = (Mul if op.kind == "*" else Div)(node, rhs, (op.line, op.column))
        return node

    def factor(self) -> Ast:
        if self.at("-", "+"):
            op = self.take(self.tok.kind)
            operand = self.factor()
            return Neg(operand, (op.line, op.column)) if op.kind == "-" else operand
        return self.power()

    def power(self) -> Ast:
        node = self.postfix()
        if self.at("^"):
            op = self.take("^")
            exp = self.take("number") if self.at("number") else None
            if exp is None:
                raise self.error("exponent must be a nonnegative integer literal")
            node = Pow(node, int(exp.text), (op.line, op.column))
        return node

    def postfix(self) -> Ast:
        node = self.atom()
        while self.at("'", "ctranspose"):
            op = self.take(self.tok.kind)
            cls = Transpose if op.kind == "'" else ConjTranspose
            node = cls(node, (op.line, op.column))
        return node

    def atom(self) -> Ast:
        tok = self.tok
        pos = (tok.line, tok.column)
        if tok.kind == "number":
            self.i += 1
            return Const(int(tok.text), 1, False, pos)
        if tok.kind == "rational":
            self.i += 1
            num, den = tok.text.split("/")
            return Const(int(num), int(den), False, pos)
        if tok.kind == "i":
            self.i += 1
            return Const(1, 1, True, pos)
        if tok.kind == "variable":
            self.i += 1
            return Var(tok.text, pos)
        if tok.kind == "(":
            self.i += 1
            node = self.expr()
            self.take(")")
            return node
        if tok.kind == "inv":
            self.i += 1
            self.take("(")
            node = self.expr()
            self.take(")")
            return Inv(node, pos)
        if tok.kind == "kron":
            self.i += 1
            self.take("(")
            left = self.expr()
            self.take("comma")
            right = self.expr()
            self.take(")")
            return Kron(left, right, pos)
        if tok.kind == "[":
            return self.matrix()
        raise self.error(f"unexpected {tok.text or 'end of input'!r}")

    def matrix(self) -> MatrixLit:
        start = self.take("[")
        rows = [self.row()]
        while self.at("comma"):
            self.take("comma")
            row_tok = self.tok
            rows.append(self.row())
            if len(rows[-1]) != len(rows[0]):
                raise ParseError("matrix rows have different lengths", row_tok.line, row_tok.column)
        self.take("]")
        return MatrixLit(tuple(rows), (start.line, start.column))

    def row(self) -> tuple[Ast, ...]:
        if not self.at("["):
            raise self.error("expected '[' to start a matrix row")
        self.take("[")
        items = [self.expr()]
        while self.at("comma"):
            self.take("comma")
            items.append(self.expr())
        self.take("]")
        return tuple(items)


def parse(source: str) -> Ast:
    """Parse source text; raises LexError or ParseError carrying line and column."""
    return _Parser(tokenize(source)).parse()


# variables


def _var_key(name: str) -> tuple[int, int]:
    family, digits = _VAR_RE.match(name).groups()
    return (0 if family == "z" else 1, int(digits))


def _walk(node: Ast):
    yield node
    if isinstance(node, Binary):
        yield from _walk(node.left)
        yield from _walk(node.right)
    elif isinstance(node, Unary):
        yield from _walk(node.operand)
    elif isinstance(node, Pow):
        yield from _walk(node.base)
    elif isinstance(node, MatrixLit):
        for row in node.rows:
            for item in row:
                yield from _walk(item)


def infer_variables(ast: Ast) -> tuple[str, ...]:
    """Variables used by the expression: z-family first, then w-family, each by index."""
    return tuple(sorted({n.name for n in _walk(ast) if isinstance(n, Var)}, key=_var_key))


def _check_declared(ast: Ast, variables: Sequence[str]) -> None:
    declared = set(variables)
    for n in _walk(ast):
        if isinstance(n, Var) and n.name not in declared:
            raise ParseError(f"undeclared variable {n.name!r}", *n.pos)


# lowering to P / q

Value = tuple[MatrixPoly, MultiPoly]


class _Lowerer:
    def __init__(self, variables: Sequence[str]):
        self.index = {name: j + 1 for j, name in enumerate(variables)}
        self.n = len(variables)

    def const(self, c: GaussianRational) -> Value:
        return MatrixPoly([[MultiPoly.const(c, self.n)]], self.n), MultiPoly.one(self.n)

    def lower(self, node: Ast) -> Value:
        n = self.n
        if isinstance(node, Const):
            if node.den == 0:
                raise ZeroDivisor(f"zero denominator in literal at line {node.pos[0]}, column {node.pos[1]}")
            c = GaussianRational(Fraction(node.num, node.den))
            return self.const(c * GaussianRational(0, 1) if node.imag else c)
        if isinstance(node, Var):
            return MatrixPoly([[MultiPoly.var(self.index[node.name], n)]], n), MultiPoly.one(n)
        if isinstance(node, (Add, Sub)):
            (P1, q1), (P2, q2) = self.lower(node.left), self.lower(node.right)
            if P1.shape != P2.shape:
                raise ShapeMismatch(f"cannot add {P1.shape} and {P2.shape}")
            if isinstance(node, Sub):
                P2 = -P2
            if q1 == q2:
                return P1 + P2, q1
            return P1 * q2 + P2 * q1, q1 * q2
        if isinstance(node, Mul):
            (P1, q1), (P2, q2) = self.lower(node.left), self.lower(node.right)
            if P1.shape == (1, 1) and P2.shape != (1, 1):
                return P2 * P1[0, 0], q1 * q2
            if P2.shape == (1, 1) and P1.shape != (1, 1):
                return P1 * P2[0, 0], q1 * q2
            if P1.cols != P2.rows:
                raise ShapeMismatch(f"cannot multiply {P1.shape} by {P2.shape}")
            return P1 @ P2, q1 * q2
        if isinstance(node, Div):
            (P1, q1), (P2, q2) = self.lower(node.left), self.lower(node.right)
            if P2.shape != (1, 1):
                raise DivisorNotScalar(f"divisor has shape {P2.shape}")
            p2 = P2[0, 0]
            if p2.is_zero():
                raise ZeroDivisor("division by an identically zero expression")
            return P1 * q2, q1 * p2
        if isinstance(node, Kron):
            (P1, q1), (P2, q2) = self.lower(node.left), self.lower(node.right)
            return kron_matpoly(P1, P2), q1 * q2
        if isinstance(node, Neg):
            P, q = self.lower(node.operand)
            return -P, q
        if isinstance(node, Transpose):
            P, q = self.lower(node.operand)
            return P.transpose(), q
        if isinstance(node, ConjTranspose):
            P, q = self.lower(node.operand)
            return P.adjoint(), q.conj()
        if isinstance(node, Pow):
            P, q = self.lower(node.base)
            if P.rows != P.cols:
                raise ShapeMismatch("only square expressions can be raised to a power")
            result, den = MatrixPoly.identity(P.rows, n), MultiPoly.one(n)
            for _ in range(node.exponent):
                result, den = result @ P, den * q
            return result, den
        if isinstance(node, Inv):
            P, q = self.lower(node.operand)
            if P.rows != P.cols:
                raise ShapeMismatch("only square expressions can be inverted")
            det, adj = matpoly_det_adj(P)
            if det.is_zero():
                raise SingularInverse("determinant vanishes identically")
            return adj * q, det
        if isinstance(node, MatrixLit):
            cells = [[self.lower(item) for item in row] for row in node.rows]
            for row in cells:
                for P, _ in row:
                    if P.shape != (1, 1):
                        raise ShapeMismatch("matrix literal entries must be scalars")
            dens: list[MultiPoly] = []
            for row in cells:
                for _, q in row:
                    if q not in dens:
                        dens.append(q)
            common = MultiPoly.one(n)
            for d in dens:
                common = common * d
            grid = []
            for row in cells:
                out_row = []
                for P, q in row:
                    cofactor = MultiPoly.one(n)
                    for d in dens:
                        if d != q:
                            cofactor = cofactor * d
                    out_row.append(P[0, 0] * cofactor)
                grid.append(out_row)
            return MatrixPoly(grid, n), common
        raise TypeError(f"unknown node {node!r}")


def lower(ast: Ast, variables: Sequence[str] | None = None) -> RationalMatrixFunction:
    """Lower to f = P / q over the given variable order (inferred when omitted)."""
    variables = tuple(variables) if variables is not None else infer_variables(ast)
    _check_declared(ast, variables)
    P, q = _Lowerer(variables).lower(ast)
    if P.rows != P.cols:
        raise ShapeMismatch(f"expression has non-square shape {P.shape}")
    return RationalMatrixFunction(P, q)


def compile_expression(source: str, variables: Sequence[str] | None = None
                       ) -> tuple[RationalMatrixFunction, tuple[str, ...]]:
    ast = parse(source)
    variables = tuple(variables) if variables is not None else infer_variables(ast)
    return lower(ast, variables), variables


# direct interpretation, used as an independent oracle for lowering


def evaluate(ast: Ast, point: Sequence, variables: Sequence[str]) -> Matrix:
    """Interpret the expression at a point using constant-matrix arithmetic only."""
    if len(point) != len(variables):
        raise ValueError(f"point has {len(point)} coordinates for {len(variables)} variables")
    env = {name: gr(v) for name, v in zip(variables, point)}
    return _interp(ast, env)


def _scalar_of(M: Matrix) -> GaussianRational:
    return M[0, 0]


def _interp(node: Ast, env: dict[str, GaussianRational]) -> Matrix:
    if isinstance(node, Const):
        if node.den == 0:
            raise ZeroDivisor("zero denominator in literal")
        c = GaussianRational(Fraction(node.num, node.den))
        return Matrix([[c * GaussianRational(0, 1) if node.imag else c]])
    if isinstance(node, Var):
        return Matrix([[env[node.name]]])
    if isinstance(node, Add):
        return _interp(node.left, env) + _interp(node.right, env)
    if isinstance(node, Sub):
        return _interp(node.left, env) - _interp(node.right, env)
    if isinstance(node, Mul):
        a, b = _interp(node.left, env), _interp(node.right, env)
        if a.shape == (1, 1) and b.shape != (1, 1):
            return b * _scalar_of(a)
        if b.shape == (1, 1) and a.shape != (1, 1):
            return a * _scalar_of(b)
        return a @ b
    if isinstance(node, Div):
        a, b = _interp(node.left, env), _interp(node.right, env)
        if b.shape != (1, 1):
            raise DivisorNotScalar("divisor is not scalar")
        d = _scalar_of(b)
        if not d:
            raise ZeroDivisor("division by zero")
        return a * d.inv()
    if isinstance(node, Kron):
        return kron(_interp(node.left, env), _interp(node.right, env))
    if isinstance(node, Neg):
        return -_interp(node.operand, env)
    if isinstance(node, Transpose):
        return _interp(node.operand, env).T
    if isinstance(node, ConjTranspose):
        # coefficient conjugation: conj(g(conj z))^T
        conj_env = {k: v.conj() for k, v in env.items()}
        return _interp(node.operand, conj_env).adjoint()
    if isinstance(node, Pow):
        base = _interp(node.base, env)
        out = Matrix.identity(base.rows)
        for _ in range(node.exponent):
            out = out @ base
        return out
    if isinstance(node, Inv):
        try:
            return mat_inverse(_interp(node.operand, env))
        except SingularMatrix:
            raise SingularInverse("singular at this point") from None
    if isinstance(node, MatrixLit):
        return Matrix([[_scalar_of(_interp(item, env)) for item in row] for row in node.rows])
    raise TypeError(f"unknown node {node!r}")
