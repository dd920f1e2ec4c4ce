"""Exception hierarchy shared by every layer of the package."""


class PencilforgeError(Exception):
    """Base class for all package errors."""


class DivisionByZero(PencilforgeError, ZeroDivisionError):
    pass


class VarCountMismatch(PencilforgeError, ValueError):
    pass


class ShapeMismatch(PencilforgeError, ValueError):
    pass


class SymmetryAbsent(PencilforgeError):
    pass


class AllSubstitutionsSingular(PencilforgeError):
    pass


class SingularMatrix(PencilforgeError):
    pass


class SingularBlock(PencilforgeError):
    """The trailing block of a partitioned matrix is not invertible."""


class SingularSchur(PencilforgeError):
    """A Schur complement that must be inverted is singular."""


class SingularInnerBlock(PencilforgeError):
    pass


class ModeUnsatisfiable(PencilforgeError):
    """The requested symmetry structure is not present in the input."""


class ZeroScalar(PencilforgeError):
    pass


class SameVariable(PencilforgeError):
    pass


class IdenticallySingular(PencilforgeError):
    """det A22(z) vanished at every sampled point."""


class IdenticallySingularSchur(PencilforgeError):
    pass


class ZeroPolynomialMatrix(PencilforgeError):
    pass


class IdenticallyZeroDenominator(PencilforgeError):
    pass


class SingularAtPoint(PencilforgeError):
    pass


class TooManySingularSamples(PencilforgeError):
    pass


class SourceError(PencilforgeError):
    """Error tied to a position in expression source text."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} at line {line}, column {column}")
        self.message = message
        self.line = line
        self.column = column


class LexError(SourceError):
    pass


class ParseError(SourceError):
    pass


class LoweringError(PencilforgeError):
    pass


class SingularInverse(LoweringError):
    pass


class DivisorNotScalar(LoweringError):
    pass


class ZeroDivisor(LoweringError):
    pass


class DocumentError(PencilforgeError):
    """A pencil document failed validation."""
