"""Exact linear-pencil (Schur complement) realizations of rational matrix functions."""

from .blockmat import Matrix, PartitionedMatrix, kron, schur
from .document import PencilDocument, from_json, read_document, to_json, write_document
from .errors import PencilforgeError
from .expr import compile_expression, parse
from .field import GaussianRational, gr
from .poly import MatrixPoly, MultiPoly, RationalMatrixFunction, Symmetry, symmetry_profile
from .realize import Pencil, Realization, embed_special, realize
from .verify import VerifyReport, check_functional_symmetry, check_pencil_structure, check_realization

__all__ = [
    "GaussianRational",
    "Matrix",
    "MatrixPoly",
    "MultiPoly",
    "PartitionedMatrix",
    "Pencil",
    "PencilDocument",
    "PencilforgeError",
    "RationalMatrixFunction",
    "Realization",
    "Symmetry",
    "VerifyReport",
    "check_functional_symmetry",
    "check_pencil_structure",
    "check_realization",
    "compile_expression",
    "embed_special",
    "from_json",
    "gr",
    "kron",
    "parse",
    "read_document",
    "realize",
    "schur",
    "symmetry_profile",
    "to_json",
    "write_document",
]
