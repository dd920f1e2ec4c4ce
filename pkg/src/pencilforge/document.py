"""JSON persistence for realizations with exact decimal-string scalars."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .blockmat import Matrix
from .errors import DocumentError
from .field import GaussianRational
from .poly import Symmetry
from .realize import Pencil, Realization

FORMAT_VERSION = 1
_INT_RE = re.compile(r"^-?(0|[1-9][0-9]*)$")
_FLAG_NAMES = ("real", "symmetric", "hermitian", "homogeneous")


@dataclass(frozen=True)
class PencilDocument:
    realization: Realization
    variables: tuple[str, ...]
    flags: Symmetry

    @classmethod
    def from_realization(cls, R: Realization, variables: Sequence[str] | None = None) -> PencilDocument:
        variables = tuple(variables) if variables is not None else default_variables(R.nvars)
        if len(variables) != R.nvars:
            raise DocumentError(f"{len(variables)} variable names for {R.nvars} variables")
        return cls(R, variables, R.flags)


def default_variables(n: int) -> tuple[str, ...]:
    return tuple(f"z{j}" for j in range(1, n + 1))


def _scalar_record(x: GaussianRational) -> dict[str, str]:
    return {
        "re_num": str(x.re.numerator),
        "re_den": str(x.re.denominator),
        "im_num": str(x.im.numerator),
        "im_den": str(x.im.denominator),
    }


def _parse_int(text, what: str) -> int:
    if not isinstance(text, str) or not _INT_RE.match(text):
        raise DocumentError(f"{what} must be a decimal integer string, got {text!r}")
    return int(text)


def _parse_rational(num_text, den_text, what: str) -> Fraction:
    num, den = _parse_int(num_text, what), _parse_int(den_text, what)
    if den <= 0:
        raise DocumentError(f"{what} denominator must be positive")
    if gcd(num, den) != 1 and not (num == 0 and den == 1):
        raise DocumentError(f"{what} is not in lowest terms")
    if num == 0 and den != 1:
        raise DocumentError(f"{what} zero must be written 0/1")
    return Fraction(num, den)


def _parse_scalar(rec, where: str) -> GaussianRational:
    if not isinstance(rec, dict) or set(rec) != {"re_num", "re_den", "im_num", "im_den"}:
        raise DocumentError(f"{where}: scalar record needs re_num, re_den, im_num, im_den")
    re_part = _parse_rational(rec["re_num"], rec["re_den"], f"{where} real part")
    im_part = _parse_rational(rec["im_num"], rec["im_den"], f"{where} imaginary part")
    return GaussianRational(re_part, im_part)


def to_json(doc: PencilDocument) -> str:
    R = doc.realization
    payload = {
        "format-version": FORMAT_VERSION,
        "nvars": R.nvars,
        "variables": list(doc.variables),
        "side": R.side,
        "split": R.split,
        "flags": {name: getattr(doc.flags, name) for name in _FLAG_NAMES},
        "coefficients": [[[_scalar_record(x) for x in row] for row in A.data] for A in R.coeffs],
        "provenance": list(R.provenance),
    }
    return json.dumps(payload, indent=2) + "\n"


def from_json(text: str) -> PencilDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"invalid JSON: {e}") from None
    if not isinstance(data, dict):
        raise DocumentError("document must be a JSON object")
    required = ("format-version", "nvars", "side", "split", "flags", "coefficients", "provenance")
    missing = [k for k in required if k not in data]
    if missing:
        raise DocumentError(f"missing fields: {', '.join(missing)}")
    if data["format-version"] != FORMAT_VERSION:
        raise DocumentError(f"unsupported format version {data['format-version']!r}")
    n, side, split = data["nvars"], data["side"], data["split"]
    for name, v in (("nvars", n), ("side", side), ("split", split)):
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise DocumentError(f"{name} must be a nonnegative integer")
    if not 1 <= split <= side:
        raise DocumentError(f"split {split} outside 1..{side}")
    variables = tuple(data.get("variables", default_variables(n)))
    if len(variables) != n or not all(isinstance(v, str) for v in variables):
        raise DocumentError("variables must list one name per variable")
    flags = data["flags"]
    if not isinstance(flags, dict) or set(flags) != set(_FLAG_NAMES) or not all(
        isinstance(v, bool) for v in flags.values()
    ):
        raise DocumentError("flags must map real, symmetric, hermitian, homogeneous to booleans")
    coeffs = data["coefficients"]
    if not isinstance(coeffs, list) or len(coeffs) != n + 1:
        raise DocumentError(f"expected {n + 1} coefficient matrices")
    mats = []
    for j, A in enumerate(coeffs):
        if not isinstance(A, list) or len(A) != side or any(not isinstance(r, list) or len(r) != side for r in A):
            raise DocumentError(f"coefficient {j} is not {side}x{side}")
        mats.append(Matrix([[_parse_scalar(x, f"A{j}[{r}][{c}]") for c, x in enumerate(row)]
                            for r, row in enumerate(A)], side, side))
    prov = data["provenance"]
    if not isinstance(prov, list) or not all(isinstance(p, str) for p in prov):
        raise DocumentError("provenance must be a list of strings")
    R = Realization(Pencil(tuple(mats)), split, tuple(prov))
    return PencilDocument(R, variables, Symmetry(**{k: flags[k] for k in _FLAG_NAMES}))


def read_document(path: str) -> PencilDocument:
    try:
        with open(path, encoding="utf-8") as fh:
            return from_json(fh.read())
    except OSError as e:
        raise DocumentError(f"cannot read {path}: {e.strerror}") from None


def write_document(doc: PencilDocument, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_json(doc))
