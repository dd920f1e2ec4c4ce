"""Command-line frontend: realize, verify, transform and eval pencil documents."""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from . import schuralg
from .blockmat import PartitionedMatrix, schur
from .document import PencilDocument, read_document, to_json
from .errors import (
    DocumentError,
    IdenticallySingular,
    LoweringError,
    ModeUnsatisfiable,
    ShapeMismatch,
    SingularAtPoint,
    SingularBlock,
    SingularInnerBlock,
    SingularMatrix,
    SingularSchur,
    SourceError,
    TooManySingularSamples,
    VarCountMismatch,
)
from .expr import compile_expression
from .realize import Pencil, Realization, kron_realizations, lift, realize
from .verify import DEFAULT_RANGE, DEFAULT_SEED, DEFAULT_TRIALS, check_realization

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_LOWERING, EXIT_MODE, EXIT_SAMPLES, EXIT_SINGULAR = range(7)


class NotApplicable(Exception):
    """The requested transform does not apply to this document."""


_EXIT_CODES = (
    ((SourceError, DocumentError, OSError), EXIT_INPUT),
    ((LoweringError, ShapeMismatch, VarCountMismatch, NotApplicable), EXIT_LOWERING),
    ((ModeUnsatisfiable,), EXIT_MODE),
    ((TooManySingularSamples,), EXIT_SAMPLES),
    ((SingularBlock, SingularAtPoint, SingularInnerBlock, SingularSchur, SingularMatrix, IdenticallySingular),
     EXIT_SINGULAR),
)


def _default_seed() -> int:
    env = os.environ.get("PENCILFORGE_SEED")
    if env is None:
        return DEFAULT_SEED
    try:
        return int(env)
    except ValueError:
        raise DocumentError(f"PENCILFORGE_SEED must be an integer, got {env!r}") from None


def _split_vars(text: str | None) -> tuple[str, ...] | None:
    if text is None:
        return None
    return tuple(v.strip() for v in text.split(",") if v.strip())


def _emit(doc: PencilDocument, output: str | None) -> None:
    text = to_json(doc)
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _flag_text(doc: PencilDocument) -> str:
    return ", ".join(f"{k}={'yes' if v else 'no'}" for k, v in doc.flags.as_dict().items())


def _symmetry_arg(text: str):
    if text in ("auto", "none"):
        return text
    return tuple(s.strip() for s in text.split(",") if s.strip())


def cmd_realize(args) -> int:
    f, variables = compile_expression(args.expr, _split_vars(args.vars))
    R = realize(f, symmetry=_symmetry_arg(args.symmetry), homogeneous=args.homogeneous,
                certify_with=args.certify)
    doc = PencilDocument.from_realization(R, variables)
    _emit(doc, args.output)
    seed = _default_seed()
    report = check_realization(R, f, DEFAULT_TRIALS, seed, DEFAULT_RANGE)
    err = sys.stderr
    print(f"dimension: {R.side}x{R.side}, split {R.split}", file=err)
    print(f"flags: {_flag_text(doc)}", file=err)
    print(f"variables: {', '.join(variables) or '(none)'}", file=err)
    status = "passed" if report.all_passed else f"FAILED at {report.first_failure.point}"
    print(f"verification: {report.trials} trials, seed {seed}: {status}", file=err)
    return EXIT_OK if report.all_passed else EXIT_MISMATCH


def cmd_verify(args) -> int:
    doc = read_document(args.file)
    variables = _split_vars(args.vars) or doc.variables
    f, _ = compile_expression(args.expr, variables)
    seed = args.seed if args.seed is not None else _default_seed()
    report = check_realization(doc.realization, f, args.trials, seed, args.range)
    if report.all_passed:
        print(f"ok: {report.trials} trials passed (seed {seed}, range {args.range}, "
              f"{report.skipped_singular} singular points skipped)")
        return EXIT_OK
    fail = report.first_failure
    point = ", ".join(f"{v}={x}" for v, x in zip(variables, fail.point))
    print(f"mismatch at {point}")
    print(f"  expected {fail.expected}")
    print(f"  got      {fail.got}")
    print(f"{report.mismatches} of {report.trials} trials failed", file=sys.stderr)
    return EXIT_MISMATCH


def _constant_level(R: Realization, op: str) -> PartitionedMatrix:
    if any(not A.is_zero() for A in R.coeffs[1:]):
        raise NotApplicable(f"{op} needs a constant document (all A_j = 0 for j >= 1)")
    return R.partitioned(0)


def _constant_doc(m, split: int, R: Realization, note: str) -> Realization:
    coeffs = (m,) + tuple(type(m).zeros(m.rows) for _ in range(R.nvars))
    return Realization(Pencil(coeffs), split, R.provenance + (note,))


def _transform(R: Realization, op: str, inner: int | None, other: Realization | None) -> Realization:
    if op in ("ppt1", "ppt2"):
        A = _constant_level(R, op)
        fn = schuralg.ppt1 if op == "ppt1" else schuralg.ppt2
        return _constant_doc(fn(A), R.split, R, op)
    if op == "schur":
        A = _constant_level(R, op)
        return _constant_doc(schur(A), R.split, R, "schur")
    if op == "compose":
        if inner is None:
            raise NotApplicable("compose needs --inner L")
        return lift(schuralg.sc_compose, R, inner)
    if other is None:
        raise NotApplicable(f"{op} needs --other FILE")
    if op == "kron":
        return kron_realizations(R, other, certify_with=None)
    if op == "add":
        return lift(schuralg.sc_add, R, other)
    if op == "dsum":
        return lift(schuralg.sc_dsum, R, other)
    raise NotApplicable(f"unknown transform {op!r}")


def cmd_transform(args) -> int:
    doc = read_document(args.file)
    other = read_document(args.other).realization if args.other else None
    if other is not None and other.nvars != doc.realization.nvars:
        raise VarCountMismatch("documents disagree on the variable count")
    R = _transform(doc.realization, args.op, args.inner, other)
    _emit(PencilDocument.from_realization(R, doc.variables), args.output)
    return EXIT_OK


def _parse_point(text: str) -> tuple:
    coords = []
    for part in text.split(","):
        f, _ = compile_expression(part, ())
        coords.append(f.evaluate(()).data[0][0])
    return tuple(coords)


def cmd_eval(args) -> int:
    doc = read_document(args.file)
    point = _parse_point(args.point)
    R = doc.realization
    if len(point) != R.nvars:
        raise VarCountMismatch(f"point has {len(point)} coordinates, document has {R.nvars} variables")
    print(R.evaluate(point))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pencilforge", description="Exact linear-pencil realizations.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("realize", help="realize an expression as a pencil document")
    r.add_argument("-e", "--expr", required=True)
    r.add_argument("--vars", help="comma-separated variable order (default: inferred)")
    r.add_argument("--symmetry", default="auto",
                   help="auto, none, or a comma list of real, symmetric, hermitian")
    r.add_argument("--homogeneous", choices=("auto", "force", "off"), default="auto")
    r.add_argument("--certify", choices=("sample", "symbolic"), default="sample")
    r.add_argument("-o", "--output")
    r.set_defaults(run=cmd_realize)

    v = sub.add_parser("verify", help="check a document against an expression")
    v.add_argument("file")
    v.add_argument("-e", "--expr", required=True)
    v.add_argument("--vars")
    v.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    v.add_argument("--seed", type=int)
    v.add_argument("--range", type=int, default=DEFAULT_RANGE)
    v.set_defaults(run=cmd_verify)

    t = sub.add_parser("transform", help="apply a Schur-complement construction")
    t.add_argument("file")
    t.add_argument("op", choices=("ppt1", "ppt2", "schur", "compose", "kron", "add", "dsum"))
    t.add_argument("--inner", type=int, help="inner split for compose")
    t.add_argument("--other", help="second document for kron, add, dsum")
    t.add_argument("-o", "--output")
    t.set_defaults(run=cmd_transform)

    ev = sub.add_parser("eval", help="evaluate a document at a point")
    ev.add_argument("file")
    ev.add_argument("--point", required=True, help="comma-separated constant expressions")
    ev.set_defaults(run=cmd_eval)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except Exception as e:
        for kinds, code in _EXIT_CODES:
            if isinstance(e, kinds):
                print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
                return code
        raise


if __name__ == "__main__":
    sys.exit(main())
