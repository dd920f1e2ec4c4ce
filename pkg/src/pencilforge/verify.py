"""Exact randomized checks of realizations and structural checks of pencils."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .blockmat import Matrix, PartitionedMatrix, is_invertible
from .errors import ShapeMismatch, SingularAtPoint, TooManySingularSamples, VarCountMismatch
from .field import GaussianRational
from .poly import RationalMatrixFunction, Symmetry
from .realize import Pencil, Realization

DEFAULT_TRIALS = 8
DEFAULT_RANGE = 2 ** 16
DEFAULT_SEED = 0


@dataclass(frozen=True)
class Failure:
    point: tuple[int, ...]
    expected: Matrix
    got: Matrix


@dataclass(frozen=True)
class VerifyReport:
    trials: int
    points: tuple[tuple[int, ...], ...]
    all_passed: bool
    first_failure: Failure | None
    skipped_singular: int
    seed: int
    range: int = DEFAULT_RANGE
    mismatches: int = field(default=0)


def eval_realization(R: Realization, point: Sequence) -> Matrix:
    """Exact value A(point)/A22(point); raises SingularAtPoint."""
    return R.evaluate(point)


def sample_points(nvars: int, count: int, seed: int, bound: int,
                  accept: Callable[[tuple[int, ...]], bool], max_skips: int) -> tuple[list[tuple[int, ...]], int]:
    """Draw count accepted integer points from [-bound, bound]^nvars; returns (points, skipped)."""
    rng = random.Random(seed)
    points: list[tuple[int, ...]] = []
    skipped = 0
    while len(points) < count:
        pt = tuple(rng.randint(-bound, bound) for _ in range(nvars))
        if accept(pt):
            points.append(pt)
        else:
            skipped += 1
            if skipped > max_skips:
                raise TooManySingularSamples(
                    f"{skipped} singular samples for {len(points)} usable points"
                )
    return points, skipped


def check_realization(
    R: Realization,
    f: RationalMatrixFunction,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
    range: int = DEFAULT_RANGE,
) -> VerifyReport:
    """Compare R and f exactly at seeded random integer points, skipping singular ones."""
    if R.nvars != f.nvars:
        raise VarCountMismatch(f"realization has {R.nvars} variables, function has {f.nvars}")
    if R.split != f.k:
        raise ShapeMismatch(f"realization is {R.split}x{R.split}, function is {f.k}x{f.k}")
    k = R.split

    def regular(pt: tuple[int, ...]) -> bool:
        if not f.q.evaluate(pt):
            return False
        if R.is_degenerate:
            return True
        M = R.pencil.evaluate(pt)
        return is_invertible(M.submatrix(k, R.side, k, R.side))

    points, skipped = sample_points(R.nvars, trials, seed, range, regular, 100 * trials)
    failure = None
    mismatches = 0
    for pt in points:
        got, expected = R.evaluate(pt), f.evaluate(pt)
        if got != expected:
            mismatches += 1
            if failure is None:
                failure = Failure(pt, expected, got)
    return VerifyReport(trials, tuple(points), failure is None, failure, skipped, seed, range, mismatches)


def check_pencil_structure(P: Pencil | Realization) -> Symmetry:
    """Entrywise real/symmetric/Hermitian tests on every coefficient, and A_0 = 0."""
    pencil = P.pencil if isinstance(P, Realization) else P
    return pencil.structure()


# functional identities satisfied by structured pencils


def _conj_point(pt: Sequence[GaussianRational]) -> tuple[GaussianRational, ...]:
    return tuple(x.conj() for x in pt)


def check_functional_symmetry(
    R: Realization, kind: str, trials: int = 8, seed: int = DEFAULT_SEED, bound: int = 64
) -> bool:
    """Test the identity matching a structure class at paired Gaussian-integer points.

    real: f(z) = conj(f(conj z)); symmetric: f(z) = f(z)^T; hermitian: f(z) = f(conj z)^*;
    homogeneous: f(lambda z) = lambda f(z).
    """
    rng = random.Random(seed)
    n = R.nvars
    done = skips = 0
    while done < trials:
        pt = tuple(GaussianRational(rng.randint(-bound, bound), rng.randint(-bound, bound)) for _ in range(n))
        try:
            value = R.evaluate(pt)
            if kind == "real":
                ok = value == R.evaluate(_conj_point(pt)).conj()
            elif kind == "symmetric":
                ok = value == value.T
            elif kind == "hermitian":
                ok = value == R.evaluate(_conj_point(pt)).adjoint()
            elif kind == "homogeneous":
                lam = GaussianRational(rng.randint(1, bound), rng.randint(-bound, bound))
                ok = R.evaluate(tuple(lam * x for x in pt)) == value * lam
            else:
                raise ValueError(f"unknown identity {kind!r}")
        except SingularAtPoint:
            skips += 1
            if skips > 100 * trials:
                raise TooManySingularSamples("pencil is singular at every sampled point") from None
            continue
        if not ok:
            return False
        done += 1
    return True
