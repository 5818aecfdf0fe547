"""Command-line front end.

Exit codes: 0 on success (all checks hold), 1 when a verifier reports a
violated inequality or an internal fit validation fails (both signal a defect
in this package, never bad input), 2 on malformed or infeasible input.
"""

from __future__ import annotations

import argparse
import math
import sys
from fractions import Fraction
from typing import Sequence

from . import faces as faces_mod
from . import hilbert, polytope, quasipoly
from .errors import InconsistentFitError, QuasigradeError
from .hilbert import HilbertSeries, WeightedModulePresentation
from .rng import XorShift64Star

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2


def _parse_int_list(text: str, what: str, minimum: int) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise QuasigradeError(f"{what} must be a comma-separated integer list") from None
    if not values:
        raise QuasigradeError(f"{what} must be nonempty")
    if any(v < minimum for v in values):
        raise QuasigradeError(f"{what} entries must be >= {minimum}")
    return values


def _cmd_ehrhart(args: argparse.Namespace) -> int:
    poly = polytope.load_polytope(args.file)
    q = polytope.ehrhart_quasipolynomial(poly)
    print(quasipoly.format_quasipolynomial(q))
    if args.max_dilate is not None:
        for n in range(1, args.max_dilate + 1):
            print(f"count n={n} value={polytope.count_lattice_points(poly, n)}")
    return EXIT_OK


def _cmd_faces(args: argparse.Namespace) -> int:
    poly = polytope.load_polytope(args.file)
    for i, v in enumerate(poly.vertices):
        coords = " ".join(str(Fraction(c)) for c in v)
        print(f"vertex {i}: {coords}")
    for face in faces_mod.enumerate_faces(poly):
        ok = faces_mod.affine_span_contains_lattice_point(face)
        verts = ",".join(str(i) for i in face.vertex_indices)
        print(f"face dim={face.dim} vertices={verts} span_lattice={'true' if ok else 'false'}")
    return EXIT_OK


def _cmd_verify_polytope(args: argparse.Namespace) -> int:
    poly = polytope.load_polytope(args.file)
    report = faces_mod.verify_ehrhart_grade_bound(poly)
    print(faces_mod.format_report(report))
    return EXIT_OK if report.holds else EXIT_VIOLATION


def _cmd_hilbert(args: argparse.Namespace) -> int:
    weights = _parse_int_list(args.weights, "--weights", 1)
    if args.numerator:
        try:
            numerator = tuple(int(p) for p in args.numerator.split(","))
        except ValueError:
            raise QuasigradeError("--numerator must be a comma-separated integer list") from None
    else:
        numerator = (1,)
    series = HilbertSeries.make(numerator, weights)
    q, n0 = hilbert.hilbert_quasipolynomial(series)
    print(quasipoly.format_quasipolynomial(q))
    print(f"n0={n0}")
    return EXIT_OK


def _cmd_verify_weighted(args: argparse.Namespace) -> int:
    weights = _parse_int_list(args.weights, "--weights", 1)
    shifts = _parse_int_list(args.shifts, "--shifts", 0)
    report = hilbert.verify_grade_bound_weighted(
        WeightedModulePresentation(weights=weights, shifts=shifts)
    )
    print(f"grade={report.grade}")
    print(f"bound={report.bound}")
    print(f"period={report.pi_min}")
    print(f"holds={'true' if report.holds else 'false'}")
    print(quasipoly.format_quasipolynomial(report.quasipolynomial))
    return EXIT_OK if report.holds else EXIT_VIOLATION


def _cmd_qp_grade(args: argparse.Namespace) -> int:
    with open(args.file, "r", encoding="utf-8") as fh:
        q = quasipoly.parse_quasipolynomial(fh.read())
    pi_min, canon = quasipoly.minimal_period(q)
    print(f"grade={quasipoly.grade(canon)}")
    print(f"period={pi_min}")
    print(quasipoly.format_quasipolynomial(canon))
    return EXIT_OK


def _random_weighted(rng: XorShift64Star) -> WeightedModulePresentation:
    d = rng.int_between(1, 4)
    weights = tuple(rng.int_between(1, 6) for _ in range(d))
    shifts = tuple(rng.int_between(0, 6) for _ in range(rng.int_between(1, 3)))
    return WeightedModulePresentation(weights=weights, shifts=shifts)


def _random_polytope(rng: XorShift64Star) -> polytope.RationalPolytope:
    npoints = rng.int_between(3, 6)
    points = [tuple(rng.fraction(3, 3) for _ in range(2)) for _ in range(npoints)]
    return polytope.from_point_cloud(points)


def _random_quasipolynomial(rng: XorShift64Star) -> quasipoly.QuasiPolynomial:
    while True:
        period = rng.int_between(1, 12)
        degree = rng.int_between(0, 4)
        rows = [
            [rng.fraction(9, 9) for _ in range(degree + 1)] for _ in range(period)
        ]
        if any(row[degree] != 0 for row in rows):
            return quasipoly.QuasiPolynomial(
                period, degree, tuple(tuple(row) for row in rows)
            )


def random_suite(mode: str, seed: int, count: int) -> int:
    """Run `count` randomized checks of the selected verifier; returns violations."""
    rng = XorShift64Star(seed)
    violations = 0
    for _ in range(count):
        if mode == "weighted":
            report = hilbert.verify_grade_bound_weighted(_random_weighted(rng))
            ok = report.holds
        elif mode == "polytope":
            ereport = faces_mod.verify_ehrhart_grade_bound(_random_polytope(rng))
            ok = ereport.holds
        elif mode == "lemma":
            q = _random_quasipolynomial(rng)
            pi_min, canon = quasipoly.minimal_period(q)
            while True:
                g = rng.int_between(1, 24)
                if math.gcd(g, pi_min) == 1:
                    break
            diff = quasipoly.shift_difference(canon, g)
            ok = quasipoly.grade(canon) <= quasipoly.grade(diff)
        else:
            raise QuasigradeError(f"unknown mode {mode!r}")
        if not ok:
            violations += 1
    return violations


def _cmd_random_suite(args: argparse.Namespace) -> int:
    violations = random_suite(args.mode, args.seed, args.count)
    print(f"checked={args.count} violations={violations}")
    return EXIT_OK if violations == 0 else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasigrade",
        description="Exact Hilbert/Ehrhart quasipolynomials, periods, grades and grade bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ehrhart", help="fit the lattice-count quasipolynomial of a polytope")
    p.add_argument("file", help="polytope file")
    p.add_argument("--max-dilate", type=int, default=None, help="also print counts for n=1..N")
    p.set_defaults(func=_cmd_ehrhart)

    p = sub.add_parser("faces", help="list faces and their span lattice tests")
    p.add_argument("file", help="polytope file")
    p.set_defaults(func=_cmd_faces)

    p = sub.add_parser("verify-polytope", help="check grade < delta_star on one polytope")
    p.add_argument("file", help="polytope file")
    p.set_defaults(func=_cmd_verify_polytope)

    p = sub.add_parser("hilbert", help="quasipolynomial of a rational series")
    p.add_argument("--weights", required=True, help="denominator exponents e1,e2,...")
    p.add_argument("--numerator", default="", help="ascending numerator coefficients c0,c1,...")
    p.set_defaults(func=_cmd_hilbert)

    p = sub.add_parser("verify-weighted", help="check the grade bound for a weighted free module")
    p.add_argument("--weights", required=True, help="variable degrees e1,e2,...")
    p.add_argument("--shifts", default="0", help="generator degrees s1,s2,...")
    p.set_defaults(func=_cmd_verify_weighted)

    p = sub.add_parser("qp-grade", help="grade and minimal period of a quasipolynomial file")
    p.add_argument("file", help="quasipolynomial file")
    p.set_defaults(func=_cmd_qp_grade)

    p = sub.add_parser("random-suite", help="seeded randomized verification")
    p.add_argument("--mode", required=True, choices=("polytope", "weighted", "lemma"))
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.set_defaults(func=_cmd_random_suite)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InconsistentFitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (QuasigradeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
