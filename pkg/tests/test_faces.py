from fractions import Fraction as F

import numpy as np
import pytest

from quasigrade import faces as fc, polytope as pt, quasipoly as qp
from quasigrade.exactmath import IntMatrix, solve_integer
from quasigrade.rng import XorShift64Star


def test_face_counts(square, halfseg, tri_half, cube):
    assert len(fc.enumerate_faces(square)) == 9
    assert len(fc.enumerate_faces(halfseg)) == 3
    assert len(fc.enumerate_faces(tri_half)) == 7
    faces = fc.enumerate_faces(cube)
    assert len(faces) == 27
    by_dim = {d: sum(1 for f in faces if f.dim == d) for d in range(4)}
    assert by_dim == {0: 8, 1: 12, 2: 6, 3: 1}


def test_simplex_face_counts():
    # A d-simplex has 2^(d+1) - 1 nonempty faces.
    for d in (1, 2, 3):
        verts = [tuple(0 for _ in range(d))]
        for i in range(d):
            verts.append(tuple(1 if j == i else 0 for j in range(d)))
        simplex = pt.from_vertices(verts)
        assert len(fc.enumerate_faces(simplex)) == 2 ** (d + 1) - 1


def test_point_polytope_single_face():
    point = pt.from_vertices([(F(1, 2), F(1, 3))])
    faces = fc.enumerate_faces(point)
    assert len(faces) == 1 and faces[0].dim == 0


def test_span_examples():
    half = fc.Face((0,), 0, pt.affine_hull([(F(1, 2),)]))
    assert not fc.affine_span_contains_lattice_point(half)
    whole = fc.Face((0,), 0, pt.affine_hull([(F(1),)]))
    assert fc.affine_span_contains_lattice_point(whole)
    edge = fc.Face((0, 1), 1, pt.affine_hull([(F(1, 2), 0), (0, F(1, 2))]))
    assert not fc.affine_span_contains_lattice_point(edge)


def test_min_delta_examples(square, halfseg, tri_half):
    assert fc.min_delta_hypothesis(square) == 0
    assert fc.min_delta_hypothesis(halfseg) == 1
    assert fc.min_delta_hypothesis(tri_half) == 2


def test_min_delta_vacuous():
    point = pt.from_vertices([(F(1, 2),)])
    assert fc.min_delta_hypothesis(point) is None
    report = fc.verify_ehrhart_grade_bound(point)
    assert report.delta_star is None and report.holds
    assert "hypothesis=vacuous" in fc.format_report(report)


def test_hypothesis_monotone(square, halfseg, tri_half, cube):
    for poly in (square, halfseg, tri_half, cube):
        faces = fc.enumerate_faces(poly)
        passes = [
            all(
                fc.affine_span_contains_lattice_point(f)
                for f in faces
                if f.dim == delta
            )
            for delta in range(poly.dim + 1)
        ]
        for lo, hi in zip(passes, passes[1:]):
            assert hi or not lo


def _box_lattice_point_in_span(eqs, m, radius=20) -> bool:
    axes = [np.arange(-radius, radius + 1, dtype=np.int64)] * m
    mesh = np.meshgrid(*axes, indexing="ij")
    pts = np.stack([g.reshape(-1) for g in mesh], axis=1)
    mask = np.ones(pts.shape[0], dtype=bool)
    for c, d in eqs:
        mask &= pts @ np.array(c, dtype=np.int64) == d
    return bool(mask.any())


def random_span_instance(rng: XorShift64Star):
    """Integer equations of a random nonempty rational affine subspace."""
    m = rng.int_between(1, 3)
    k = rng.int_between(1, m)
    anchor = [rng.fraction(4, 4) for _ in range(m)]
    eqs = []
    for _ in range(k):
        c = [rng.int_between(-4, 4) for _ in range(m)]
        rhs = sum(F(ci) * xi for ci, xi in zip(c, anchor))
        scale = rhs.denominator
        eqs.append((tuple(ci * scale for ci in c), int(rhs * scale)))
    return m, eqs


def test_span_test_against_box_search():
    rng = XorShift64Star(41)
    says_yes = says_no = 0
    for _ in range(80):
        m, eqs = random_span_instance(rng)
        rows = [list(c) for c, _ in eqs]
        rhs = [d for _, d in eqs]
        x = solve_integer(IntMatrix.from_rows(rows), rhs)
        if x is not None:
            says_yes += 1
            assert IntMatrix.from_rows(rows).mul_vector(x) == rhs
        else:
            says_no += 1
            assert not _box_lattice_point_in_span(eqs, m)
    assert says_yes and says_no


def test_verify_reports(square, halfseg, tri_half):
    r = fc.verify_ehrhart_grade_bound(square)
    assert (r.grade, r.delta_star, r.holds) == (-1, 0, True)
    r2 = fc.verify_ehrhart_grade_bound(halfseg)
    assert (r2.grade, r2.delta_star, r2.pi_min, r2.holds) == (0, 1, 2, True)
    assert r2.failing_faces(0) and not r2.failing_faces(1)
    r3 = fc.verify_ehrhart_grade_bound(tri_half)
    assert (r3.grade, r3.delta_star, r3.holds) == (1, 2, True)
    assert r3.gap == 0


def test_report_format(halfseg):
    text = fc.format_report(fc.verify_ehrhart_grade_bound(halfseg))
    lines = text.splitlines()
    assert lines[0] == "grade=0"
    assert lines[1] == "delta_star=1"
    assert lines[2] == "period=2"
    assert lines[3] == "holds=true"
    assert lines[4] == "gap=0"
    assert lines[5] == "period=2 degree=1"
    assert lines[-1] == "face dim=1 vertices=0,1 span_lattice=true"


def test_translate_invariance(square, halfseg, tri_half):
    shifts = {1: (7,), 2: (3, -2)}
    for poly in (square, halfseg, tri_half):
        z = shifts[poly.ambient_dim]
        moved = pt.from_vertices(
            [tuple(c + dz for c, dz in zip(v, z)) for v in poly.vertices]
        )
        base = fc.verify_ehrhart_grade_bound(poly)
        other = fc.verify_ehrhart_grade_bound(moved)
        assert base.quasipolynomial == other.quasipolynomial
        assert (base.grade, base.delta_star, base.pi_min) == (
            other.grade,
            other.delta_star,
            other.pi_min,
        )
        for n in range(1, 9):
            assert pt.count_lattice_points(poly, n) == pt.count_lattice_points(moved, n)
