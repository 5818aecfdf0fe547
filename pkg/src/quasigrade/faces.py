"""Face enumeration and the lattice-point test on affine spans of faces.

The central question here: what is the smallest delta such that the affine
span of every delta-dimensional face of the polytope contains an integer
point?  That threshold (delta_star) strictly bounds the grade of the Ehrhart
quasipolynomial from above, and the verifier in this module recomputes both
sides of that inequality on concrete polytopes.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import polytope as _polytope
from . import quasipoly
from .errors import PolytopeError
from .exactmath import IntMatrix, solve_integer
from .polytope import Equality, RationalPolytope
from .quasipoly import QuasiPolynomial


@dataclass(frozen=True)
class Face:
    """A face of a parent polytope, recorded by the vertices it contains."""

    vertex_indices: tuple[int, ...]
    dim: int
    hull_equalities: tuple[Equality, ...]


MAX_FACETS = 20


def enumerate_faces(p: RationalPolytope) -> list[Face]:
    """All nonempty faces, including every vertex and the polytope itself.

    Faces are exactly the intersections of facet subsets, so the family of
    facet vertex-sets is closed under intersection starting from the whole
    vertex set; empty intersections are dropped and duplicates collapse
    because a face is determined by its vertices.  Results are sorted by
    (dim, vertex indices).
    """
    if len(p.inequalities) > MAX_FACETS:
        raise PolytopeError(f"face enumeration is capped at {MAX_FACETS} facets")
    everything = frozenset(range(len(p.vertices)))
    facet_sets = []
    for a, b in p.inequalities:
        incident = frozenset(
            i for i, v in enumerate(p.vertices) if _polytope._dot(a, v) == b
        )
        if incident:
            facet_sets.append(incident)
    known: set[frozenset[int]] = {everything} | set(facet_sets)
    frontier = list(known)
    while frontier:
        nxt = []
        for face_set in frontier:
            for facet in facet_sets:
                meet = face_set & facet
                if meet and meet not in known:
                    known.add(meet)
                    nxt.append(meet)
        frontier = nxt
    faces = []
    for vset in known:
        indices = tuple(sorted(vset))
        points = [p.vertices[i] for i in indices]
        faces.append(
            Face(
                vertex_indices=indices,
                dim=_polytope._affine_rank(points),
                hull_equalities=_polytope.affine_hull(points),
            )
        )
    faces.sort(key=lambda f: (f.dim, f.vertex_indices))
    return faces


def affine_span_contains_lattice_point(face: Face) -> bool:
    """Whether the affine span of the face holds any point of Z^m.

    The span is the solution set of the integer hull equations, so this is an
    integer linear system decided through Smith normal form divisibility.
    """
    if not face.hull_equalities:
        return True
    rows = [list(c) for c, _ in face.hull_equalities]
    rhs = [d for _, d in face.hull_equalities]
    return solve_integer(IntMatrix.from_rows(rows), rhs) is not None


def min_delta_hypothesis(p: RationalPolytope) -> int | None:
    """Smallest delta such that every delta-face's span has a lattice point.

    Returns None when even the span of the polytope itself has no lattice
    point; then no delta can work, since every face's span sits inside the
    polytope's span.  The pass condition is monotone in delta (each higher
    face contains a passing lower face inside its span), so the first
    all-pass level found scanning upward is the minimum.
    """
    faces = enumerate_faces(p)
    top = faces[-1]
    if not affine_span_contains_lattice_point(top):
        return None
    for delta in range(0, p.dim + 1):
        if all(
            affine_span_contains_lattice_point(f) for f in faces if f.dim == delta
        ):
            return delta
    raise AssertionError("the polytope is its own passing top face")


@dataclass(frozen=True)
class EhrhartGradeReport:
    """Outcome of the grade-versus-delta check on one polytope."""

    polytope: RationalPolytope
    quasipolynomial: QuasiPolynomial
    pi_min: int
    grade: int
    delta_star: int | None
    holds: bool
    face_results: tuple[tuple[Face, bool], ...]

    def failing_faces(self, delta: int) -> list[Face]:
        return [f for f, ok in self.face_results if f.dim == delta and not ok]

    @property
    def gap(self) -> int | None:
        if self.delta_star is None:
            return None
        return self.delta_star - 1 - self.grade


def verify_ehrhart_grade_bound(
    p: RationalPolytope, backend: str | None = None
) -> EhrhartGradeReport:
    """Check grade E_P < delta_star on one polytope.

    When the polytope's own span has no lattice point the hypothesis is
    vacuous for every delta and nothing is checked (holds stays True).  A
    False outcome otherwise signals a defect in this package.
    """
    q = _polytope.ehrhart_quasipolynomial(p, backend=backend)
    pi_min, canon = quasipoly.minimal_period(q)
    g = quasipoly.grade(canon)
    faces = enumerate_faces(p)
    results = tuple((f, affine_span_contains_lattice_point(f)) for f in faces)
    delta_star = min_delta_hypothesis(p)
    holds = True if delta_star is None else g < delta_star
    return EhrhartGradeReport(
        polytope=p,
        quasipolynomial=canon,
        pi_min=pi_min,
        grade=g,
        delta_star=delta_star,
        holds=holds,
        face_results=results,
    )


def format_report(report: EhrhartGradeReport) -> str:
    """Machine-readable report: key=value lines, quasipolynomial block, face lines."""
    lines = [
        f"grade={report.grade}",
        f"delta_star={'none' if report.delta_star is None else report.delta_star}",
        f"period={report.pi_min}",
        f"holds={'true' if report.holds else 'false'}",
        f"gap={'none' if report.gap is None else report.gap}",
    ]
    if report.delta_star is None:
        lines.append("hypothesis=vacuous")
    lines.append(quasipoly.format_quasipolynomial(report.quasipolynomial))
    for face, ok in report.face_results:
        verts = ",".join(str(i) for i in face.vertex_indices)
        lines.append(
            f"face dim={face.dim} vertices={verts} span_lattice={'true' if ok else 'false'}"
        )
    return "\n".join(lines)
