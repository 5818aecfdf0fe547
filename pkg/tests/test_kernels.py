from fractions import Fraction as F

import pytest

from quasigrade import _kernels as kn, polytope as pt
from quasigrade.errors import KernelConfigError


def _corpus():
    return [
        pt.from_vertices([(0, 0), (1, 0), (0, 1), (1, 1)]),
        pt.from_vertices([(F(0),), (F(1, 2),)]),
        pt.from_vertices([(0, 0), (F(1, 2), 0), (0, F(1, 2))]),
        pt.from_vertices([(-2, -1), (F(5, 3), -1), (-2, F(4, 3))]),
        pt.from_vertices([(F(1, 2), 0), (0, F(1, 2))]),
    ]


def test_backends_agree_on_counts():
    for poly in _corpus():
        for n in (0, 1, 2, 5, 11):
            results = {
                backend: pt.count_lattice_points(poly, n, backend=backend)
                for backend in kn.available_backends()
            }
            assert len(set(results.values())) == 1, (poly.vertices, n, results)


def test_count_box_direct():
    # x in [0,5], 2x <= 7  ->  x in {0,1,2,3}
    assert kn.count_box([0], [5], [((2,), 7)], []) == 4
    # equality filters to the even points of [0,6]
    assert kn.count_box([0], [6], [], [((2,), 4)]) == 1
    assert kn.count_box([3], [1], [], []) == 0


def test_overflow_guard_falls_back_to_python():
    big = 2**63
    lo, hi = [0], [3]
    ineqs = [((big,), 2 * big)]
    assert not kn._fits_int64(lo, hi, ineqs, [])
    # 2^63·x <= 2^64  ->  x in {0, 1, 2}; int64 paths would overflow, the
    # dispatcher must still return the exact answer.
    for backend in kn.available_backends():
        assert kn.count_box(lo, hi, ineqs, [], backend=backend) == 3


def test_env_selects_backend(monkeypatch):
    monkeypatch.setenv(kn.BACKEND_ENV, "numpy")
    assert kn.active_backend() == "numpy"
    monkeypatch.setenv(kn.BACKEND_ENV, "python")
    assert kn.active_backend() == "python"
    monkeypatch.delenv(kn.BACKEND_ENV)
    assert kn.active_backend() in ("numba", "numpy")
    monkeypatch.setenv(kn.BACKEND_ENV, "fortran")
    with pytest.raises(KernelConfigError):
        kn.active_backend()


def test_env_flag_drives_counting(monkeypatch):
    poly = pt.from_vertices([(0, 0), (1, 0), (0, 1), (1, 1)])
    monkeypatch.setenv(kn.BACKEND_ENV, "numpy")
    assert pt.count_lattice_points(poly, 3) == 16
    monkeypatch.setenv(kn.BACKEND_ENV, "python")
    assert pt.count_lattice_points(poly, 3) == 16


def test_numpy_chunking_matches_python(monkeypatch):
    monkeypatch.setattr(kn, "_CHUNK_LIMIT", 16)
    lo, hi = [0, 0], [40, 40]
    ineqs = [((1, 1), 40)]
    expected = kn._count_box_python(lo, hi, ineqs, [])
    assert kn.count_box(lo, hi, ineqs, [], backend="numpy") == expected
