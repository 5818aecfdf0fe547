from fractions import Fraction as F

import pytest

from quasigrade import polytope as pt


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # First numba call JIT-compiles the counting kernel; keep that one-time
    # cost out of every timed assertion below.
    seg = pt.from_vertices([(0,), (1,)])
    pt.count_lattice_points(seg, 1)


@pytest.fixture(scope="session")
def square():
    return pt.from_vertices([(0, 0), (1, 0), (0, 1), (1, 1)])


@pytest.fixture(scope="session")
def cube():
    return pt.from_vertices([(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)])


@pytest.fixture(scope="session")
def halfseg():
    return pt.from_vertices([(F(0),), (F(1, 2),)])


@pytest.fixture(scope="session")
def tri_half():
    return pt.from_vertices([(0, 0), (F(1, 2), 0), (0, F(1, 2))])


@pytest.fixture(scope="session")
def tri_int():
    return pt.from_vertices([(0, 0), (1, 0), (0, 1)])
