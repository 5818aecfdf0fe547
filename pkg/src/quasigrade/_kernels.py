"""Hot kernel for lattice-point counting over an integer box.

Counting integer points of a dilated polytope is the one inner loop that
dominates runtime, so it is JIT-compiled with numba by default.  The
environment variable QUASIGRADE_BACKEND selects the implementation:

  numba   - @njit odometer over the box (default when numba imports)
  numpy   - vectorized mask over the enumerated box
  python  - pure-Python loop on arbitrary-precision integers

All three are exact.  The numba and numpy paths work on int64; before using
them the dispatcher bounds every intermediate product exactly in Python
integers and silently falls back to the python path if int64 could overflow,
so exactness never depends on the backend choice.
"""

from __future__ import annotations

import itertools
import os
from typing import Sequence

import numpy as np

from .errors import KernelConfigError

BACKEND_ENV = "QUASIGRADE_BACKEND"
_INT64_SAFE = 2**62
_CHUNK_LIMIT = 1 << 21  # points per numpy slab

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAVE_NUMBA = False


IntRows = Sequence[tuple[Sequence[int], int]]


def available_backends() -> tuple[str, ...]:
    return ("numba", "numpy", "python") if _HAVE_NUMBA else ("numpy", "python")


def active_backend() -> str:
    """Backend selected by the environment, validated."""
    choice = os.environ.get(BACKEND_ENV, "").strip().lower()
    if not choice:
        return "numba" if _HAVE_NUMBA else "numpy"
    if choice not in ("numba", "numpy", "python"):
        raise KernelConfigError(
            f"unknown {BACKEND_ENV}={choice!r}; expected numba, numpy or python"
        )
    if choice == "numba" and not _HAVE_NUMBA:
        return "numpy"
    return choice


if _HAVE_NUMBA:

    @njit(cache=True)
    def _count_box_numba(lo, hi, ineq_a, ineq_b, eq_c, eq_d):  # pragma: no cover - jitted
        m = lo.shape[0]
        for j in range(m):
            if lo[j] > hi[j]:
                return 0
        x = lo.copy()
        total = 0
        while True:
            ok = True
            for k in range(ineq_a.shape[0]):
                s = 0
                for j in range(m):
                    s += ineq_a[k, j] * x[j]
                if s > ineq_b[k]:
                    ok = False
                    break
            if ok:
                for k in range(eq_c.shape[0]):
                    s = 0
                    for j in range(m):
                        s += eq_c[k, j] * x[j]
                    if s != eq_d[k]:
                        ok = False
                        break
            if ok:
                total += 1
            j = m - 1
            while j >= 0:
                x[j] += 1
                if x[j] <= hi[j]:
                    break
                x[j] = lo[j]
                j -= 1
            if j < 0:
                break
        return total


def _count_box_numpy(lo, hi, ineq_a, ineq_b, eq_c, eq_d) -> int:
    m = len(lo)
    if any(l > h for l, h in zip(lo, hi)):
        return 0
    axes = [np.arange(l, h + 1, dtype=np.int64) for l, h in zip(lo, hi)]
    total = 0
    # Slab along the first axis so memory stays bounded on large boxes.
    tail = int(np.prod([a.size for a in axes[1:]], dtype=np.int64)) if m > 1 else 1
    step = max(1, _CHUNK_LIMIT // max(1, tail))
    for start in range(0, axes[0].size, step):
        head = axes[0][start : start + step]
        mesh = np.meshgrid(head, *axes[1:], indexing="ij")
        pts = np.stack([g.reshape(-1) for g in mesh], axis=1)
        mask = np.ones(pts.shape[0], dtype=bool)
        if ineq_a.size:
            vals = pts @ ineq_a.T
            mask &= (vals <= ineq_b).all(axis=1)
        if eq_c.size:
            vals = pts @ eq_c.T
            mask &= (vals == eq_d).all(axis=1)
        total += int(mask.sum())
    return total


def _count_box_python(
    lo: Sequence[int], hi: Sequence[int], ineqs: IntRows, eqs: IntRows
) -> int:
    if any(l > h for l, h in zip(lo, hi)):
        return 0
    total = 0
    for x in itertools.product(*(range(l, h + 1) for l, h in zip(lo, hi))):
        if all(sum(a * v for a, v in zip(row, x)) <= b for row, b in ineqs) and all(
            sum(c * v for c, v in zip(row, x)) == d for row, d in eqs
        ):
            total += 1
    return total


def _fits_int64(lo: Sequence[int], hi: Sequence[int], ineqs: IntRows, eqs: IntRows) -> bool:
    corner = [max(abs(l), abs(h)) for l, h in zip(lo, hi)]
    for rows in (ineqs, eqs):
        for row, rhs in rows:
            if abs(rhs) >= _INT64_SAFE:
                return False
            if sum(abs(a) * c for a, c in zip(row, corner)) >= _INT64_SAFE:
                return False
    return True


def count_box(
    lo: Sequence[int],
    hi: Sequence[int],
    ineqs: IntRows,
    eqs: IntRows,
    backend: str | None = None,
) -> int:
    """Count integer points x with lo <= x <= hi, a·x <= b and c·x = d rowwise."""
    choice = backend if backend is not None else active_backend()
    if choice not in ("numba", "numpy", "python"):
        raise KernelConfigError(f"unknown backend {choice!r}")
    if choice == "numba" and not _HAVE_NUMBA:
        choice = "numpy"
    if choice != "python" and not _fits_int64(lo, hi, ineqs, eqs):
        choice = "python"
    if choice == "python":
        return _count_box_python(lo, hi, ineqs, eqs)
    m = len(lo)
    lo_arr = np.asarray(lo, dtype=np.int64)
    hi_arr = np.asarray(hi, dtype=np.int64)
    ineq_a = np.asarray([row for row, _ in ineqs], dtype=np.int64).reshape(len(ineqs), m)
    ineq_b = np.asarray([b for _, b in ineqs], dtype=np.int64)
    eq_c = np.asarray([row for row, _ in eqs], dtype=np.int64).reshape(len(eqs), m)
    eq_d = np.asarray([d for _, d in eqs], dtype=np.int64)
    if choice == "numba":
        return int(_count_box_numba(lo_arr, hi_arr, ineq_a, ineq_b, eq_c, eq_d))
    return _count_box_numpy(lo_arr, hi_arr, ineq_a, ineq_b, eq_c, eq_d)
