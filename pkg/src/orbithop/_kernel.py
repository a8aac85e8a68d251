"""Compiled inner loop for one map visit.

Mirrors ``maps.step`` / ``maps.orbit_samples`` operation for operation so the
results are bit-identical; tests compare the two paths directly.
"""

import math

import numpy as np
from numba import njit

OK = 0
ESCAPED = 1
STUCK = 2

LOGISTIC = 0
CHEBYSHEV = 1
CHEBYSHEV_UNIT = 2


@njit(cache=True)
def _step(kind, param, x):
    if kind == LOGISTIC:
        return param * x * (1.0 - x)
    if kind == CHEBYSHEV:
        return math.cos(param * math.acos(x))
    return (1.0 - math.cos(param * math.acos(1.0 - 2.0 * x))) / 2.0


@njit(cache=True)
def _escaped(kind, y):
    if kind == CHEBYSHEV:
        return not (-1.0 <= y <= 1.0)
    return not (0.0 < y < 1.0)


@njit(cache=True)
def orbit_start(seed, offset, j):
    v = seed + j * offset
    return v - math.floor(v)


@njit(cache=True)
def run_visit(kind, param, seed, offset, j0, orbits, settles, samples, out):
    """Fill ``out`` with the samples of orbits j0 .. j0+orbits-1.

    Returns (n_written, status, bad_orbit_index, bad_value). Orbits whose
    wrapped start is exactly 0 are skipped and write nothing.
    """
    n = 0
    for jj in range(orbits):
        j = j0 + jj
        x = orbit_start(seed, offset, j)
        if x == 0.0:
            continue
        for _ in range(settles):
            y = _step(kind, param, x)
            if _escaped(kind, y):
                return n, ESCAPED, j, y
            x = y
        first = n
        same = True
        for s in range(samples):
            y = _step(kind, param, x)
            if _escaped(kind, y):
                return n, ESCAPED, j, y
            x = y
            out[n] = x
            if x != out[first]:
                same = False
            n += 1
        if same and samples > 1:
            return first, STUCK, j, x
    return n, OK, -1, 0.0


def warm_up():
    """Trigger compilation for the argument types used by the generator."""
    buf = np.empty(4, dtype=np.float64)
    run_visit(LOGISTIC, 3.9, 0.1, 1e-6, 0, 1, 1, 4, buf)
