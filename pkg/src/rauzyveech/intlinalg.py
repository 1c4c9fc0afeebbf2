"""Exact integer linear algebra on row-major integer matrices.

Matrices are numpy arrays.  Small entries stay in int64; anything that might
overflow is done in Python ints (``dtype=object``).
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

INT64_SAFE = 2**62


def as_int_matrix(a) -> np.ndarray:
    a = np.asarray(a)
    if a.dtype == object:
        return a
    return a.astype(np.int64)


def _fits(a: np.ndarray) -> bool:
    if a.size == 0:
        return True
    return int(np.max(np.abs(a.astype(object)))) < 2**31


def matmul(a, b) -> np.ndarray:
    """Exact product; falls back to Python integers when int64 could overflow."""
    a, b = as_int_matrix(a), as_int_matrix(b)
    if a.dtype != object and b.dtype != object:
        inner = a.shape[-1]
        bound = (int(np.abs(a).max(initial=0)) * int(np.abs(b).max(initial=0)) * max(inner, 1))
        if bound < INT64_SAFE:
            return a @ b
    out = np.asarray(a, dtype=object).dot(np.asarray(b, dtype=object))
    return shrink(out)


def shrink(a: np.ndarray) -> np.ndarray:
    """Return an int64 copy when every entry fits, else keep objects."""
    if a.dtype != object:
        return a
    if a.size == 0 or max(abs(int(x)) for x in a.flat) < INT64_SAFE:
        return a.astype(np.int64)
    return a


def row_echelon(a) -> tuple[list[list[int]], list[list[int]], list[int]]:
    """Unimodular row reduction ``U a = H``.

    Returns ``(H, U, pivots)`` as lists of Python-int rows; ``H`` is in row
    echelon form with positive pivots, rows past ``len(pivots)`` are zero, and
    the matching rows of ``U`` span the left kernel of ``a`` over the integers.
    """
    a = [[int(x) for x in row] for row in np.asarray(a).tolist()]
    m = len(a)
    n = len(a[0]) if m else 0
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if a[i][c] != 0]
            if not nz:
                break
            k = min(nz, key=lambda i: abs(a[i][c]))
            a[r], a[k] = a[k], a[r]
            u[r], u[k] = u[k], u[r]
            done = True
            for i in range(r + 1, m):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                    if a[i][c]:
                        done = False
            if done:
                break
        if r < m and a[r][c] != 0:
            if a[r][c] < 0:
                a[r] = [-x for x in a[r]]
                u[r] = [-x for x in u[r]]
            pivots.append(c)
            r += 1
    return a, u, pivots


def rank(a) -> int:
    return len(row_echelon(a)[2])


def left_kernel(a) -> list[tuple[int, ...]]:
    """Integer basis of ``{x : x a = 0}``, reduced to Hermite normal form."""
    h, u, piv = row_echelon(a)
    basis = u[len(piv):]
    return hermite_basis(basis) if basis else []


def hermite_basis(rows) -> list[tuple[int, ...]]:
    """Canonical (Hermite normal form) basis of the lattice spanned by ``rows``."""
    if not rows:
        return []
    h, _, piv = row_echelon(rows)
    h = h[:len(piv)]
    # reduce entries above each pivot into [0, pivot)
    for i, c in enumerate(piv):
        for k in range(i):
            q = h[k][c] // h[i][c]
            if q:
                h[k] = [x - q * y for x, y in zip(h[k], h[i])]
    return [tuple(r) for r in h]


def same_lattice(rows_a, rows_b) -> bool:
    return hermite_basis(list(rows_a)) == hermite_basis(list(rows_b))


def in_lattice(v, rows) -> bool:
    """Whether ``v`` is an integer combination of ``rows``."""
    rows = list(rows)
    if not rows:
        return not any(v)
    return same_lattice(rows, rows + [list(v)])


def inverse(a) -> np.ndarray:
    """Exact inverse of a unimodular integer matrix."""
    n = len(a)
    m = [[Fraction(int(x)) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(np.asarray(a).tolist())]
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            raise ValueError("matrix is singular")
        m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        m[c] = [x / piv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    out = [[row[n + j] for j in range(n)] for row in m]
    if any(x.denominator != 1 for row in out for x in row):
        raise ValueError("inverse is not integral")
    return shrink(np.array([[int(x) for x in row] for row in out], dtype=object))


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)
