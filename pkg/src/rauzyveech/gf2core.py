"""Orthogonal transvections, Q-closed sets and finite group enumerations."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import f2
from .errors import DegenerateForm, DimensionMismatch, NotSymplectic, SingularSeed, SingularVector
from .f2 import F2Matrix, SubgroupEnumeration
from .forms import QuadraticFormF2, q_eval, q_values


def _rows_of(m) -> tuple:
    return m.rows if isinstance(m, F2Matrix) else tuple(m)


def is_symplectic_mod2(m: F2Matrix, omega_rows: Sequence[int]) -> bool:
    """``M W M^T == W``."""
    if len(omega_rows) != m.d:
        raise DimensionMismatch("form and matrix sizes differ")
    w = F2Matrix(tuple(omega_rows), m.d)
    return (m @ w @ m.transpose()).rows == w.rows


def preserves_q(m: F2Matrix, q: QuadraticFormF2) -> bool:
    """``Q(e_a M) == Q(e_a)`` for every basis vector; enough once ``M`` is symplectic."""
    if not is_symplectic_mod2(m, q.omega_rows):
        raise NotSymplectic("matrix does not preserve the polarization")
    return all(q_eval(q, r) == (q.linear >> a & 1) for a, r in enumerate(m.rows))


def symplectic_transvection_mod2(v: int, omega_rows: Sequence[int], d: int) -> F2Matrix:
    """``u -> u + <u, v> v``."""
    return F2Matrix(tuple((1 << a) ^ (v if f2.pairing(1 << a, v, omega_rows) else 0)
                          for a in range(d)), d)


def orthogonal_transvection(v: int, q: QuadraticFormF2) -> F2Matrix:
    if not q_eval(q, v):
        raise SingularVector(f"Q({v:#b}) = 0")
    return symplectic_transvection_mod2(v, q.omega_rows, q.d)


def _check_seeds(seeds, q):
    seeds = sorted(set(int(s) for s in seeds))
    for s in seeds:
        if not q_eval(q, s):
            raise SingularSeed(f"seed {s:#b} is singular")
    return seeds


def q_closure(seeds: Iterable[int], q: QuadraticFormF2) -> list[int]:
    """Smallest set containing ``seeds`` and every non-singular ``v + w``
    with ``v, w`` in the set; sorted as integers."""
    seeds = _check_seeds(seeds, q)
    members = set(seeds)
    known = np.array(seeds, dtype=np.uint64)
    queue = list(seeds)
    while queue:
        batch = np.array(queue, dtype=np.uint64)
        queue = []
        # pair every new vector with everything known so far
        sums = (batch[:, None] ^ known[None, :]).ravel()
        sums = np.unique(sums[q_values(q, sums) == 1])
        fresh = [int(x) for x in sums if int(x) not in members]
        if fresh:
            members.update(fresh)
            known = np.concatenate([known, np.array(fresh, dtype=np.uint64)])
            queue = fresh
    return sorted(members)


def unit_step_fixpoint(q: QuadraticFormF2) -> list[int]:
    """``S_1 = {e_a}``, ``S_{k+1} = S_k + {v + e_a non-singular}`` until stable."""
    basis = [1 << a for a in range(q.d)]
    s = set(_check_seeds(basis, q))
    while True:
        new = {v ^ e for v in s for e in basis if q_eval(q, v ^ e)} - s
        if not new:
            return sorted(s)
        s |= new


def is_q_closed(vectors: Iterable[int], q: QuadraticFormF2) -> bool:
    vs = set(vectors)
    return all(v ^ w in vs for v in vs for w in vs if v != w and q_eval(q, v ^ w))


def group_closure(generators: Sequence, cap: int = 10**8) -> SubgroupEnumeration:
    """Enumerate the group generated by F2 matrices (or 0/1 arrays)."""
    arrays = [m.to_array() if isinstance(m, F2Matrix) else np.asarray(m) for m in generators]
    return f2.closure(arrays, modulus=2, cap=cap)


def element_rows(enum: SubgroupEnumeration) -> np.ndarray:
    """Packed rows of every element, shape (N, d), as uint64 bit vectors."""
    codec = enum.codec
    out = np.zeros((len(enum.keys), codec.n), dtype=np.uint64)
    mask = np.uint64((1 << codec.width) - 1)
    for i in range(codec.n):
        w, s = codec.slot(i)
        out[:, i] = (enum.keys[:, w] >> np.uint64(s)) & mask
    return out


def q_preserved_mask(rows: np.ndarray, q: QuadraticFormF2) -> np.ndarray:
    """For each element (given by packed rows), whether it fixes ``Q`` on the basis."""
    ok = np.ones(len(rows), dtype=bool)
    for a in range(q.d):
        ok &= q_values(q, rows[:, a]) == (q.linear >> a & 1)
    return ok


def nonzero_vectors(d: int) -> range:
    return range(1, 1 << d)


def sp_generators(omega_rows: Sequence[int], d: int) -> list[F2Matrix]:
    """Transvections along every nonzero vector not in the radical."""
    return [symplectic_transvection_mod2(v, omega_rows, d) for v in nonzero_vectors(d)
            if any(f2.pairing(v, 1 << a, omega_rows) for a in range(d))]


@lru_cache(maxsize=4)
def _sp_enumeration_cached(omega_rows: tuple, d: int) -> SubgroupEnumeration:
    # transvections along basis vectors and pair sums generate; use all of
    # them anyway so the generating set needs no argument
    return group_closure(sp_generators(omega_rows, d))


def sp_enumeration(omega_rows: Sequence[int], d: int) -> SubgroupEnumeration:
    """Every element of ``Sp`` of a nondegenerate form (cached)."""
    if f2.kernel(omega_rows, d):
        raise DegenerateForm("form has a radical")
    return _sp_enumeration_cached(tuple(omega_rows), d)


def orthogonal_group(q: QuadraticFormF2) -> np.ndarray:
    """Packed rows of every element of ``O(Q)``, by filtering ``Sp``."""
    sp = sp_enumeration(q.omega_rows, q.d)
    rows = element_rows(sp)
    return rows[q_preserved_mask(rows, q)]


def form_orbit(q: QuadraticFormF2, sp_generators: Sequence) -> list[int]:
    """Orbit of ``Q`` under ``Q -> Q o M``, as linear masks of the forms."""
    if f2.kernel(q.omega_rows, q.d):
        raise DegenerateForm("form has a radical")
    gens = [_rows_of(m) for m in sp_generators]
    seen = {q.linear}
    stack = [q.linear]
    while stack:
        c = stack.pop()
        cur = q.with_linear(c)
        for rows in gens:
            nxt = cur.compose(rows).linear
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return sorted(seen)


def form_orbit_index(q: QuadraticFormF2, sp_generators: Sequence) -> int:
    """Size of the orbit of ``Q``; the index of ``O(Q)`` in ``Sp``."""
    return len(form_orbit(q, sp_generators))


def polarizing_forms(omega_rows: Sequence[int], d: int, ordering=()) -> list[QuadraticFormF2]:
    return [QuadraticFormF2(tuple(omega_rows), c, d, ordering) for c in range(1 << d)]


def preserves_no_polarizing_form(m: F2Matrix, omega_rows: Sequence[int], d: int) -> bool:
    """Whether no quadratic form polarizing ``W`` is fixed by ``M``.

    With ``Q = Q_0 + c`` (``c`` linear), ``Q o M = Q`` reads
    ``Q_0(e_a M) + Q_0(e_a) = <c, e_a (M + I)>`` for all ``a``; return True
    when that linear system for ``c`` has no solution.
    """
    q0 = QuadraticFormF2(tuple(omega_rows), 0, d)
    rhs = [q_eval(q0, r) ^ q_eval(q0, 1 << a) for a, r in enumerate(m.rows)]
    # c . (row_a + e_a) = rhs_a
    eqs = [r ^ (1 << a) for a, r in enumerate(m.rows)]
    return f2.solve(eqs, rhs, d) is None


def form_violations(generators: Sequence[F2Matrix], omega_rows: Sequence[int], d: int) -> dict[int, int | None]:
    """For every polarizing form ``Q_0 + c`` (keyed by ``c``), the index of the
    first generator that does not fix it, or None when all of them do.

    A single symplectic ``M`` always fixes some polarizing form (on the fixed
    space of ``M`` the defect ``Q_0(uM) + Q_0(u)`` vanishes), so a group
    preserves no such form only through several generators at once.
    """
    out = {}
    for q in polarizing_forms(omega_rows, d):
        out[q.linear] = next((i for i, m in enumerate(generators) if not preserves_q(m, q)), None)
    return out
