"""The intersection form, its mod-2 quadratic refinement and spin data."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import f2, intlinalg
from .errors import (
    DimensionMismatch,
    DimensionTooLarge,
    OutOfRange,
    SizeExceeded,
    Tie,
)
from .perm import (
    Permutation,
    StratumProfile,
    is_hyperelliptic_vertex,
    rauzy_class,
    stratum_profile,
)


@dataclass(frozen=True)
class IntersectionForm:
    """``matrix[a, b] = <e_a, e_b>``, indexed by letter id; ``ordering`` is the top row."""

    matrix: np.ndarray
    ordering: tuple

    @property
    def d(self) -> int:
        return self.matrix.shape[0]

    def pair(self, u, v) -> int:
        """``<u, v> = u Omega v^T``."""
        return int(intlinalg.matmul(intlinalg.matmul(np.asarray(u)[None, :], self.matrix),
                                    np.asarray(v)[:, None])[0, 0])

    def pair_many(self, us, v) -> np.ndarray:
        return intlinalg.matmul(np.asarray(us), intlinalg.matmul(self.matrix, np.asarray(v)))

    def mod2_rows(self) -> tuple[int, ...]:
        return tuple(f2.vec(row) for row in (self.matrix % 2).tolist())

    def __hash__(self):
        return hash((self.matrix.tobytes(), self.ordering))

    def __eq__(self, other):
        return (isinstance(other, IntersectionForm) and self.ordering == other.ordering
                and np.array_equal(self.matrix, other.matrix))


def omega(p: Permutation) -> IntersectionForm:
    d = p.d
    pt, pb = p.positions()
    m = np.zeros((d, d), dtype=np.int64)
    for a in range(d):
        for b in range(d):
            if pt[a] < pt[b] and pb[a] > pb[b]:
                m[a, b] = 1
            elif pt[a] > pt[b] and pb[a] < pb[b]:
                m[a, b] = -1
    return IntersectionForm(m, p.top)


def standard_form(g: int) -> IntersectionForm:
    """``<e_{2i}, e_{2i+1}> = 1`` on ``2g`` coordinates."""
    m = np.zeros((2 * g, 2 * g), dtype=np.int64)
    for i in range(g):
        m[2 * i, 2 * i + 1] = 1
        m[2 * i + 1, 2 * i] = -1
    return IntersectionForm(m, tuple(range(2 * g)))


def kernel_basis(f: IntersectionForm) -> list[tuple[int, ...]]:
    """Integer basis of ``ker Omega`` in Hermite normal form (empty if nondegenerate)."""
    return intlinalg.left_kernel(f.matrix)


def genus(f: IntersectionForm) -> int:
    return intlinalg.rank(f.matrix) // 2


# --- quadratic forms -------------------------------------------------------


@dataclass(frozen=True)
class QuadraticFormF2:
    """A mod-2 quadratic form polarizing a symmetric zero-diagonal matrix.

    ``Q(u) = sum_{a<b} u_a w_ab u_b + sum_a c_a u_a``.  The quadratic part
    does not depend on how pairs are ordered mod 2, so the form is pinned
    down by ``omega_rows`` and the values ``c`` on the basis (bit mask).
    ``ordering`` records the letter order used for ``a < b``.
    """

    omega_rows: tuple
    linear: int
    d: int
    ordering: tuple = ()

    def __call__(self, u: int) -> int:
        return q_eval(self, u)

    def pair(self, u: int, v: int) -> int:
        return f2.pairing(u, v, self.omega_rows)

    def radical(self) -> list[int]:
        return f2.kernel(self.omega_rows, self.d)

    def with_linear(self, linear: int) -> "QuadraticFormF2":
        return QuadraticFormF2(self.omega_rows, linear, self.d, self.ordering)

    def compose(self, rows: Sequence[int]) -> "QuadraticFormF2":
        """``u -> Q(u M)`` for a symplectic ``M`` given by its rows."""
        return self.with_linear(f2.vec(q_eval(self, r) for r in rows))


def quadratic_form(p: Permutation) -> QuadraticFormF2:
    return QuadraticFormF2(omega(p).mod2_rows(), (1 << p.d) - 1, p.d, p.top)


def form_from_omega(f: IntersectionForm, linear: int | None = None) -> QuadraticFormF2:
    mask = (1 << f.d) - 1 if linear is None else linear
    return QuadraticFormF2(f.mod2_rows(), mask, f.d, f.ordering)


def q_eval(q: QuadraticFormF2, u: int) -> int:
    """Literal double sum over the stored letter ordering."""
    if u >> q.d:
        raise DimensionMismatch("vector wider than the form")
    order = q.ordering or tuple(range(q.d))
    present = [a for a in order if u >> a & 1]
    total = f2.popcount(u & q.linear)
    for i, a in enumerate(present):
        row = q.omega_rows[a]
        for b in present[i + 1:]:
            total += row >> b & 1
    return total & 1


def q_values(q: QuadraticFormF2, us: np.ndarray) -> np.ndarray:
    """Vectorized ``Q`` on an array of packed vectors (uint64)."""
    us = us.astype(np.uint64)
    twice = np.zeros(len(us), dtype=np.int64)
    for a in range(q.d):
        bit = ((us >> np.uint64(a)) & np.uint64(1)).astype(np.int64)
        twice += bit * np.bitwise_count(us & np.uint64(q.omega_rows[a])).astype(np.int64)
    lin = np.bitwise_count(us & np.uint64(q.linear)).astype(np.int64)
    return ((twice // 2 + lin) & 1).astype(np.uint8)


def all_vectors(d: int) -> np.ndarray:
    return np.arange(1 << d, dtype=np.uint64)


def nonsingular(q: QuadraticFormF2) -> list[int]:
    """Every ``u`` with ``Q(u) = 1``, sorted as integers."""
    if q.d > 24:
        raise DimensionTooLarge("exhaustive enumeration limited to d <= 24")
    us = all_vectors(q.d)
    return [int(x) for x in us[q_values(q, us) == 1]]


def arf(q: QuadraticFormF2) -> int:
    """``sum Q(a_i) Q(b_i)`` over a symplectic basis of a complement of the radical.

    When ``Q`` vanishes on the radical this is the majority value of ``Q``
    and does not depend on the complement.  Otherwise the complement is the
    one produced greedily from the coordinate vectors.
    """
    pairs = f2.symplectic_basis(q.omega_rows, q.d)
    return sum(q_eval(q, a) * q_eval(q, b) for a, b in pairs) & 1


def arf_majority(q: QuadraticFormF2) -> int:
    """Majority value of ``Q`` over the whole space, by brute force."""
    counts = ns_counts_brute(q)
    ns = counts.ns0 + counts.ns1
    s = counts.s0 + counts.s1
    if ns == s:
        raise Tie(f"{ns} non-singular and {s} singular vectors")
    return int(ns > s)


def is_regular(q: QuadraticFormF2) -> bool:
    """Whether ``Q`` is non-zero somewhere on the radical of its polarization."""
    return any(q_eval(q, k) for k in q.radical())


# --- counting --------------------------------------------------------------


@dataclass(frozen=True)
class NSCounts:
    ns0: int
    ns1: int
    s0: int
    s1: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.ns0, self.ns1, self.s0, self.s1)

    @property
    def total(self) -> int:
        return self.ns0 + self.ns1 + self.s0 + self.s1

    def step(self) -> "NSCounts":
        return NSCounts(self.ns0 + self.ns1, self.ns1 + self.s0,
                        self.s0 + self.s1, self.s1 + self.ns0)


def ns_counts_brute(q: QuadraticFormF2) -> NSCounts:
    if q.d > 24:
        raise DimensionTooLarge("exhaustive count limited to d <= 24")
    us = all_vectors(q.d)
    val = q_values(q, us).astype(bool)
    odd = (np.bitwise_count(us) & 1).astype(bool)
    return NSCounts(int(np.sum(val & ~odd)), int(np.sum(val & odd)),
                    int(np.sum(~val & ~odd)), int(np.sum(~val & odd)))


BASE_COUNTS = {"tau": (6, NSCounts(16, 20, 16, 12)), "sigma": (8, NSCounts(56, 64, 72, 64))}


def ns_counts_recurrence(family: str, d: int) -> NSCounts:
    if family not in BASE_COUNTS:
        raise OutOfRange(f"unknown family {family!r}")
    d0, counts = BASE_COUNTS[family]
    if d < d0:
        raise OutOfRange(f"{family} counts start at d={d0}")
    for _ in range(d - d0):
        counts = counts.step()
    return counts


# 2^{(d-2)/2} cos(d pi/4) and 2^{(d-2)/2} sin(d pi/4) as exact integers.
# For even d the trig values are 0 or +-1; for odd d they are +-sqrt(2)/2,
# which turns the prefactor into 2^{(d-3)/2}.
_COS_SIGN = (1, 1, 0, -1, -1, -1, 0, 1)
_SIN_SIGN = (0, 1, 1, 1, 0, -1, -1, -1)


def trig_terms(d: int) -> tuple[int, int]:
    """``(C, S)`` with ``C = 2^{(d-2)/2} cos(d pi/4)``, ``S`` likewise with sin."""
    scale = 2 ** ((d - 2) // 2) if d % 2 == 0 else 2 ** ((d - 3) // 2)
    r = d % 8
    return _COS_SIGN[r] * scale, _SIN_SIGN[r] * scale


def closed_form_counts(family: str, d: int) -> NSCounts:
    if d < 2:
        raise OutOfRange("d must be at least 2")
    c, s = trig_terms(d)
    base = 2 ** (d - 2)
    sign = {"tau": 1, "sigma": -1}[family]
    return NSCounts(base + sign * c, base - sign * s, base - sign * c, base + sign * s)


# --- component labels -----------------------------------------------------


@dataclass(frozen=True)
class ComponentLabel:
    profile: StratumProfile
    spin: str | None
    hyperelliptic: bool | None
    connected_component_name: str

    def to_json(self) -> dict:
        return {
            "profile": sorted(self.profile.orders, reverse=True),
            "genus": self.profile.genus,
            "spin": self.spin,
            "hyperelliptic": self.hyperelliptic,
            "name": self.connected_component_name,
        }


def hyperellipticity(p: Permutation, max_size: int = 10**6) -> bool | None:
    """Whether the Rauzy class of ``p`` holds a vertex with reversed rows.

    None when the class is larger than ``max_size``.
    """
    try:
        cls = rauzy_class(p, max_size=max_size)
    except SizeExceeded:
        return None
    return any(is_hyperelliptic_vertex(v) for v in cls)


def component_label(p: Permutation, max_class_size: int = 10**6,
                    check_hyperelliptic: bool = True) -> ComponentLabel:
    prof = stratum_profile(p)
    orders = prof.orders
    g = prof.genus
    all_even = all(m % 2 == 0 for m in orders)
    spin = None
    if all_even:
        spin = "odd" if arf(quadratic_form(p)) else "even"
    # hyperelliptic components exist only in H(2g-2) and H(g-1,g-1)
    can_be_hyp = orders == (2 * g - 2,) or orders == (g - 1, g - 1)
    hyp: bool | None = False
    if can_be_hyp:
        hyp = hyperellipticity(p, max_class_size) if check_hyperelliptic else None
    # component names follow the Kontsevich-Zorich classification; an
    # unknown hyperelliptic flag is named as if non-hyperelliptic
    if hyp:
        suffix = "hyp"
    elif g <= 2:
        suffix = ""
    elif all_even:
        suffix = spin
        if g == 3 and spin == "even" and can_be_hyp:
            # at genus 3 the even-spin part of H(4) and H(2,2) is the hyperelliptic one
            suffix = "hyp"
    elif can_be_hyp:
        suffix = "nonhyp"
    else:
        suffix = ""
    name = prof.name() + ("^" + suffix if suffix else "")
    return ComponentLabel(prof, spin, hyp, name)
