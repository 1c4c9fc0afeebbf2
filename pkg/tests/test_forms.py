import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rauzyveech import f2
from rauzyveech.errors import OutOfRange, Tie
from rauzyveech.forms import (
    QuadraticFormF2,
    arf,
    arf_majority,
    closed_form_counts,
    component_label,
    form_from_omega,
    genus,
    is_regular,
    kernel_basis,
    ns_counts_brute,
    ns_counts_recurrence,
    omega,
    q_eval,
    q_values,
    quadratic_form,
    standard_form,
)
from rauzyveech.perm import Permutation, rauzy_class, representatives
from rauzyveech.transvect import check_symplectic_basis, minimal_symplectic_basis

TAU6 = representatives("tau-d", 6)


def test_omega_entries_and_antisymmetry():
    f = omega(TAU6)
    assert f.pair(TAU6.unit("1"), TAU6.unit("2")) == 1
    rng = random.Random(0)
    verts = list(rauzy_class(TAU6))
    for v in rng.sample(verts, 100):
        m = omega(v).matrix
        assert np.array_equal(m, -m.T)


def test_minimal_bases_are_symplectic():
    for fam, g in (("tau-minimal", 3), ("tau-minimal", 4), ("sigma-minimal", 4), ("sigma-minimal", 5)):
        p, pairs = minimal_symplectic_basis(fam, g)
        assert check_symplectic_basis(pairs, omega(p))


def test_kernel_basis():
    k = kernel_basis(omega(representatives("tau-d", 7)))
    assert len(k) == 1 and tuple(abs(x) for x in k[0]) == (1,) * 7
    assert k[0] in ((1, -1, 1, -1, 1, -1, 1), (-1, 1, -1, 1, -1, 1, -1))
    assert kernel_basis(omega(TAU6)) == []


def test_kernel_of_double_zero_family():
    # genus 3 with all letters 0..6: d = 7 and one kernel vector
    p = representatives("tau-H2n", 3)
    f = omega(p)
    assert p.d == 7 and genus(f) == 3
    assert len(kernel_basis(f)) == 1


def test_kernel_dimension_matches_genus():
    for fam, d in (("tau-d", 6), ("tau-d", 9), ("sigma-d", 10), ("sigma-d", 11)):
        f = omega(representatives(fam, d))
        assert len(kernel_basis(f)) == d - 2 * genus(f)


def test_q_on_basis_and_zero():
    for v in rauzy_class(TAU6):
        q = quadratic_form(v)
        assert all(q(1 << a) == 1 for a in range(6))
        assert q(0) == 0
    q7 = quadratic_form(representatives("tau-d", 7))
    assert q7((1 << 7) - 1) == 0


@settings(max_examples=200, deadline=None)
@given(st.integers(0, (1 << 10) - 1), st.integers(0, (1 << 10) - 1))
def test_polarization(u, v):
    q = quadratic_form(representatives("sigma-d", 10))
    assert q(u ^ v) ^ q(u) ^ q(v) == q.pair(u, v)


def test_polarization_exhaustive_d6():
    q = quadratic_form(TAU6)
    for u in range(64):
        for v in range(64):
            assert q(u ^ v) ^ q(u) ^ q(v) == q.pair(u, v)


def test_vectorized_q_matches_scalar():
    q = quadratic_form(representatives("sigma-d", 9))
    us = np.arange(1 << 9, dtype=np.uint64)
    assert list(q_values(q, us)) == [q_eval(q, int(u)) for u in us]


def test_q_depends_on_ordering_only_through_relabeling():
    # reordering the letter ids moves coordinates but not values
    p = TAU6
    r = p.relabel(list(reversed(p.alphabet)))
    perm = [r.index(p.name(i)) for i in range(6)]
    qp, qr = quadratic_form(p), quadratic_form(r)
    for u in range(64):
        v = sum(1 << perm[i] for i in range(6) if u >> i & 1)
        assert qp(u) == qr(v)


def test_arf_values():
    assert arf(quadratic_form(TAU6)) == 1
    assert arf(quadratic_form(representatives("sigma-d", 8))) == 0
    assert arf(quadratic_form(representatives("tau-d", 7))) == 1
    assert arf_majority(quadratic_form(TAU6)) == 1


def test_arf_constant_on_class():
    assert len({arf(quadratic_form(v)) for v in rauzy_class(TAU6)}) == 1


def test_arf_majority_and_regular_case():
    q9 = quadratic_form(representatives("tau-d", 9))
    assert is_regular(q9)
    with pytest.raises(Tie):
        arf_majority(q9)
    q7 = quadratic_form(representatives("tau-d", 7))
    assert not is_regular(q7)
    assert arf(q7) == arf_majority(q7)


def test_counts_base_cases():
    assert ns_counts_brute(quadratic_form(TAU6)).as_tuple() == (16, 20, 16, 12)
    assert ns_counts_brute(quadratic_form(representatives("sigma-d", 8))).as_tuple() == (56, 64, 72, 64)
    assert ns_counts_recurrence("tau", 6).as_tuple() == (16, 20, 16, 12)


@pytest.mark.parametrize("d", range(6, 17))
def test_counts_agree(d):
    b = ns_counts_brute(quadratic_form(representatives("tau-d", d)))
    assert b == ns_counts_recurrence("tau", d) == closed_form_counts("tau", d)
    assert b.total == 2 ** d
    if d >= 8:
        s = ns_counts_brute(quadratic_form(representatives("sigma-d", d)))
        assert s == ns_counts_recurrence("sigma", d) == closed_form_counts("sigma", d)


def test_counts_closed_form_large_d():
    for fam in ("tau", "sigma"):
        for d in range(8, 41):
            assert ns_counts_recurrence(fam, d) == closed_form_counts(fam, d)
    with pytest.raises(OutOfRange):
        ns_counts_recurrence("tau", 5)


def test_component_labels():
    assert component_label(TAU6).connected_component_name == "H(4)^odd"
    assert component_label(representatives("sigma-d", 8)).connected_component_name == "H(6)^even"
    lab = component_label(representatives("tau-d", 9))
    assert lab.connected_component_name == "H(3,3)^nonhyp" and lab.hyperelliptic is False


def test_hyperelliptic_label():
    lab = component_label(Permutation.from_rows("ABCDEF", "FEDCBA"))
    assert lab.hyperelliptic is True and lab.connected_component_name == "H(4)^hyp"


def test_hyperelliptic_unknown_when_capped():
    lab = component_label(representatives("tau-d", 8), max_class_size=5)
    assert lab.hyperelliptic is None
    assert lab.connected_component_name == "H(6)^odd"


def test_standard_form_and_custom_linear():
    f = standard_form(2)
    q = form_from_omega(f, linear=0)
    assert q(0b11) == 1 and q(0b01) == 0
    assert isinstance(q, QuadraticFormF2)
    assert f2.kernel(q.omega_rows, 4) == []
