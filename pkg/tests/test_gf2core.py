import numpy as np
import pytest

from rauzyveech import f2, gf2core, rvg
from rauzyveech.reference_lists import NS_SIGMA8, NS_TAU6
from rauzyveech.errors import DegenerateForm, NotSymplectic, SingularSeed, SingularVector
from rauzyveech.f2 import F2Matrix
from rauzyveech.forms import arf, nonsingular, quadratic_form, standard_form, form_from_omega
from rauzyveech.perm import rauzy_class, representatives
from rauzyveech.transvect import transvection_matrix
from rauzyveech.forms import omega

TAU6 = representatives("tau-d", 6)
Q6 = quadratic_form(TAU6)


def packed(vs):
    return sorted(f2.vec(v) for v in vs)


def test_symplectic_mod2_elementary():
    w = [0b10, 0b01]  # <e_1, e_2> = 1
    m = F2Matrix((0b11, 0b10), 2)  # Id + E_12
    assert gf2core.is_symplectic_mod2(m, w)
    assert gf2core.is_symplectic_mod2(F2Matrix.identity(2), w)
    w3 = [0b100, 0b000, 0b001]  # <e_1, e_2> = 0, <e_1, e_3> = 1
    m3 = F2Matrix((0b001, 0b110, 0b100), 3)  # e_2 -> e_2 + e_3
    assert not gf2core.is_symplectic_mod2(m3, w3)


def test_preserves_q():
    assert gf2core.preserves_q(F2Matrix.identity(6), Q6)
    singular = next(v for v in range(1, 64) if Q6(v) == 0)
    t = gf2core.symplectic_transvection_mod2(singular, Q6.omega_rows, 6)
    assert not gf2core.preserves_q(t, Q6)
    with pytest.raises(SingularVector):
        gf2core.orthogonal_transvection(singular, Q6)
    with pytest.raises(NotSymplectic):
        gf2core.preserves_q(F2Matrix((1, 1, 4, 8, 16, 32), 6), Q6)


def test_orthogonal_transvection_laws():
    ns = nonsingular(Q6)
    ident = F2Matrix.identity(6)
    for v in ns:
        t = gf2core.orthogonal_transvection(v, Q6)
        assert (t @ t) == ident
    for v in ns:
        for w in ns:
            if Q6(v ^ w):
                tv, tw = gf2core.orthogonal_transvection(v, Q6), gf2core.orthogonal_transvection(w, Q6)
                assert tv @ tw @ tv == gf2core.orthogonal_transvection(v ^ w, Q6)


def test_transvection_reduces_mod2():
    f = omega(TAU6)
    for a in range(6):
        z = transvection_matrix(TAU6.unit(TAU6.name(a)), f)
        assert F2Matrix.from_array(z % 2) == gf2core.orthogonal_transvection(1 << a, Q6)


def test_q_closure_lists():
    assert gf2core.q_closure([1 << a for a in range(6)], Q6) == packed(NS_TAU6)
    assert gf2core.unit_step_fixpoint(Q6) == packed(NS_TAU6)
    s8 = quadratic_form(representatives("sigma-d", 8))
    c = gf2core.q_closure([1 << a for a in range(8)], s8)
    assert c == nonsingular(s8) and len(c) == 120
    assert gf2core.is_q_closed(c, s8)


@pytest.mark.xfail(strict=True, reason="the reference 120-vector list belongs to a relabeled permutation")
def test_sigma8_reference_list():
    s8 = quadratic_form(representatives("sigma-d", 8))
    assert gf2core.q_closure([1 << a for a in range(8)], s8) == packed(NS_SIGMA8)


def test_q_closure_odd():
    for fam, d in (("tau-d", 7), ("tau-d", 9), ("sigma-d", 9)):
        q = quadratic_form(representatives(fam, d))
        c = gf2core.q_closure([1 << a for a in range(d)], q)
        want = sorted(set(nonsingular(q)) - set(q.radical()))
        assert c == want
    assert len(gf2core.q_closure([1 << a for a in range(7)], quadratic_form(representatives("tau-d", 7)))) == 72


def test_q_closure_rejects_singular_seed():
    with pytest.raises(SingularSeed):
        gf2core.q_closure([0b11, 0b1], form_from_omega(standard_form(1), linear=0))


def test_group_closure_orders():
    grp = gf2core.group_closure(rvg.canonical_transvections_mod2(TAU6))
    assert grp.order == 51840
    all_ns = [gf2core.orthogonal_transvection(v, Q6) for v in nonsingular(Q6)]
    big = gf2core.group_closure(all_ns)
    assert big.order == 51840 and big.digest() == grp.digest()
    assert gf2core.group_closure([F2Matrix.identity(4)]).order == 1


def test_every_element_preserves_q():
    grp = gf2core.group_closure(rvg.canonical_transvections_mod2(TAU6))
    rows = gf2core.element_rows(grp)
    assert gf2core.q_preserved_mask(rows, Q6).all()


def test_orthogonal_group_filter():
    orth = gf2core.orthogonal_group(Q6)
    assert len(orth) == 51840


def _forms_by_arf(g):
    d = 2 * g
    q = form_from_omega(standard_form(g), linear=0)
    out = {}
    for c in range(1 << d):
        out.setdefault(arf(q.with_linear(c)), q.with_linear(c))
    return out, gf2core.sp_generators(q.omega_rows, d)


def test_orbit_index_times_stabilizer_g2():
    forms, gens = _forms_by_arf(2)
    sizes = {a: gf2core.form_orbit_index(q, gens) for a, q in forms.items()}
    assert sizes == {1: 6, 0: 10}
    for a, q in forms.items():
        assert len(gf2core.orthogonal_group(q)) * sizes[a] == 720
    # O+(4,2) is the one case not generated by its transvections
    even = forms[0]
    ns = [gf2core.orthogonal_transvection(v, even) for v in nonsingular(even)]
    assert gf2core.group_closure(ns).order == 36


def test_orbit_index_times_transvection_group_g3():
    forms, gens = _forms_by_arf(3)
    for a, q in forms.items():
        ns = [gf2core.orthogonal_transvection(v, q) for v in nonsingular(q)]
        size = gf2core.form_orbit_index(q, gens)
        assert size == (28 if a else 36)
        assert gf2core.group_closure(ns).order * size == f2.symplectic_group_order(3)


def test_orbit_indices_g3_g4():
    gens = gf2core.sp_generators(Q6.omega_rows, 6)
    assert gf2core.form_orbit_index(Q6, gens) == 28
    even = next(Q6.with_linear(c) for c in range(64) if arf(Q6.with_linear(c)) == 0)
    assert gf2core.form_orbit_index(even, gens) == 36
    q8 = quadratic_form(representatives("sigma-d", 8))
    g8 = gf2core.sp_generators(q8.omega_rows, 8)
    assert gf2core.form_orbit_index(q8, g8) == 136  # even Arf
    odd = next(q8.with_linear(c) for c in range(256) if arf(q8.with_linear(c)) == 1)
    assert gf2core.form_orbit_index(odd, g8) == 120


def test_orbit_needs_nondegenerate():
    q7 = quadratic_form(representatives("tau-d", 7))
    with pytest.raises(DegenerateForm):
        gf2core.form_orbit(q7, [])


def test_every_symplectic_element_fixes_a_form():
    # the defect Q_0(uM) + Q_0(u) vanishes on the fixed space, so a single
    # element never moves all polarizing forms
    sp = gf2core.sp_enumeration(Q6.omega_rows, 6)
    rows = gf2core.element_rows(sp)
    rng = np.random.default_rng(0)
    for i in rng.choice(len(rows), 2000, replace=False):
        m = F2Matrix(tuple(int(x) for x in rows[i]), 6)
        assert not gf2core.preserves_no_polarizing_form(m, Q6.omega_rows, 6)


def test_form_violations():
    gens = rvg.canonical_transvections_mod2(TAU6)
    viol = gf2core.form_violations(gens, Q6.omega_rows, 6)
    assert [c for c, v in viol.items() if v is None] == [Q6.linear]


def test_class_matrices_preserve_q():
    cls = rauzy_class(TAU6)
    import random
    rng = random.Random(3)
    for _ in range(50):
        w = cls.random_cycle(TAU6, rng.randint(1, 12), rng)
        m = rvg.kz_walk(w).mod2()
        assert gf2core.preserves_q(m, Q6)
