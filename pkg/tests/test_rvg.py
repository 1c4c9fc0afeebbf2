import random

import numpy as np
import pytest

from rauzyveech import gf2core, intlinalg, rvg
from rauzyveech.errors import KernelNotFixed, NotSymplectic, OutOfRange
from rauzyveech.forms import omega, quadratic_form
from rauzyveech.perm import (
    Walk,
    rauzy_class,
    rauzy_step,
    representatives,
    split_singularity,
    walk_from_kinds,
)
from rauzyveech.transvect import compose, e_sharp, transvection_matrix

TAU6 = representatives("tau-d", 6)
TAU7 = representatives("tau-d", 7)


def test_kz_arrow_matrix():
    a = rauzy_step(TAU6, "top")
    m = rvg.kz_arrow(a).matrix
    want = np.eye(6, dtype=int)
    want[a.loser, a.winner] = 1
    assert np.array_equal(m, want)


def test_kz_matrices_carry_forms():
    for v in rauzy_class(TAU6):
        for kind in ("top", "bottom"):
            a = rauzy_step(v, kind)
            b = rvg.kz_arrow(a).matrix
            assert np.array_equal(intlinalg.matmul(intlinalg.matmul(b, omega(v).matrix), b.T),
                                  omega(a.target).matrix)


def test_kz_walk_multiplicative():
    rng = random.Random(2)
    for _ in range(20):
        w1 = walk_from_kinds(TAU6, [rng.choice(("top", "bottom")) for _ in range(5)])
        w2 = walk_from_kinds(w1.end, [rng.choice(("top", "bottom")) for _ in range(5)])
        assert np.array_equal(rvg.kz_walk(w1 + w2).matrix,
                              intlinalg.matmul(rvg.kz_walk(w2).matrix, rvg.kz_walk(w1).matrix))
        inv = rvg.kz_inverse(w1)
        assert np.array_equal(intlinalg.matmul(inv, rvg.kz_walk(w1).matrix), np.eye(6, dtype=int))
    assert np.array_equal(rvg.kz_walk(Walk(TAU6)).matrix, np.eye(6, dtype=int))


def test_cycles_symplectic_and_q():
    cls = rauzy_class(TAU7)
    rng = random.Random(5)
    for _ in range(40):
        assert rvg.cycle_check(cls.random_cycle(TAU7, rng.randint(1, 14), rng)) == (True, True)


def test_dehn_twists_all_letters():
    cls = rauzy_class(TAU6)
    f = omega(TAU6)
    signs = []
    for a in range(6):
        w = rvg.dehn_twist_cycle(TAU6, a, cls)
        assert w.is_cycle()
        s = rvg.twist_sign(TAU6, a, cls)
        e = tuple(int(i == a) for i in range(6))
        assert np.array_equal(rvg.kz_walk(w).matrix, transvection_matrix(e, f, s))
        signs.append(s)
    assert signs == [1, 1, -1, 1, -1, -1]
    assert rvg.twist_sign(TAU6, "1", cls) == signs[0]


def test_dehn_twist_without_prefix():
    # the last top letter is already a winner: gamma is empty
    a = TAU6.top[-1]
    w = rvg.dehn_twist_cycle(TAU6, a)
    assert len(w) == len(rvg.pure_cycle(TAU6, "top"))


def test_rv_mod2():
    r = rvg.rv_mod2_check(TAU6)
    assert r.closure_ok and r.group_order == r.orthogonal_order == 51840
    assert r.status == "verified"
    r8 = rvg.rv_mod2_check(representatives("sigma-d", 8))
    assert r8.closure_ok and r8.closure_size == 120 and r8.status == "verified-with-cited-oracle"
    r7 = rvg.rv_mod2_check(TAU7)
    assert r7.closure_ok and r7.closure_size == 72 and r7.group_order is None


def test_decompose_identity_and_errors():
    f = omega(TAU7)
    dec = rvg.decompose(np.eye(7, dtype=int), f)
    assert np.array_equal(dec.s1, np.eye(6, dtype=int)) and not dec.s0.any()
    assert dec.complement == tuple(tuple(int(i == j) for j in range(7)) for i in range(6))
    with pytest.raises(NotSymplectic):
        rvg.decompose(np.diag([2, 1, 1, 1, 1, 1, 1]), f)
    # u -> u - 2 u_0 e#: symplectic since e# is in the kernel, but e# -> -e#
    m = np.eye(7, dtype=int) - 2 * np.outer(np.eye(7, dtype=int)[0], e_sharp(TAU7))
    assert rvg.is_symplectic(m, f)
    with pytest.raises(KernelNotFixed):
        rvg.decompose(m, f)


def test_decompose_reconstructs_cycles():
    cls = rauzy_class(TAU7)
    f = omega(TAU7)
    rng = random.Random(7)
    for _ in range(20):
        b = rvg.kz_walk(cls.random_cycle(TAU7, rng.randint(1, 12), rng)).matrix
        assert np.array_equal(rvg.decompose(b, f).reconstruct(), b)


def test_cocycle_law():
    cls = rauzy_class(TAU7)
    f = omega(TAU7)
    rng = random.Random(8)
    for _ in range(30):
        s = rvg.kz_walk(cls.random_cycle(TAU7, rng.randint(1, 10), rng)).matrix
        t = rvg.kz_walk(cls.random_cycle(TAU7, rng.randint(1, 10), rng)).matrix
        assert rvg.cocycle_holds(s, t, f)


@pytest.mark.parametrize("left_pairing", [False, True])
def test_shear(left_pairing):
    f = omega(TAU7)
    sharp = e_sharp(TAU7)
    for a in range(6):
        v = tuple(int(i == a) for i in range(7))
        for k in (1, 2, -1):
            m = rvg.shear(v, f, sharp, k, left_pairing)
            for i in range(7):
                u = tuple(int(j == i) for j in range(7))
                c = f.pair(u, v) if left_pairing else f.pair(v, u)
                want = np.array(u) + k * c * np.array(sharp)
                assert np.array_equal(intlinalg.matmul(np.array([u]), m)[0], want)


def test_shear_composes_from_transvections():
    f = omega(TAU7)
    sharp = e_sharp(TAU7)
    v = TAU7.unit("3")
    vm = tuple(a - b for a, b in zip(v, sharp))
    assert np.array_equal(rvg.shear(v, f, sharp),
                          compose(transvection_matrix(vm, f, -1), transvection_matrix(v, f)))


def test_structure_regular_case():
    r = rvg.oq_structure_check(9, pairs=200)
    assert r.regular and r.ok, r.checks
    with pytest.raises(OutOfRange):
        rvg.oq_structure_check(11)


def test_radical_split_odd():
    q = quadratic_form(TAU7)
    basis, pivots, comp = rvg.radical_split(q.omega_rows, 7)
    assert basis == [(1 << 7) - 1] and pivots == [6] and comp == list(range(6))


def test_embedding_split():
    for m11 in (1, 2):
        ext, ins = split_singularity(TAU6, m11)
        r = rvg.embedding_check(TAU6, ext, ins, trials=200, seed=m11)
        assert r.ok and r.failures == 0 and r.arf_reduced == 1


def test_embedding_identity_walk():
    ext, ins = split_singularity(TAU6, 2)
    r = rvg.embedding_check(TAU6, ext, ins, trials=5, max_len=0)
    assert r.ok


def test_h_subspace():
    for p in (TAU6, TAU7):
        h = rvg.h_subspace(p)
        assert h.rank == 6
        g = h.gram()
        assert np.array_equal(g, -g.T)
        cls = rauzy_class(p)
        rng = random.Random(11)
        for _ in range(100):
            b = rvg.kz_walk(cls.random_cycle(p, rng.randint(1, 12), rng)).matrix
            assert h.preserved_by(b)


def test_complement_groups():
    tau_h = rvg.complement_group(representatives("tau-H2n", 3))
    assert tau_h.order == 51840 and tau_h.index == 28
    assert not tau_h.fixes_no_form
    split = rvg.split_chain(TAU6, [(4, 2), (2, 1)])
    rep = rvg.complement_group(split)
    assert rep.order == rep.sp_order == 1451520
    assert rep.fixes_no_form


def test_spin_indices():
    assert rvg.spin_index(3, True) == 28 and rvg.spin_index(3, False) == 36
    assert rvg.spin_index(4, True) + rvg.spin_index(4, False) == 256
    assert rvg.HYPERELLIPTIC_H4_INDEX % 28 != 0


def test_orbit_of_form_matches_spin_index():
    gens = gf2core.sp_generators(quadratic_form(TAU6).omega_rows, 6)
    assert gf2core.form_orbit_index(quadratic_form(TAU6), gens) == rvg.spin_index(3, True)
