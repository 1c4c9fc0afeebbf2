"""Acceptance criteria 1-11, each with its time (and memory) limit.

Every test records a PASS/FAIL line through the ``criterion`` fixture; the
lines are printed at the end of the pytest run.
"""

import resource
import time

import pytest

from rauzyveech import reference_lists, f2, gf2core, rvg, transvect
from rauzyveech.forms import (
    BASE_COUNTS,
    arf,
    closed_form_counts,
    component_label,
    nonsingular,
    ns_counts_brute,
    ns_counts_recurrence,
    omega,
    quadratic_form,
    standard_form,
)
from rauzyveech.perm import Permutation, representatives, split_singularity, stratum_profile
from rauzyveech.verify import (
    MEMBERSHIP_SOURCES,
    SIGMA8_LIST_SOURCE,
    certificate_run,
    cocycle_trials,
    cycle_preservation,
    expected_component,
    shear_checks,
    transvection_checks,
)


class Timer:
    def __enter__(self):
        self.t = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.t


def packed(vs):
    return sorted(f2.vec(v) for v in vs)


# 1 -------------------------------------------------------------------------


def test_c1_tau6_listing(criterion):
    with Timer() as t:
        q = quadratic_form(representatives("tau-d", 6))
        closure = gf2core.q_closure([1 << a for a in range(6)], q)
    ok = closure == packed(reference_lists.NS_TAU6) and len(closure) == 36 and t.seconds < 1
    criterion(1, ok, f"tau(6) 36/36 in {t.seconds:.3f}s")
    assert ok


@pytest.mark.xfail(strict=True, reason="the reference 120-vector list is NS(Q) of "
                   "(1..8 / 8 5 4 3 2 7 6 1), not of sigma(8); 32 vectors differ each way")
def test_c1_sigma8_listing(criterion):
    with Timer() as t:
        q = quadratic_form(representatives("sigma-d", 8))
        closure = gf2core.q_closure([1 << a for a in range(8)], q)
    listed = packed(reference_lists.NS_SIGMA8)
    ok = closure == listed and t.seconds < 1
    missing = len(set(listed) - set(closure))
    criterion(1, ok, f"sigma(8) listing: {missing} listed vectors outside the closure (xfail)")
    assert ok


def test_c1_sigma8_closure_and_listing_source():
    # the parts of the sigma(8) claim that do hold
    q = quadratic_form(representatives("sigma-d", 8))
    closure = gf2core.q_closure([1 << a for a in range(8)], q)
    assert closure == nonsingular(q) and len(closure) == 120
    src = quadratic_form(Permutation.from_rows(*SIGMA8_LIST_SOURCE))
    assert nonsingular(src) == packed(reference_lists.NS_SIGMA8)


# 2 -------------------------------------------------------------------------


def test_c2_counts(criterion):
    bad = []
    with Timer() as t:
        base_ok = all(ns_counts_brute(quadratic_form(representatives(f"{fam}-d", d0))) == base
                      for fam, (d0, base) in BASE_COUNTS.items())
        for fam, d0 in (("tau", 6), ("sigma", 8)):
            for d in range(d0, 21):
                brute = ns_counts_brute(quadratic_form(representatives(f"{fam}-d", d)))
                if not (brute == ns_counts_recurrence(fam, d) == closed_form_counts(fam, d)):
                    bad.append((fam, d))
    assert BASE_COUNTS["tau"][1].as_tuple() == (16, 20, 16, 12)
    assert BASE_COUNTS["sigma"][1].as_tuple() == (56, 64, 72, 64)
    ok = base_ok and not bad and t.seconds < 10
    criterion(2, ok, f"28 dimensions, {len(bad)} mismatches, {t.seconds:.1f}s")
    assert ok


# 3 -------------------------------------------------------------------------


def test_c3_component_table(criterion):
    bad = []
    with Timer() as t:
        for fam, d0 in (("tau-d", 6), ("sigma-d", 8)):
            for d in range(d0, 15):
                lab = component_label(representatives(fam, d), check_hyperelliptic=d <= 10)
                want_hyp = False if d <= 10 else None
                if lab.connected_component_name != expected_component(fam, d) or lab.hyperelliptic != want_hyp:
                    bad.append((fam, d, lab.connected_component_name))
    ok = not bad and t.seconds < 60
    criterion(3, ok, f"16 rows, mismatches {bad}, {t.seconds:.1f}s")
    assert ok


# 4 -------------------------------------------------------------------------


def test_c4_orthogonal_d6(criterion):
    with Timer() as t:
        p = representatives("tau-d", 6)
        q = quadratic_form(p)
        grp = gf2core.group_closure(rvg.canonical_transvections_mod2(p))
        idx = gf2core.form_orbit_index(q, gf2core.sp_generators(q.omega_rows, 6))
    sp = f2.symplectic_group_order(3)
    ok = (grp.order == 51840 and idx == 28 and grp.order * idx == sp == 1451520
          and idx == rvg.spin_index(3, arf(q) == 1) and t.seconds < 60)
    criterion(4, ok, f"order {grp.order}, index {idx}, {t.seconds:.1f}s")
    assert ok


# 5 -------------------------------------------------------------------------


def test_c5_odd_closure(criterion):
    sizes = []
    ok = True
    with Timer() as t:
        for fam, d in (("tau-d", 7), ("tau-d", 9), ("sigma-d", 9)):
            q = quadratic_form(representatives(fam, d))
            c = gf2core.q_closure([1 << a for a in range(d)], q)
            # brute oracle: the radical is the set of w pairing to 0 with every e_a
            rad = {w for w in range(1 << d) if not any(f2.pairing(w, 1 << a, q.omega_rows) for a in range(d))}
            want = [u for u in range(1 << d) if q(u) and u not in rad]
            ok &= c == want
            sizes.append(len(c))
    ok = ok and t.seconds < 10
    criterion(5, ok, f"sizes {sizes}, {t.seconds:.1f}s")
    assert ok


# 6 -------------------------------------------------------------------------


def test_c6_cycles_preserve_q(criterion):
    with Timer() as t:
        n, k, fails = cycle_preservation(10**4, seed=0)
    ok = n >= 10**4 and k >= 5 and fails == 0 and t.seconds < 60
    criterion(6, ok, f"{n} cycles over {k} classes, {fails} failures, {t.seconds:.1f}s")
    assert ok


# 7 -------------------------------------------------------------------------


def test_c7_transvection_lemmas(criterion):
    with Timer() as t:
        r = transvection_checks(1000, seed=0)
    fails = sum(r["failures"].values())
    ok = r["instances"] == 1000 and r["named"] > 0 and fails == 0 and t.seconds < 10
    criterion(7, ok, f"{r['instances']} random + {r['named']} named quadruples, {fails} failures, "
                     f"{t.seconds:.1f}s")
    assert ok


# 8 -------------------------------------------------------------------------


def test_c8_certificates(criterion):
    total = found = 0
    missing = []
    with Timer() as t:
        for kind, fam, n in MEMBERSHIP_SOURCES:
            r = certificate_run(kind, fam, n, coeff_bound=4)
            total += r["claims"]
            found += min(r["found"], r["replayed"], r["mod2_in_closure"])
            missing += [f"{fam} {n}: {m}" for m in r["missing"]]
    ok = found == total and not missing and t.seconds < 300
    criterion(8, ok, f"{found}/{total} memberships certified and replayed, {t.seconds:.1f}s")
    assert ok


# 9 -------------------------------------------------------------------------


def test_c9_congruence_shadow(criterion):
    with Timer() as t:
        f2g = standard_form(2)
        r2 = transvect.mod4_kernel_report(transvect.level_two_generators(transvect.standard_basis(2), f2g),
                                          2, f2g)
        p, basis = transvect.minimal_symplectic_basis("tau-minimal", 3)
        f = omega(p)
        r3 = transvect.mod4_kernel_report(transvect.level_two_generators(basis, f), 3, f)
    peak_gb = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss / 2**20
    ok = (r2.ok and r2.order == 1024 and r3.ok and r3.order == 2097152
          and t.seconds < 600 and peak_gb < 8)
    criterion(9, ok, f"g=2 {r2.order}, g=3 {r3.order}, {t.seconds:.1f}s, process peak {peak_gb:.2f} GB")
    assert ok


# 10 ------------------------------------------------------------------------


def test_c10_structure_d7(criterion):
    with Timer() as t:
        cfails = cocycle_trials(1000, seed=0)
        rep = rvg.oq_structure_check(7, pairs=1000, seed=0)
        sh = shear_checks(7)
    c = rep.checks
    img, vs = c["S^1 image order"], c["v_S image size"]
    arf_v = arf(rvg.restricted_q(quadratic_form(representatives("tau-d", 7)), list(range(6))))
    ok = (cfails == 0 and rep.ok and img == 51840 and vs == (28 if arf_v else 36)
          and sh["left_pairing"] and sh["right_pairing"] and t.seconds < 120)
    criterion(10, ok, f"cocycle failures {cfails}, S^1 image {img}, v_S image {vs}, "
                      f"shear {sh['left_pairing']}, {t.seconds:.1f}s")
    assert ok


# 11 ------------------------------------------------------------------------


def test_c11_extension(criterion):
    p = representatives("tau-d", 6)
    profiles, fails, arf_ok = [], 0, True
    with Timer() as t:
        for m11 in (1, 2, 3):
            e, ins = split_singularity(p, m11)
            prof = stratum_profile(e)
            assert prof.genus == 3
            profiles.append(prof.orders)
            r = rvg.embedding_check(p, e, ins, trials=1000, seed=m11)
            fails += r.failures
            arf_ok &= r.arf_reduced == r.arf_extended and r.q_compatible
    ok = (2, 2) in profiles and (1, 3) in profiles and fails == 0 and arf_ok and t.seconds < 60
    criterion(11, ok, f"profiles {sorted(set(profiles))}, 3000 trials, {fails} failures, {t.seconds:.1f}s")
    assert ok
