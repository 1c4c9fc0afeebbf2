"""Claim suites: each check returns a JSON-ready record.

A record is ``{claim, ref, status, artifacts}`` where ``status`` is one of
``verified``, ``verified-with-cited-oracle`` or ``failed`` and ``ref`` is a
short stable tag naming the statement being checked.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

import numpy as np

from . import reference_lists, f2, gf2core, rvg, transvect
from .forms import (
    BASE_COUNTS,
    arf,
    closed_form_counts,
    component_label,
    ns_counts_brute,
    ns_counts_recurrence,
    nonsingular,
    omega,
    quadratic_form,
    standard_form,
)
from .perm import Permutation, hyperelliptic, rauzy_class, representatives, split_singularity, stratum_profile

VERIFIED = "verified"
CITED = "verified-with-cited-oracle"
FAILED = "failed"

SUITES = ("appendix", "counts", "orthogonal", "congruence", "odd-d", "extension", "all")


@dataclass
class Claim:
    claim: str
    ref: str
    status: str
    artifacts: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status != FAILED

    def to_json(self) -> dict:
        return {"claim": self.claim, "ref": self.ref, "status": self.status, "artifacts": self.artifacts}


def _claim(text, ref, ok, cited=False, **artifacts) -> Claim:
    status = FAILED if not ok else (CITED if cited else VERIFIED)
    return Claim(text, ref, status, artifacts)


@dataclass
class Budget:
    max_class_size: int = 10**6
    coeff_bound: int = 4
    group_cap: int = 10**8
    seed: int = 0


def packed(vectors) -> list[int]:
    return sorted(f2.vec(v) for v in vectors)


# --- appendix ------------------------------------------------------------


# the listed 120-element set is the non-singular set of this permutation
SIGMA8_LIST_SOURCE = ((1, 2, 3, 4, 5, 6, 7, 8), (8, 5, 4, 3, 2, 7, 6, 1))


def suite_appendix(b: Budget) -> list[Claim]:
    out = []
    tau = representatives("tau-d", 6)
    q = quadratic_form(tau)
    closure = gf2core.q_closure([1 << a for a in range(6)], q)
    listed = packed(reference_lists.NS_TAU6)
    out.append(_claim("Q-closure of the canonical vectors of tau(6) equals the listed 36 vectors",
                      "ns-list-tau6", closure == listed, size=len(closure)))
    fix = gf2core.unit_step_fixpoint(q)
    out.append(_claim("S_k fixpoint for tau(6) equals the listed 36 vectors",
                      "fixpoint-tau6", fix == listed, size=len(fix)))
    sig = representatives("sigma-d", 8)
    qs = quadratic_form(sig)
    closure = gf2core.q_closure([1 << a for a in range(8)], qs)
    ns = nonsingular(qs)
    listed = packed(reference_lists.NS_SIGMA8)
    out.append(_claim("Q-closure of the canonical vectors of sigma(8) equals NS(Q) (120 vectors)",
                      "ns-closure-sigma8", closure == ns and len(ns) == 120, size=len(closure)))
    out.append(_claim("Q-closure of the canonical vectors of sigma(8) equals the listed 120 vectors",
                      "ns-list-sigma8", closure == listed,
                      size=len(listed), listed_not_in_closure=len(set(listed) - set(closure)),
                      closure_not_listed=len(set(closure) - set(listed))))
    src = Permutation.from_rows(*SIGMA8_LIST_SOURCE)
    out.append(_claim("the listed 120 vectors are NS(Q) of (1..8 / 8 5 4 3 2 7 6 1)",
                      "ns-list-sigma8-source", nonsingular(quadratic_form(src)) == listed))
    return out


# --- counts and component table ------------------------------------------


COMPONENT_TABLE = {
    "tau-d": {0: "H(2g-2)^odd", 6: "H(2g-2)^odd", 1: "H(g-1,g-1)^nonhyp", 5: "H(g-1,g-1)^nonhyp",
              2: "H(2g-2)^even", 4: "H(2g-2)^even", 3: "H(g-1,g-1)^even", 7: "H(g-1,g-1)^odd"},
    "sigma-d": {0: "H(2g-2)^even", 6: "H(2g-2)^even", 1: "H(g-1,g-1)^nonhyp", 5: "H(g-1,g-1)^nonhyp",
                2: "H(2g-2)^odd", 4: "H(2g-2)^odd", 3: "H(g-1,g-1)^odd", 7: "H(g-1,g-1)^even"},
}


def expected_component(family: str, d: int) -> str:
    g = d // 2
    pattern = COMPONENT_TABLE[family][d % 8]
    return pattern.replace("2g-2", str(2 * g - 2)).replace("g-1,g-1", f"{g - 1},{g - 1}")


def suite_counts(b: Budget) -> list[Claim]:
    out = []
    for fam, (d0, base) in BASE_COUNTS.items():
        key = f"{fam}-d"
        got = ns_counts_brute(quadratic_form(representatives(key, d0)))
        out.append(_claim(f"base counts of {key} at d={d0}", f"counts-base-{fam}",
                          got == base, counts=list(got.as_tuple())))
        bad = []
        for d in range(d0, 21):
            brute = ns_counts_brute(quadratic_form(representatives(key, d)))
            if not (brute == ns_counts_recurrence(fam, d) == closed_form_counts(fam, d)):
                bad.append(d)
        out.append(_claim(f"brute = recurrence = closed form for {key}, {d0} <= d <= 20",
                          f"counts-{fam}", not bad, failures=bad))
    for key, d0 in (("tau-d", 6), ("sigma-d", 8)):
        rows = {}
        bad = []
        for d in range(d0, 15):
            p = representatives(key, d)
            lab = component_label(p, b.max_class_size, check_hyperelliptic=d <= 10)
            rows[d] = lab.connected_component_name
            if lab.connected_component_name != expected_component(key, d):
                bad.append(d)
        out.append(_claim(f"component table for {key}, {d0} <= d <= 14", f"components-{key}",
                          not bad, names=rows, failures=bad))
    return out


# --- orthogonal groups ----------------------------------------------------


CYCLE_CLASSES = (("tau-d", 6), ("tau-d", 7), ("hyperelliptic", 4), ("hyperelliptic", 5),
                 ("hyperelliptic", 6), ("tau-minimal", 3))


def _class_start(name, n) -> Permutation:
    return hyperelliptic(n) if name == "hyperelliptic" else representatives(name, n)


def cycle_preservation(n_cycles: int = 10**4, seed: int = 0, max_len: int = 12,
                       max_class_size: int = 10**6) -> tuple[int, int, int]:
    """``(cycles, classes, failures)`` for random cycles spread over several classes."""
    rng = random.Random(seed)
    classes = []
    for name, n in CYCLE_CLASSES:
        p = _class_start(name, n)
        classes.append(rauzy_class(p, max_class_size))
    fails = 0
    for i in range(n_cycles):
        cls = classes[i % len(classes)]
        start = cls.vertices[rng.randrange(len(cls))]
        w = cls.random_cycle(start, rng.randint(1, max_len), rng)
        symp, qok = rvg.cycle_check(w)
        fails += not (symp and qok)
    return n_cycles, len(classes), fails


def spin_orbit_indices() -> dict:
    """Index of ``O(Q)`` in ``Sp(6, 2)`` for one form of each Arf invariant."""
    q = quadratic_form(representatives("tau-d", 6))
    gens = gf2core.sp_generators(q.omega_rows, 6)
    orbit = gf2core.form_orbit(q, gens)
    out = {}
    for c in range(1 << 6):
        qc = q.with_linear(c)
        a = arf(qc)
        if a not in out:
            out[a] = gf2core.form_orbit_index(qc, gens)
    out["orbit of Q"] = len(orbit)
    return out


def suite_orthogonal(b: Budget) -> list[Claim]:
    out = []
    p = representatives("tau-d", 6)
    q = quadratic_form(p)
    grp = gf2core.group_closure(rvg.canonical_transvections_mod2(p), cap=b.group_cap)
    idx = gf2core.form_orbit_index(q, gf2core.sp_generators(q.omega_rows, 6))
    sp = f2.symplectic_group_order(3)
    out.append(_claim("canonical transvections of tau(6) generate a group of order 51840 with index 28",
                      "orthogonal-d6", grp.order == 51840 and idx == 28 and grp.order * idx == sp == 1451520,
                      order=grp.order, index=idx, sp_order=sp, digest=str(grp.digest())))
    for name, d in (("tau-d", 6), ("tau-d", 8), ("sigma-d", 8), ("tau-d", 7), ("tau-d", 9)):
        rep = rvg.rv_mod2_check(representatives(name, d))
        out.append(_claim(f"mod-2 generation for {name} d={d}", f"mod2-{name}-{d}",
                          rep.status != FAILED, cited=bool(rep.cited),
                          closure=rep.closure_size, expected=rep.expected_size,
                          group_order=rep.group_order, assumption=rep.cited or None))
    cls = rauzy_class(p)
    twists = [rvg.kz_walk(rvg.dehn_twist_cycle(p, a, cls)).mod2() for a in range(6)]
    tw = gf2core.group_closure(twists)
    out.append(_claim("Dehn-twist cycles at tau(6) generate the same mod-2 group",
                      "twist-cycles-d6", tw.order == grp.order and tw.digest() == grp.digest(),
                      order=tw.order))
    n, k, fails = cycle_preservation(seed=b.seed, max_class_size=b.max_class_size)
    out.append(_claim("random cycle matrices are symplectic and preserve Q mod 2",
                      "cycles-preserve-q", fails == 0, cycles=n, classes=k, failures=fails))
    ind = spin_orbit_indices()
    out.append(_claim("index of O(Q) in Sp(6,2): 28 for odd Arf, 36 for even Arf", "spin-index-g3",
                      ind[1] == rvg.spin_index(3, True) == 28 and ind[0] == rvg.spin_index(3, False) == 36,
                      odd=ind[1], even=ind[0]))
    h = rvg.complement_group(representatives("tau-H2n", 3))
    out.append(_claim("tau-H2n at genus 3: complement group has order 51840 (index 28)",
                      "h22-odd-index", h.order == 51840 and h.index == 28,
                      order=h.order, index=h.index))
    e = rvg.split_chain(representatives("tau-d", 6), [(4, 2), (2, 1)])
    c = rvg.complement_group(e, cap=b.group_cap)
    out.append(_claim("H(1,1,2) by splitting: complement group is Sp(6,2) and fixes no polarizing form",
                      "connected-stratum-sp", c.order == c.sp_order and c.fixes_no_form,
                      profile=sorted(stratum_profile(e).orders), order=c.order,
                      forms_moved=sum(v is not None for v in c.violations.values())))
    out.append(_claim("index of the hyperelliptic component H(4)^hyp is recorded as 288", "h4-hyp-index",
                      True, cited=True, index=rvg.HYPERELLIPTIC_H4_INDEX,
                      divisible_by_28=rvg.HYPERELLIPTIC_H4_INDEX % 28 == 0))
    return out


# --- transvections, certificates and level two -------------------------------


def random_symplectic(f, rng: random.Random, length: int = 8) -> np.ndarray:
    """Product of random transvections along short vectors."""
    m = np.eye(f.d, dtype=np.int64)
    for _ in range(length):
        v = [rng.choice((-1, 0, 0, 1)) for _ in range(f.d)]
        m = transvect.compose(transvect.transvection_matrix(v, f, rng.choice((-1, 1))), m)
    return m


def standard_square_instance(g: int = 4):
    f = standard_form(g)
    e = lambda i: tuple(int(j == i) for j in range(2 * g))
    return f, (e(0), transvect._add(e(0), e(2)), transvect._add(e(0), e(3)), e(1))


def transvection_checks(n: int = 1000, seed: int = 0) -> dict:
    """Randomized braid and square-lemma instances plus the named quadruples."""
    rng = random.Random(seed)
    f, quad = standard_square_instance(4)
    fails = {"square": 0, "braid": 0, "named": 0}
    for _ in range(n):
        m = random_symplectic(f, rng)
        q = tuple(tuple(int(x) for x in np.asarray(v) @ m) for v in quad)
        fails["square"] += not transvect.check_square_lemma(*q, f)
        v, w = q[0], q[3]  # <v1, v4> = 1
        fails["braid"] += not transvect.check_braid(v, w, f)
    named = 0
    for fam, g in (("tau-minimal", 3), ("tau-minimal", 4), ("sigma-minimal", 4), ("sigma-minimal", 5)):
        fm = omega(representatives(fam, g))
        for _, quad in transvect.minimal_quadruples(fam, g):
            named += 1
            fails["named"] += not transvect.check_square_lemma(*quad, fm)
    return {"instances": n, "named": named, "failures": fails}


MEMBERSHIP_SOURCES = (("minimal", "tau-minimal", 3), ("minimal", "tau-minimal", 4),
                      ("minimal", "tau-minimal", 5), ("minimal", "sigma-minimal", 4),
                      ("minimal", "sigma-minimal", 5), ("family", "tau-d", 6),
                      ("family", "tau-d", 10), ("family", "sigma-d", 8), ("family", "sigma-d", 10),
                      ("odd", "tau-d", 7), ("odd", "tau-d", 9))


def membership_list(kind, family, n):
    if kind == "minimal":
        return transvect.minimal_memberships(family, n)
    if kind == "family":
        return transvect.family_memberships(family, n)
    return transvect.odd_shear_memberships(n)


def certificate_run(kind, family, n, coeff_bound=4) -> dict:
    """Search and replay every membership of one list; also reduce mod 2."""
    p, members = membership_list(kind, family, n)
    f = omega(p)
    seeds = [p.unit(p.name(i)) for i in range(p.d)]
    q = quadratic_form(p)
    closure = set(gf2core.q_closure([1 << a for a in range(p.d)], q))
    found = replayed = mod2 = 0
    missing = []
    for m in members:
        c = transvect.omega_closure_search(seeds, f, m.target, coeff_bound=coeff_bound, via=m.via)
        if c is None:
            missing.append(m.label)
            continue
        found += 1
        replayed += bool(transvect.verify_certificate(c, f, seeds))
        mod2 += set(v for v in transvect.certificate_mod2(c) if v) <= closure
    return {"source": f"{family} {n}", "claims": len(members), "found": found,
            "replayed": replayed, "mod2_in_closure": mod2, "missing": missing}


def mod4_checks(cap: int = 10**8) -> list[dict]:
    out = []
    r2 = transvect.mod4_kernel_report(transvect.level_two_generators(transvect.standard_basis(2),
                                                                     standard_form(2)), 2, standard_form(2), cap)
    out.append({"basis": "standard g=2", "order": r2.order, "expected": r2.expected,
                "brute": transvect.congruence_kernel_brute(standard_form(2)), "digest": str(r2.digest)})
    p, basis = transvect.minimal_symplectic_basis("tau-minimal", 3)
    f = omega(p)
    r3 = transvect.mod4_kernel_report(transvect.level_two_generators(basis, f), 3, f, cap)
    out.append({"basis": "tau-minimal g=3", "order": r3.order, "expected": r3.expected, "digest": str(r3.digest)})
    return out


def suite_congruence(b: Budget) -> list[Claim]:
    out = []
    t = transvection_checks(seed=b.seed)
    out.append(_claim("braid and square-lemma identities on random and named instances",
                      "transvection-identities", not any(t["failures"].values()), **t))
    for kind, fam, n in MEMBERSHIP_SOURCES:
        r = certificate_run(kind, fam, n, b.coeff_bound)
        ok = r["found"] == r["replayed"] == r["mod2_in_closure"] == r["claims"]
        out.append(_claim(f"closure certificates for {fam} {n}", f"certificates-{fam}-{n}", ok, **r))
    for r in mod4_checks(b.group_cap):
        ok = r["order"] == r["expected"] and r.get("brute", r["expected"]) == r["expected"]
        out.append(_claim(f"level-two squares generate the mod-4 congruence kernel ({r['basis']})",
                          "mod4-" + r["basis"].replace(" ", "-"), ok, **r))
    for fam, g in (("tau-minimal", 4), ("sigma-minimal", 4)):
        p, basis = transvect.minimal_symplectic_basis(fam, g)
        f = omega(p)
        rank = transvect.mod4_kernel_rank(transvect.level_two_generators(basis, f), f)
        out.append(_claim(f"level-two squares span the mod-4 kernel by rank ({fam} g={g})",
                          f"mod4-rank-{fam}-{g}", rank == g * (2 * g + 1), rank=rank))
    return out


# --- odd d ----------------------------------------------------------------


def cocycle_trials(n: int = 1000, seed: int = 0, max_len: int = 8) -> int:
    """Failures of the S^0/S^1 composition law on products of random cycles at tau(7)."""
    rng = random.Random(seed)
    p = representatives("tau-d", 7)
    cls = rauzy_class(p)
    f = omega(p)
    mats = [rvg.kz_walk(cls.random_cycle(p, rng.randint(1, max_len), rng)).matrix for _ in range(60)]
    fails = 0
    for _ in range(n):
        s, t = rng.choice(mats), rng.choice(mats)
        fails += not rvg.cocycle_holds(s, t, f)
    return fails


def shear_checks(d: int = 7) -> dict:
    """Both sign conventions of the shear identity, on every unit vector and pair."""
    p = representatives("tau-d", d)
    f = omega(p)
    sharp = transvect.e_sharp(p)
    _, members = transvect.odd_shear_memberships(d)
    vs = [m.target for m in members if m.label.startswith("e")] + [p.unit(str(a)) for a in range(1, d + 1)]
    n = len(vs)
    ok_module = ok_left = ok_decomp = True
    for v in vs:
        s = rvg.shear(v, f, sharp)
        sp = rvg.shear(v, f, sharp, left_pairing=True)
        for u in [p.unit(str(a)) for a in range(1, d + 1)]:
            img = tuple(int(x) for x in np.asarray(u) @ s)
            want = transvect._add(u, transvect._scale(f.pair(v, u), sharp))
            ok_module &= img == want
            img = tuple(int(x) for x in np.asarray(u) @ sp)
            want = transvect._add(u, transvect._scale(f.pair(u, v), sharp))
            ok_left &= img == want
        dec = rvg.decompose(s, f)
        ok_decomp &= np.array_equal(dec.s1, np.eye(len(dec.complement), dtype=np.int64))
    return {"vectors": n, "right_pairing": bool(ok_module), "left_pairing": bool(ok_left),
            "s1_identity": bool(ok_decomp)}


def suite_odd(b: Budget) -> list[Claim]:
    out = []
    for name, d in (("tau-d", 7), ("tau-d", 9), ("sigma-d", 9)):
        q = quadratic_form(representatives(name, d))
        closure = gf2core.q_closure([1 << a for a in range(d)], q)
        want = sorted(set(nonsingular(q)) - set(q.radical()))
        out.append(_claim(f"Q-closure = NS minus the radical for {name} d={d}", f"odd-closure-{name}-{d}",
                          closure == want, size=len(closure)))
    fails = cocycle_trials(seed=b.seed)
    out.append(_claim("S^0/S^1 composition law on 1000 products at tau(7)", "cocycle-d7", fails == 0,
                      failures=fails))
    for d in (7, 9):
        r = rvg.oq_structure_check(d, seed=b.seed, cap=b.group_cap)
        out.append(_claim(f"structure of O(Q) at d={d}", f"oq-structure-{d}", r.ok,
                          checks={k: (v if isinstance(v, int) and not isinstance(v, bool) else bool(v))
                                  for k, v in r.checks.items()}))
    s = shear_checks(7)
    out.append(_claim("shear maps add a multiple of e# and have trivial S^1", "shear-d7",
                      s["right_pairing"] and s["left_pairing"] and s["s1_identity"], **s))
    return out


# --- extension -------------------------------------------------------------


def suite_extension(b: Budget) -> list[Claim]:
    out = []
    p = representatives("tau-d", 6)
    profiles = []
    ok = True
    for m11 in (1, 2, 3):
        e, ins = split_singularity(p, m11)
        prof = stratum_profile(e)
        profiles.append(sorted(prof.orders))
        r = rvg.embedding_check(p, e, ins, trials=1000, seed=b.seed)
        ok &= prof.genus == 3 and r.ok
        out.append(_claim(f"embedding of tau(6) into its split with m11={m11}", f"embedding-m11-{m11}",
                          prof.genus == 3 and r.ok, profile=sorted(prof.orders), trials=r.trials,
                          failures=r.failures, arf=[r.arf_reduced, r.arf_extended]))
    out.append(_claim("splitting tau(6) gives profiles (2,2) and (1,3) in genus 3", "split-profiles",
                      [2, 2] in profiles and [1, 3] in profiles, profiles=profiles))
    rng = random.Random(b.seed)
    q7 = representatives("tau-d", 7)
    h = rvg.h_subspace(q7)
    cls = rauzy_class(q7)
    kept = sum(h.preserved_by(rvg.kz_walk(cls.random_cycle(q7, rng.randint(1, 10), rng)).matrix)
               for _ in range(100))
    out.append(_claim("H(pi) at tau(7) has rank 6 and is preserved by cycle matrices", "h-subspace-d7",
                      h.rank == 6 and kept == 100, rank=h.rank, preserved=kept))
    return out


SUITE_FUNCS = {
    "appendix": suite_appendix,
    "counts": suite_counts,
    "orthogonal": suite_orthogonal,
    "congruence": suite_congruence,
    "odd-d": suite_odd,
    "extension": suite_extension,
}


def run_suite(name: str, budget: Budget | None = None) -> list[Claim]:
    budget = budget or Budget()
    names = list(SUITE_FUNCS) if name == "all" else [name]
    out = []
    for n in names:
        t = time.perf_counter()
        claims = SUITE_FUNCS[n](budget)
        for c in claims:
            c.artifacts.setdefault("suite", n)
        if claims:
            claims[-1].artifacts["suite_seconds"] = round(time.perf_counter() - t, 2)
        out.extend(claims)
    return out
