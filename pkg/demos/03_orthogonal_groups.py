"""Groups generated mod 2 by the canonical transvections, and spin indices.

Run: python3 demos/03_orthogonal_groups.py   (about 15 s)
"""

from rauzyveech import f2, gf2core, rvg
from rauzyveech.forms import arf, quadratic_form
from rauzyveech.perm import rauzy_class, representatives

if __name__ == "__main__":
    p = representatives("tau-d", 6)
    q = quadratic_form(p)
    grp = gf2core.group_closure(rvg.canonical_transvections_mod2(p))
    gens = gf2core.sp_generators(q.omega_rows, 6)
    idx = gf2core.form_orbit_index(q, gens)
    print(f"<T_e1, ..., T_e6> mod 2 at tau(6): order {grp.order}")
    print(f"orbit of Q under Sp(6,2): {idx} forms; {grp.order} * {idx} = {grp.order * idx}"
          f" = |Sp(6,2)| = {f2.symplectic_group_order(3)}")
    print(f"Arf(Q) = {arf(q)}: expected index {rvg.spin_index(3, arf(q) == 1)}")

    cls = rauzy_class(p)
    for a in range(6):
        print(f"  Dehn twist cycle for letter {p.name(a)}: length "
              f"{len(rvg.dehn_twist_cycle(p, a, cls))}, matrix T^{rvg.twist_sign(p, a, cls):+d}")

    h = rvg.complement_group(representatives("tau-H2n", 3))
    print(f"tau-H2n, genus 3: complement group {h.order}, index {h.index}, fixes a form: {not h.fixes_no_form}")
    e = rvg.split_chain(p, [(4, 2), (2, 1)])
    c = rvg.complement_group(e)
    moved = sum(v is not None for v in c.violations.values())
    print(f"split to H(1,1,2): complement group {c.order} = |Sp(6,2)|: {c.order == c.sp_order};"
          f" generators move {moved} of {len(c.violations)} polarizing forms")
