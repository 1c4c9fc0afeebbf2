"""Closure certificates over Z and the level-two congruence shadow.

A certificate lists steps c -> c +- p with |<c, p>| = 1; replaying it needs
only the intersection form.

Run: python3 demos/04_certificates.py   (about 20 s)
"""

from rauzyveech import transvect
from rauzyveech.forms import omega, standard_form
from rauzyveech.perm import representatives

if __name__ == "__main__":
    p = representatives("tau-d", 6)
    f = omega(p)
    seeds = [p.unit(p.name(i)) for i in range(p.d)]
    target = transvect.alternating_sum(p, 6)
    c = transvect.omega_closure_search(seeds, f, target)
    print(c.to_text(), end="")
    print("replays:", bool(transvect.verify_certificate(c, f)))

    p, members = transvect.minimal_memberships("tau-minimal", 4)
    f = omega(p)
    seeds = [p.unit(p.name(i)) for i in range(p.d)]
    ok = 0
    for m in members:
        c = transvect.omega_closure_search(seeds, f, m.target, via=m.via)
        ok += c is not None and bool(transvect.verify_certificate(c, f))
    print(f"tau-minimal genus 4: {ok}/{len(members)} memberships certified")

    f2g = standard_form(2)
    r = transvect.mod4_kernel_report(transvect.level_two_generators(transvect.standard_basis(2), f2g), 2, f2g)
    print(f"g=2: squares generate {r.order} of {r.expected} mod-4 kernel elements")
    p, basis = transvect.minimal_symplectic_basis("tau-minimal", 3)
    f = omega(p)
    r = transvect.mod4_kernel_report(transvect.level_two_generators(basis, f), 3, f)
    print(f"g=3: squares generate {r.order} of {r.expected} mod-4 kernel elements")
