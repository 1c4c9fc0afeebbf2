"""The mod-2 closure of the canonical vectors, and the sigma(8) listing.

Starting from the unit vectors, repeatedly add T_v(w) = w + <v, w> v for
non-singular v.  The result is every non-singular vector (minus the
radical in odd dimension).

Run: python3 demos/02_mod2_closure.py
"""

from rauzyveech import f2, gf2core
from rauzyveech.forms import nonsingular, quadratic_form
from rauzyveech.perm import Permutation, representatives
from rauzyveech.reference_lists import NS_SIGMA8, NS_TAU6
from rauzyveech.verify import SIGMA8_LIST_SOURCE


def closure(p):
    q = quadratic_form(p)
    return q, gf2core.q_closure([1 << a for a in range(p.d)], q)


if __name__ == "__main__":
    tau = representatives("tau-d", 6)
    q, c = closure(tau)
    print(f"tau(6): closure has {len(c)} vectors; equals the reference list: {c == sorted(map(f2.vec, NS_TAU6))}")

    sig = representatives("sigma-d", 8)
    q, c = closure(sig)
    listed = sorted(map(f2.vec, NS_SIGMA8))
    print(f"sigma(8): closure has {len(c)} vectors; equals NS(Q): {c == nonsingular(q)}")
    print(f"  reference 120-vector list matches: {c == listed}"
          f"  ({len(set(listed) - set(c))} listed vectors are singular for sigma(8))")
    src = Permutation.from_rows(*SIGMA8_LIST_SOURCE)
    print(f"  the list is exactly NS(Q) for {' '.join(map(str, SIGMA8_LIST_SOURCE[1]))}: "
          f"{nonsingular(quadratic_form(src)) == listed}")

    for name, d in (("tau-d", 7), ("tau-d", 9), ("sigma-d", 9)):
        q, c = closure(representatives(name, d))
        print(f"{name} d={d}: closure {len(c)}, |NS| {len(nonsingular(q))}, radical {q.radical()}")
