"""Splitting the zero of tau(6) and embedding the reduced group.

Run: python3 demos/06_extension.py
"""

from rauzyveech import rvg
from rauzyveech.perm import format_permutation, representatives, split_singularity, stratum_profile

if __name__ == "__main__":
    p = representatives("tau-d", 6)
    for m11 in (1, 2, 3):
        e, ins = split_singularity(p, m11)
        r = rvg.embedding_check(p, e, ins, trials=300, seed=m11)
        print(f"m11={m11}: {stratum_profile(e).name()}")
        print(format_permutation(e), end="")
        print(f"   {r.trials} walks, {r.failures} failures, Arf {r.arf_reduced} -> {r.arf_extended}")
    h = rvg.h_subspace(representatives("tau-d", 7))
    print(f"H(pi) at tau(7): rank {h.rank}; Gram matrix\n{h.gram()}")
