"""Odd d: the kernel vector e#, the S^0/S^1 split and shears.

Run: python3 demos/05_odd_dimension.py   (about 20 s, 1.5 GB)
"""

import random

import numpy as np

from rauzyveech import rvg, transvect
from rauzyveech.forms import omega
from rauzyveech.perm import rauzy_class, representatives

if __name__ == "__main__":
    p = representatives("tau-d", 7)
    f = omega(p)
    sharp = transvect.e_sharp(p)
    print("e# =", sharp)
    w = rauzy_class(p).random_cycle(p, 9, random.Random(1))
    b = rvg.kz_walk(w).matrix
    dec = rvg.decompose(b, f)
    print("S^1 of a cycle matrix:\n", dec.s1)
    print("S^0 (multiples of e#):", dec.s0.ravel())
    s = rvg.shear(p.unit("2"), f, sharp)
    print("shear along e2 maps e1 to", tuple(int(x) for x in np.asarray(p.unit("1")) @ s))
    for d in (7, 9):
        r = rvg.oq_structure_check(d, pairs=200)
        print(f"d={d}: all structure checks hold: {r.ok}")
        for k, v in r.checks.items():
            print(f"   {k}: {v}")
