"""Exact symplectic transvections over the integers.

Vectors are tuples of Python ints indexed by letter id and matrices act on
row vectors, so the map ``A o B`` (apply ``B`` first) has matrix ``M_B M_A``.
``T_v(u) = u + <v, u> v`` with ``<u, v> = u W v^T``.

Besides the transvection identities this module holds a bounded search for
memberships in the smallest set ``X = -X`` closed under ``v, w -> v +- w``
whenever ``<v, w> = 1``.  The search emits certificates that are checked by
an independent replay, so a bug in the search cannot produce a false claim.
"""

from __future__ import annotations

import itertools

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import f2, intlinalg
from .errors import (
    BadPairing,
    BoundsExceeded,
    DimensionMismatch,
    NotLevelTwo,
    NotSymplectic,
    NotSymplecticBasis,
    OutOfRange,
    WrongPairingPattern,
)
from .forms import IntersectionForm, omega
from .perm import Permutation, representatives

IntVector = tuple


def as_vector(v) -> tuple[int, ...]:
    return tuple(int(x) for x in v)


def pair(u, v, f: IntersectionForm) -> int:
    return f.pair(u, v)


def _column(v, f: IntersectionForm) -> np.ndarray:
    # c with u . c = <v, u>, that is c = (v W)^T
    return intlinalg.matmul(np.asarray(v, dtype=np.int64)[None, :], f.matrix)[0]


def transvection_matrix(v, f: IntersectionForm, power: int = 1) -> np.ndarray:
    """Row matrix of ``T_v^power``; ``T_v^k = Id + k c (x) v`` because ``<v, v> = 0``."""
    v = np.asarray(as_vector(v), dtype=np.int64)
    if len(v) != f.d:
        raise DimensionMismatch("vector and form sizes differ")
    c = _column(v, f)
    outer = intlinalg.matmul(c[:, None], v[None, :])
    return intlinalg.shrink(np.asarray(intlinalg.identity(f.d), dtype=object) + power * outer.astype(object))


def is_symplectic(m, f: IntersectionForm) -> bool:
    m = np.asarray(m)
    return np.array_equal(intlinalg.matmul(intlinalg.matmul(m, f.matrix), m.T), f.matrix)


def compose(*maps) -> np.ndarray:
    """Matrix of ``maps[0] o maps[1] o ... o maps[-1]`` (the last acts first)."""
    if not maps:
        raise DimensionMismatch("nothing to compose")
    out = np.asarray(maps[-1])
    for m in reversed(maps[:-1]):
        out = intlinalg.matmul(out, m)
    return out


@dataclass(frozen=True)
class TransvectionWord:
    """``T_{v_1}^{k_1} o ... o T_{v_n}^{k_n}``, written in map order."""

    factors: tuple = ()

    def evaluate(self, f: IntersectionForm) -> np.ndarray:
        if not self.factors:
            return intlinalg.identity(f.d)
        return compose(*(transvection_matrix(v, f, k) for v, k in self.factors))

    def inverse(self) -> "TransvectionWord":
        return TransvectionWord(tuple((v, -k) for v, k in reversed(self.factors)))

    def __add__(self, other: "TransvectionWord") -> "TransvectionWord":
        return TransvectionWord(self.factors + other.factors)


def word(*factors) -> TransvectionWord:
    return TransvectionWord(tuple((as_vector(v), int(k)) for v, k in factors))


def _add(u, v, s=1):
    return tuple(a + s * b for a, b in zip(u, v))


def _scale(k, v):
    return tuple(k * a for a in v)


def _eq(a, b) -> bool:
    return np.array_equal(np.asarray(a), np.asarray(b))


# --- generation identities -------------------------------------------------


def check_braid(v, w, f: IntersectionForm) -> bool:
    """Both conjugation identities for ``v + w`` and both for ``v - w``."""
    v, w = as_vector(v), as_vector(w)
    if pair(v, w, f) != 1:
        raise BadPairing(f"<v, w> = {pair(v, w, f)}, expected 1")
    plus = transvection_matrix(_add(v, w), f)
    minus = transvection_matrix(_add(v, w, -1), f)
    checks = [
        (word((w, -1), (v, 1), (w, 1)), plus),
        (word((v, 1), (w, 1), (v, -1)), plus),
        (word((w, 1), (v, 1), (w, -1)), minus),
        (word((v, -1), (w, 1), (v, 1)), minus),
    ]
    return all(_eq(lhs.evaluate(f), rhs) for lhs, rhs in checks)


def check_conjugation(b, v, f: IntersectionForm) -> bool:
    """``B T_v B^-1 = T_{v B^-1}``, the right side for the form ``B W B^T``."""
    b = np.asarray(b)
    binv = intlinalg.inverse(b)
    target = IntersectionForm(intlinalg.matmul(intlinalg.matmul(b, f.matrix), b.T), f.ordering)
    moved = intlinalg.matmul(np.asarray(as_vector(v))[None, :], binv)[0]
    lhs = compose(binv, transvection_matrix(v, f), b)  # row matrix B T B^-1
    return _eq(lhs, transvection_matrix(moved, target))


SQUARE_PATTERN = ((0, 0, 0, 1), (0, 0, 1, 1), (0, -1, 0, 1), (-1, -1, -1, 0))


def pairing_matrix(vectors, f: IntersectionForm) -> tuple:
    return tuple(tuple(pair(a, b, f) for b in vectors) for a in vectors)


def normalize_quadruple(v1, v2, v3, v4, f: IntersectionForm) -> tuple:
    """Signs and order turning an absolute-value pattern into the exact one.

    ``v4`` is kept; ``v1, v2, v3`` are negated where needed so each pairs
    to ``+1`` with ``v4``; then ``v2, v3`` are swapped if ``<v2, v3> = -1``.
    """
    vs = [as_vector(v) for v in (v1, v2, v3, v4)]
    absolute = tuple(tuple(abs(x) for x in row) for row in pairing_matrix(vs, f))
    if absolute != tuple(tuple(abs(x) for x in row) for row in SQUARE_PATTERN):
        raise WrongPairingPattern(f"pairings {pairing_matrix(vs, f)} do not fit the pattern")
    a, b, c, d4 = vs
    a, b, c = (x if pair(x, d4, f) == 1 else _scale(-1, x) for x in (a, b, c))
    if pair(b, c, f) == -1:
        b, c = c, b
    return a, b, c, d4


@dataclass(frozen=True)
class SquareLemmaCheck:
    quadruple: tuple
    chain_ok: bool
    identities_ok: bool
    squares: tuple  # the four vectors whose squared transvections are produced

    def __bool__(self):
        return self.chain_ok and self.identities_ok


def square_chain(v1, v2, v3, v4) -> list[tuple]:
    """``(known, partner, result)`` steps deriving ``2v1 + v2`` and ``2v1 - v3``."""
    a = _add(v1, v4)
    b = _add(_scale(2, v1), v4)
    c = _add(b, v3, -1)
    d = _add(_scale(2, v1), v3, -1)
    e = _add(d, v2)
    return [
        (v1, v4, a),
        (a, _scale(-1, v1), b),
        (b, _scale(-1, v3), c),
        (c, v4, d),
        (d, v2, e),
        (e, v3, _add(_scale(2, v1), v2)),
    ]


def check_square_lemma(v1, v2, v3, v4, f: IntersectionForm) -> SquareLemmaCheck:
    """Rebuild the squared transvections along ``v1 +- v2`` and ``v1 +- v3``.

    Accepts the exact pairing pattern or its absolute value (then the
    inputs are sign-normalized first).  Checks the membership chain for
    ``2v1 + v2`` and ``2v1 - v3`` step by step, then the four product
    identities ``T_{v1}^-2 T_x T_{2v1 +- x} = T_{v1 +- x}^2`` as exact
    matrix equalities.  The result is truthy when everything holds.
    """
    vs = [as_vector(v) for v in (v1, v2, v3, v4)]
    if pairing_matrix(vs, f) != SQUARE_PATTERN:
        vs = list(normalize_quadruple(*vs, f))
    a, b, c, d4 = vs
    chain_ok = all(pair(k, p, f) == 1 and r in (_add(k, p), _add(k, p, -1))
                   for k, p, r in square_chain(a, b, c, d4))
    inv_sq = transvection_matrix(a, f, -2)
    ok = True
    squares = []
    for x, s in ((b, 1), (b, -1), (c, 1), (c, -1)):
        lhs = compose(inv_sq, transvection_matrix(x, f), transvection_matrix(_add(_scale(2, a), x, s), f))
        target = _add(a, x, s)
        squares.append(target)
        ok &= _eq(lhs, transvection_matrix(target, f, 2))
    return SquareLemmaCheck(tuple(vs), chain_ok, bool(ok), tuple(squares))


# --- closure search and certificates --------------------------------------


@dataclass(frozen=True)
class Step:
    known: tuple
    partner: tuple
    pairing: int
    result: tuple


@dataclass(frozen=True)
class ClosureCertificate:
    seeds: tuple
    target: tuple
    steps: tuple

    def to_text(self) -> str:
        def t(v):
            return "(" + ",".join(str(x) for x in v) + ")"

        lines = ["# omega-closure certificate", f"d {len(self.target)}"]
        lines += [f"seed {t(s)}" for s in self.seeds]
        lines.append(f"target {t(self.target)}")
        lines += [f"step {t(s.known)} {t(s.partner)} {s.pairing:+d} {t(s.result)}" for s in self.steps]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "ClosureCertificate":
        seeds, steps, target = [], [], None

        def v(tok):
            return tuple(int(x) for x in tok.strip("()").split(",") if x)

        for line in text.splitlines():
            parts = line.split()
            if not parts or parts[0].startswith("#") or parts[0] == "d":
                continue
            if parts[0] == "seed":
                seeds.append(v(parts[1]))
            elif parts[0] == "target":
                target = v(parts[1])
            elif parts[0] == "step":
                steps.append(Step(v(parts[1]), v(parts[2]), int(parts[3]), v(parts[4])))
            else:
                raise ValueError(f"unrecognized certificate line {line!r}")
        if target is None:
            raise ValueError("certificate has no target")
        return cls(tuple(seeds), target, tuple(steps))


@dataclass(frozen=True)
class Replay:
    ok: bool
    failed_step: int | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def canonical(v) -> tuple:
    """Representative of ``{v, -v}`` whose first nonzero entry is positive."""
    for x in v:
        if x:
            return tuple(v) if x > 0 else tuple(-y for y in v)
    return tuple(v)


def verify_certificate(c: ClosureCertificate, f: IntersectionForm, seeds=None) -> Replay:
    """Replay every step; independent of the search that produced ``c``."""
    seeds = c.seeds if seeds is None else tuple(as_vector(s) for s in seeds)
    known = {canonical(s) for s in seeds}
    for i, s in enumerate(c.steps):
        if canonical(s.known) not in known:
            return Replay(False, i, "known vector not derived yet")
        if canonical(s.partner) not in known:
            return Replay(False, i, "partner not derived yet")
        actual = pair(s.known, s.partner, f)
        if actual != s.pairing:
            return Replay(False, i, f"pairing is {actual}, certificate says {s.pairing}")
        if abs(actual) != 1:
            return Replay(False, i, f"pairing {actual} is not +-1")
        if s.result not in (_add(s.known, s.partner), _add(s.known, s.partner, -1)):
            return Replay(False, i, "result is not known +- partner")
        known.add(canonical(s.result))
    if canonical(c.target) not in known:
        return Replay(False, len(c.steps), "target never reached")
    return Replay(True)


def _canon_rows(a: np.ndarray) -> np.ndarray:
    first = np.argmax(a != 0, axis=1)
    sign = np.sign(a[np.arange(len(a)), first])
    sign[sign == 0] = 1
    return a * sign[:, None]


class _Side:
    """One direction of the bidirectional search."""

    def __init__(self, starts: np.ndarray):
        self.parent = {}
        for row in starts:
            self.parent.setdefault(row.tobytes(), None)
        self.frontier = np.unique(starts, axis=0)

    def expand(self, pool, gram, bound):
        """Next layer; records ``child -> (parent, pool index)``."""
        if not len(self.frontier):
            return 0, []
        p = self.frontier @ gram
        rows, cols = np.nonzero(np.abs(p) == 1)
        cand = np.concatenate([self.frontier[rows] + pool[cols], self.frontier[rows] - pool[cols]])
        src = np.concatenate([rows, rows])
        via = np.concatenate([cols, cols])
        keep = np.abs(cand).max(axis=1) <= bound
        cand, src, via = _canon_rows(cand[keep]), src[keep], via[keep]
        uniq, first = np.unique(cand, axis=0, return_index=True)
        fresh = []
        new_rows = []
        for row, k in zip(uniq, first):
            key = row.tobytes()
            if key not in self.parent:
                self.parent[key] = (self.frontier[src[k]].tobytes(), int(via[k]))
                fresh.append(key)
                new_rows.append(row)
        self.frontier = np.array(new_rows, dtype=np.int64).reshape(-1, pool.shape[1])
        return len(cand), fresh

    def chain(self, key):
        out = [key]
        while self.parent[out[-1]] is not None:
            out.append(self.parent[out[-1]][0])
        return out


def _path_steps(nodes: list[tuple], edges: list[int], pool: list[tuple], f) -> list[Step]:
    steps = []
    cur = nodes[0]
    for nxt, j in zip(nodes[1:], edges):
        p = pool[j]
        pr = pair(cur, p, f)
        res = next(r for r in (_add(cur, p), _add(cur, p, -1)) if canonical(r) == nxt)
        steps.append(Step(cur, p, pr, res))
        cur = res
    return steps


def _search_one(pool: list[tuple], f, target, bound, budget) -> tuple[list[Step] | None, int]:
    tgt = canonical(target)
    if tgt in {canonical(p) for p in pool}:
        return [], 0
    arr = np.array(pool, dtype=np.int64)
    gram = intlinalg.matmul(f.matrix, arr.T).astype(np.int64)  # <c, p> = c W p^T
    fwd = _Side(_canon_rows(arr))
    bwd = _Side(np.array([tgt], dtype=np.int64))
    spent = 0
    dec = lambda key: tuple(int(x) for x in np.frombuffer(key, dtype=np.int64))
    while len(fwd.frontier) and len(bwd.frontier):
        side, other = (fwd, bwd) if len(fwd.frontier) <= len(bwd.frontier) else (bwd, fwd)
        if spent + len(side.frontier) * len(pool) * 2 > budget:
            raise BoundsExceeded(f"step bound {budget} exhausted before the search finished")
        n, fresh = side.expand(arr, gram, bound)
        spent += n
        meet = sorted(k for k in fresh if k in other.parent)
        if meet:
            key = meet[0]
            front = fwd.chain(key)[::-1]   # start ... key
            back = bwd.chain(key)          # key ... target
            keys = front + back[1:]
            nodes = [dec(k) for k in keys]
            edges = []
            for i in range(1, len(keys)):
                if i < len(front):
                    edges.append(fwd.parent[keys[i]][1])
                else:
                    edges.append(bwd.parent[keys[i - 1]][1])
            start = next(p for p in pool if canonical(p) == nodes[0])
            nodes[0] = start
            return _path_steps(nodes, edges, pool, f), spent
    return None, spent


def omega_closure_search(seeds, f: IntersectionForm, target, coeff_bound: int = 4,
                         step_bound: int = 10**6, via: Sequence = ()) -> ClosureCertificate | None:
    """Look for a derivation of ``target`` from ``seeds``.

    A derivation is a chain ``c_0, c_1, ...`` with ``c_0`` in the pool and
    ``c_{i+1} = c_i +- p`` for a pool vector ``p`` with ``|<c_i, p>| = 1``.
    The pool is the seeds plus the vectors in ``via``, each derived first in
    the same way.  Every vector on a chain has entries bounded by
    ``coeff_bound``.  Bidirectional breadth-first search on vectors up to
    sign; the result is deterministic.

    Returns None when the bounded search space is exhausted without reaching
    the target; raises BoundsExceeded when ``step_bound`` candidate vectors
    have been generated first.
    """
    if coeff_bound < 1 or step_bound < 1:
        raise OutOfRange("bounds must be positive")
    seeds = [as_vector(s) for s in seeds]
    if any(len(s) != f.d for s in seeds) or len(as_vector(target)) != f.d:
        raise DimensionMismatch("vectors and form sizes differ")
    pool = list(seeds)
    steps: list[Step] = []
    budget = step_bound
    for goal in list(via) + [target]:
        goal = as_vector(goal)
        if max(abs(x) for x in goal) > coeff_bound:
            return None
        found, spent = _search_one(pool, f, goal, coeff_bound, budget)
        budget -= spent
        if found is None:
            return None
        steps.extend(found)
        if canonical(goal) not in {canonical(p) for p in pool}:
            pool.append(found[-1].result if found else goal)
    return ClosureCertificate(tuple(seeds), as_vector(target), tuple(steps))


def certificate_mod2(c: ClosureCertificate) -> list[int]:
    """Packed mod-2 reductions of every vector the certificate produces."""
    return sorted({f2.vec(v) for v in list(c.seeds) + [s.result for s in c.steps]})


# --- bases and named vectors ----------------------------------------------



def letter_vector(p: Permutation, coeffs: dict) -> tuple[int, ...]:
    """Vector from ``{letter: coefficient}``; letters may be ints or names."""
    return p.vector({str(k): v for k, v in coeffs.items()})


def alternating_pairs(p: Permutation, beta: int) -> tuple[int, ...]:
    """``(-e_2 + e_3) + (-e_5 + e_6) + ... + (-e_{beta-1} + e_beta)``."""
    coeffs = {}
    for k in range(1, beta // 3 + 1):
        coeffs[3 * k - 1] = -1
        coeffs[3 * k] = 1
    return letter_vector(p, coeffs)


def star_vectors(p: Permutation, g: int) -> tuple[tuple, tuple]:
    """``v* = e_0 + s`` and ``w* = e_1 + s`` with ``s`` the alternating sum to ``3g - 3``."""
    s = alternating_pairs(p, 3 * g - 3)
    return _add(s, p.unit("0")), _add(s, p.unit("1"))


def minimal_symplectic_basis(family: str, g: int) -> tuple[Permutation, list[tuple[tuple, tuple]]]:
    """The symplectic basis of the minimal-stratum representative of genus ``g``.

    For ``tau-minimal``: ``{e_2, e_3}, {e_5, e_6}, ..., {v*, w*}``.  For
    ``sigma-minimal`` the first pair is replaced by
    ``{e_2 - e_5 + e_6, e_3 - e_5 + e_6}``.
    """
    p = representatives(family, g)
    pairs = [(p.unit(3 * k - 1), p.unit(3 * k)) for k in range(1, g)]
    if family == "sigma-minimal":
        shift = letter_vector(p, {5: -1, 6: 1})
        pairs[0] = (_add(p.unit(2), shift), _add(p.unit(3), shift))
    elif family != "tau-minimal":
        raise OutOfRange(f"no named basis for {family!r}")
    pairs.append(star_vectors(p, g))
    return p, pairs


def check_symplectic_basis(pairs, f: IntersectionForm) -> bool:
    flat = [v for ab in pairs for v in ab]
    if len(flat) != f.d:
        return False
    for i, (a, b) in enumerate(pairs):
        if pair(a, b, f) != 1:
            return False
        for j, (c, e) in enumerate(pairs):
            if j != i and any(pair(x, y, f) for x in (a, b) for y in (c, e)):
                return False
    return True


def alternating_sum(p: Permutation, beta: int) -> tuple[int, ...]:
    """``sum_{a=1}^{beta} (-1)^a e_a`` for permutations on letters ``1..d``."""
    return letter_vector(p, {a: (-1) ** a for a in range(1, beta + 1)})


def e_sharp(p: Permutation) -> tuple[int, ...]:
    """``(1, -1, 1, ..., -1, 1)`` on letters ``1..d`` (d odd)."""
    return letter_vector(p, {a: (-1) ** (a + 1) for a in range(1, p.d + 1)})


@dataclass(frozen=True)
class Membership:
    """A claimed member of the closure of the canonical vectors."""

    label: str
    target: tuple
    via: tuple = ()


def _quadruple_memberships(label, quad, f, hint=()) -> list[Membership]:
    a, b, c, d4 = normalize_quadruple(*quad, f)
    # members that are not +-e_a must be derived before they can be partners
    extra = tuple(v for v in quad if sorted(map(abs, v))[-2:] != [0, 1])
    via = tuple(hint) + extra
    return [Membership(f"{label}: 2v1 + v2", _add(_scale(2, a), b), via),
            Membership(f"{label}: 2v1 - v3", _add(_scale(2, a), c, -1), via)]


def _fits(quad, f) -> bool:
    absolute = tuple(tuple(abs(x) for x in row) for row in pairing_matrix(quad, f))
    return absolute == tuple(tuple(abs(x) for x in row) for row in SQUARE_PATTERN)


def _with_partner(p: Permutation, f, beta: int, build) -> tuple:
    """First ``beta'`` with ``|<e_beta, e_beta'>| = 1`` making ``build(e_beta')`` fit."""
    eb = p.unit(beta)
    for i in range(p.d):
        cand = p.unit(p.name(i))
        if abs(pair(eb, cand, f)) == 1 and _fits(build(cand), f):
            return build(cand)
    raise WrongPairingPattern(f"no partner of e{beta} fits the pattern")


def minimal_quadruples(family: str, g: int) -> list[tuple[str, tuple]]:
    """Quadruples fed to the unsigned square lemma for the minimal families."""
    p = representatives(family, g)
    f = omega(p)
    e = p.unit
    v_star, w_star = star_vectors(p, g)
    low = 2 if family == "tau-minimal" else 5
    pair_letters = [x for k in range(1, g) for x in (3 * k - 1, 3 * k) if x >= low]
    out = []
    for a, b in itertools.combinations(pair_letters, 2):
        for x, y in ((a, b), (b, a)):
            if pair(e(x), e(y), f) == 0:
                quad = _with_partner(p, f, y, lambda c: (e(x), e(y), c, e(0)))
                out.append((f"e{x}+e{y} disjoint", quad))
    if (3 * g - 3) % 6 == 3:
        v = alternating_pairs(p, 3 * g - 3)
        out.append(("v*, w* squares", (v, e(0), e(1), e(2))))
    else:
        for b in pair_letters:
            out.append((f"v*+e{b} square", _with_partner(p, f, b, lambda c: (v_star, e(b), c, e(1)))))
            out.append((f"w*+e{b} square", _with_partner(p, f, b, lambda c: (w_star, e(b), c, e(0)))))
    if family == "sigma-minimal":
        out.append(("shifted pair squares", (_add(e(5), e(6), -1), e(2), e(3), e(5))))
        if (3 * g - 3) % 6 == 3:
            out.append(("shifted v* squares", (_add(e(6), e(5), -1), _add(v_star, e(2)),
                                                _add(v_star, e(3)), _add(e(1), e(5)))))
    return out


def minimal_memberships(family: str, g: int) -> tuple[Permutation, list[Membership]]:
    """Every membership the level-two argument relies on, for one genus."""
    p = representatives(family, g)
    f = omega(p)
    e = p.unit
    v_star, w_star = star_vectors(p, g)
    out = []
    top = 3 * g - 3
    for beta in range(3, top + 1, 6):
        out.append(Membership(f"alternating pairs to {beta}", alternating_pairs(p, beta)))
    branch3 = top % 6 == 3
    alt = alternating_pairs(p, top if branch3 else top - 3)
    pool_hint = (alt,) if any(alt) else ()
    out.append(Membership("v* + w*", _add(v_star, w_star), pool_hint))
    if not branch3:
        out.append(Membership("v*", v_star, pool_hint))
        out.append(Membership("w*", w_star, pool_hint))
    low = 2 if family == "tau-minimal" else 5
    pair_letters = [x for k in range(1, g) for x in (3 * k - 1, 3 * k) if x >= low]
    if branch3:
        for b in pair_letters:
            out.append(Membership(f"v* + e{b}", _add(v_star, e(b)), pool_hint))
            out.append(Membership(f"w* + e{b}", _add(w_star, e(b)), pool_hint))
    if family == "sigma-minimal":
        shift = letter_vector(p, {5: -1, 6: 1})
        s2, s3 = _add(e(2), shift), _add(e(3), shift)
        out.append(Membership("shifted pair sum", _add(s2, s3)))
        for b, sb in ((2, s2), (3, s3)):
            for a in pair_letters:
                out.append(Membership(f"shifted e{b} + e{a}", _add(sb, e(a))))
            if branch3:
                out.append(Membership(f"v* + e{b}", _add(v_star, e(b)), pool_hint))
            else:
                out.append(Membership(f"shifted e{b} + v*", _add(sb, v_star), pool_hint))
                out.append(Membership(f"shifted e{b} + w*", _add(sb, w_star), pool_hint))
    for label, quad in minimal_quadruples(family, g):
        out.extend(_quadruple_memberships(label, quad, f, pool_hint))
    return p, out


def family_memberships(family: str, d: int) -> tuple[Permutation, list[Membership]]:
    """Alternating sums ``sum_{1..beta} (-1)^a e_a`` with ``beta = 2 mod 4``."""
    p = representatives(family, d)
    out = [Membership(f"alternating sum to {beta}", alternating_sum(p, beta))
           for beta in range(6, d + 1, 4)]
    if family == "sigma-d":
        out.append(Membership("-e1 + e2 + e4 + e8", letter_vector(p, {1: -1, 2: 1, 4: 1, 8: 1})))
    return p, out


def odd_shear_memberships(d: int) -> tuple[Permutation, list[Membership]]:
    """Vectors whose transvections build the shears on the odd family ``tau-d``."""
    if d % 2 == 0 or d < 7:
        raise OutOfRange("needs odd d >= 7")
    p = representatives("tau-d", d)
    es = e_sharp(p)
    out = []
    g = (d - 1) // 2
    if g % 2 == 1:
        w = alternating_sum(p, d - 1)
        out.append(Membership(f"alternating sum to {d - 1}", w))
        for a in range(1, d):
            out.append(Membership(f"e{a} - e#", _add(p.unit(a), es, -1), (w,)))
    else:
        w = alternating_sum(p, d - 3)
        out.append(Membership(f"alternating sum to {d - 3}", w))
        e = p.unit
        for a in range(1, d - 2):
            out.append(Membership(f"e{a} - w + e{d - 2}", _add(_add(e(a), w, -1), e(d - 2)), (w,)))
        out.append(Membership(f"2e{d-2} - e{d-1} + e{d}",
                              letter_vector(p, {d - 2: 2, d - 1: -1, d: 1})))
        out.append(Membership(f"e{d-2} + e{d}", letter_vector(p, {d - 2: 1, d: 1})))
        out.append(Membership(f"e{d} + e1", letter_vector(p, {d: 1, 1: 1})))
    return p, out


# --- level two ------------------------------------------------------------


def level_two_generators(basis, f: IntersectionForm) -> list[np.ndarray]:
    """``T_b^2`` for every basis vector and ``T_{b+b'}^2`` for every pair."""
    if not check_symplectic_basis(basis, f):
        raise NotSymplecticBasis("basis pairs are not symplectic for the form")
    flat = [as_vector(v) for ab in basis for v in ab]
    gens = [transvection_matrix(b, f, 2) for b in flat]
    gens += [transvection_matrix(_add(a, b), f, 2) for a, b in itertools.combinations(flat, 2)]
    return gens


def standard_basis(g: int) -> list[tuple[tuple, tuple]]:
    d = 2 * g
    unit = lambda i: tuple(int(j == i) for j in range(d))
    return [(unit(2 * i), unit(2 * i + 1)) for i in range(g)]


def congruence_kernel_order(g: int) -> int:
    """``|ker Sp(2g, Z/4) -> Sp(2g, Z/2)| = 2^{g(2g+1)}``.

    Its elements are ``Id + 2X`` with ``X W`` symmetric mod 2, and symmetric
    ``2g x 2g`` matrices over GF(2) form a space of dimension ``g(2g+1)``.
    """
    return 2 ** (g * (2 * g + 1))


def congruence_kernel_brute(f: IntersectionForm) -> int:
    """Count ``Id + 2X`` (``X`` over GF(2)) that are symplectic mod 4; tiny ``d`` only."""
    d = f.d
    if d > 4:
        raise OutOfRange("brute kernel count limited to d <= 4")
    w = f.matrix % 4
    count = 0
    for bits in range(1 << (d * d)):
        x = np.array([(bits >> k) & 1 for k in range(d * d)], dtype=np.int64).reshape(d, d)
        m = np.eye(d, dtype=np.int64) + 2 * x
        if np.array_equal((m @ w @ m.T) % 4, w):
            count += 1
    return count


def _check_level_two(generators, f):
    for m in generators:
        m = np.asarray(m)
        if np.any((m - np.eye(len(m), dtype=np.int64)) % 2):
            raise NotLevelTwo("generator is not the identity mod 2")
        if f is not None and not is_symplectic(m, f):
            raise NotSymplectic("generator is not symplectic")


def mod4_kernel_rank(generators, f: IntersectionForm | None = None) -> int:
    """``log_2`` of the order of the group the generators make mod 4.

    The kernel is elementary abelian: ``(Id + 2X)(Id + 2Y) = Id + 2(X + Y)``
    mod 4, so the generated group has order ``2^rank`` of the ``X`` mod 2.
    """
    _check_level_two(generators, f)
    rows = []
    for m in generators:
        x = ((np.asarray(m, dtype=object) - np.eye(len(m), dtype=np.int64)) // 2) % 2
        rows.append(f2.vec(int(v) for v in x.ravel()))
    return f2.rank(rows)


@dataclass(frozen=True)
class Mod4Report:
    g: int
    order: int
    expected: int
    digest: int

    @property
    def ok(self) -> bool:
        return self.order == self.expected

    def __bool__(self):
        return self.ok


def mod4_kernel_report(generators, g: int, f: IntersectionForm | None = None,
                       cap: int = 10**8) -> Mod4Report:
    """Enumerate the group generated mod 4 and compare with the full kernel."""
    if g > 3:
        raise OutOfRange("mod-4 enumeration limited to g <= 3")
    gens = [np.asarray(m, dtype=object) for m in generators]
    if any(m.shape != (2 * g, 2 * g) for m in gens):
        raise DimensionMismatch(f"generators must be {2 * g}x{2 * g}")
    _check_level_two(gens, f)
    enum = f2.closure([(m % 4).astype(np.int64) for m in gens], modulus=4, cap=cap)
    return Mod4Report(g, enum.order, congruence_kernel_order(g), enum.digest())


def mod4_kernel_check(generators, g: int, f: IntersectionForm | None = None,
                      cap: int = 10**8) -> bool:
    return mod4_kernel_report(generators, g, f, cap).ok
