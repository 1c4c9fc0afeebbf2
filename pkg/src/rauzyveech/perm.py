"""Labeled permutation pairs and the combinatorics of Rauzy induction.

A permutation is stored over canonical letter ids ``0..d-1``; the user-facing
letter names live in ``alphabet`` (``alphabet[i]`` is the name of id ``i``).
Ids never change under Rauzy moves, so every vertex of a Rauzy class shares
one alphabet and hashes cheaply.  Positions are 0-based internally.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import (
    BadSplit,
    ClassSearchFailed,
    ForbiddenPosition,
    IllegalInsertion,
    InvalidPermutation,
    NoSuchSingularity,
    NotComposable,
    NotIrreducible,
    NotStandard,
    OutOfRange,
    ProfileInconsistent,
    SizeExceeded,
)

TOP, BOTTOM = 0, 1
FORWARD_KINDS = ("top", "bottom")
INVERSE_KINDS = {"top": "inverse-top", "bottom": "inverse-bottom"}


@dataclass(frozen=True)
class Permutation:
    top: tuple
    bottom: tuple
    alphabet: tuple

    def __post_init__(self):
        d = len(self.top)
        if d < 3:
            raise InvalidPermutation(f"need at least 3 letters, got {d}")
        if len(self.bottom) != d or len(self.alphabet) != d:
            raise InvalidPermutation("rows and alphabet must have equal length")
        if sorted(self.top) != list(range(d)) or sorted(self.bottom) != list(range(d)):
            raise InvalidPermutation("rows must contain each letter exactly once")
        if len(set(self.alphabet)) != d:
            raise InvalidPermutation("letter names must be distinct")

    @classmethod
    def from_rows(cls, top: Sequence, bottom: Sequence, alphabet: Sequence | None = None):
        """Build from rows of letter names; the alphabet defaults to top-row order."""
        top = [str(a) for a in top]
        bottom = [str(a) for a in bottom]
        if len(set(top)) != len(top) or set(top) != set(bottom) or len(top) != len(bottom):
            raise InvalidPermutation("top and bottom rows must hold the same distinct letters")
        if alphabet is None:
            alphabet = top
        alphabet = tuple(str(a) for a in alphabet)
        if set(alphabet) != set(top):
            raise InvalidPermutation("alphabet does not match the rows")
        ids = {name: i for i, name in enumerate(alphabet)}
        return cls(tuple(ids[a] for a in top), tuple(ids[a] for a in bottom), alphabet)

    @property
    def d(self) -> int:
        return len(self.top)

    def index(self, letter) -> int:
        """Canonical id of a letter name (names are compared as strings)."""
        try:
            return self.alphabet.index(str(letter))
        except ValueError:
            raise InvalidPermutation(f"letter {letter!r} not in alphabet") from None

    def name(self, i: int) -> str:
        return self.alphabet[i]

    def rows(self) -> tuple[tuple[str, ...], tuple[str, ...]]:
        return (tuple(self.alphabet[i] for i in self.top),
                tuple(self.alphabet[i] for i in self.bottom))

    def positions(self) -> tuple[list[int], list[int]]:
        """0-based positions ``(pt, pb)`` indexed by letter id."""
        pt = [0] * self.d
        pb = [0] * self.d
        for j, a in enumerate(self.top):
            pt[a] = j
        for j, a in enumerate(self.bottom):
            pb[a] = j
        return pt, pb

    def vector(self, coeffs) -> tuple[int, ...]:
        """Integer vector from ``{letter name: coefficient}``."""
        v = [0] * self.d
        for letter, c in dict(coeffs).items():
            v[self.index(letter)] += int(c)
        return tuple(v)

    def unit(self, letter) -> tuple[int, ...]:
        return self.vector({letter: 1})

    def relabel(self, alphabet: Sequence) -> "Permutation":
        """Same rows, different id assignment."""
        return Permutation.from_rows(*self.rows(), alphabet=alphabet)

    def encode(self) -> tuple:
        return self.top + self.bottom

    def __str__(self):
        return format_permutation(self)


def parse_permutation(text: str) -> Permutation:
    """Parse the two-line text format: whitespace-separated top and bottom rows."""
    lines = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
    if len(lines) != 2:
        raise InvalidPermutation(f"expected exactly two non-empty lines, got {len(lines)}")
    return Permutation.from_rows(lines[0], lines[1])


def format_permutation(p: Permutation) -> str:
    top, bottom = p.rows()
    return " ".join(top) + "\n" + " ".join(bottom) + "\n"


def is_irreducible(p: Permutation) -> bool:
    seen_top, seen_bottom = set(), set()
    for j in range(p.d - 1):
        seen_top.add(p.top[j])
        seen_bottom.add(p.bottom[j])
        if seen_top == seen_bottom:
            return False
    return True


def degeneracy_witness(p: Permutation) -> tuple[int, int] | None:
    """First ``(condition, j)`` (both 1-based) making ``p`` degenerate, or None."""
    d = p.d
    _, pb0 = p.positions()
    # 1-based bottom position of the j-th top letter (1-based j)
    pb = [None] + [pb0[p.top[j]] + 1 for j in range(d)]
    for j in range(1, d):
        if pb[j] == d and pb[j + 1] == 1 and pb[1] == pb[d] + 1:
            return (1, j)
        if pb[j + 1] == 1 and pb[1] == pb[j] + 1:
            return (2, j)
        if pb[j] == d and pb[j + 1] == pb[d] + 1:
            return (3, j)
    return None


def is_degenerate(p: Permutation) -> bool:
    return degeneracy_witness(p) is not None


def is_standard(p: Permutation) -> bool:
    return p.bottom[0] == p.top[-1] and p.bottom[-1] == p.top[0]


@dataclass(frozen=True)
class Arrow:
    source: Permutation
    kind: str
    winner: int
    loser: int
    target: Permutation

    @property
    def forward(self) -> bool:
        return self.kind in FORWARD_KINDS

    @property
    def base_kind(self) -> str:
        return self.kind.replace("inverse-", "")

    def inverse(self) -> "Arrow":
        if self.forward:
            kind = INVERSE_KINDS[self.kind]
        else:
            kind = self.base_kind
        return Arrow(self.target, kind, self.winner, self.loser, self.source)


def rauzy_step(p: Permutation, kind: str) -> Arrow:
    """Forward top or bottom Rauzy operation."""
    if kind == "top":
        winner, loser = p.top[-1], p.bottom[-1]
        if winner == loser:
            raise InvalidPermutation("winner equals loser")
        row = list(p.bottom[:-1])
        k = row.index(winner)
        row.insert(k + 1, loser)
        target = Permutation(p.top, tuple(row), p.alphabet)
    elif kind == "bottom":
        winner, loser = p.bottom[-1], p.top[-1]
        if winner == loser:
            raise InvalidPermutation("winner equals loser")
        row = list(p.top[:-1])
        k = row.index(winner)
        row.insert(k + 1, loser)
        target = Permutation(tuple(row), p.bottom, p.alphabet)
    else:
        raise ValueError(f"unknown operation {kind!r}")
    return Arrow(p, kind, winner, loser, target)


def inverse_step(p: Permutation, kind: str) -> Arrow:
    """The reversed arrow ending at ``p`` whose forward version has type ``kind``.

    Returns an arrow with ``source == p`` and kind ``inverse-<kind>``; raises
    if ``p`` is not the target of such an operation.
    """
    if kind == "top":
        winner = p.top[-1]
        row = list(p.bottom)
        k = row.index(winner)
        if k == p.d - 1:
            raise InvalidPermutation("no top arrow ends here")
        loser = row.pop(k + 1)
        row.append(loser)
        source = Permutation(p.top, tuple(row), p.alphabet)
    elif kind == "bottom":
        winner = p.bottom[-1]
        row = list(p.top)
        k = row.index(winner)
        if k == p.d - 1:
            raise InvalidPermutation("no bottom arrow ends here")
        loser = row.pop(k + 1)
        row.append(loser)
        source = Permutation(tuple(row), p.bottom, p.alphabet)
    else:
        raise ValueError(f"unknown operation {kind!r}")
    return Arrow(p, INVERSE_KINDS[kind], winner, loser, source)


@dataclass(frozen=True)
class Walk:
    start: Permutation
    arrows: tuple = ()

    def __post_init__(self):
        cur = self.start
        for a in self.arrows:
            if a.source != cur:
                raise NotComposable("arrow does not start where the walk ends")
            cur = a.target

    @property
    def end(self) -> Permutation:
        return self.arrows[-1].target if self.arrows else self.start

    def __len__(self):
        return len(self.arrows)

    def __add__(self, other: "Walk") -> "Walk":
        if other.start != self.end:
            raise NotComposable("walks do not concatenate")
        return Walk(self.start, self.arrows + other.arrows)

    def inverse(self) -> "Walk":
        return Walk(self.end, tuple(a.inverse() for a in reversed(self.arrows)))

    def is_cycle(self) -> bool:
        return self.end == self.start

    def vertices(self) -> list[Permutation]:
        return [self.start] + [a.target for a in self.arrows]


def walk_from_kinds(start: Permutation, kinds: Iterable[str]) -> Walk:
    """Walk obtained by applying forward (``top``/``bottom``) or
    ``inverse-top``/``inverse-bottom`` moves in order."""
    arrows = []
    cur = start
    for kind in kinds:
        if kind in FORWARD_KINDS:
            a = rauzy_step(cur, kind)
        else:
            a = inverse_step(cur, kind.replace("inverse-", ""))
        arrows.append(a)
        cur = a.target
    return Walk(start, tuple(arrows))


@dataclass
class RauzyClass:
    """Vertices in canonical order and forward adjacency ``edges[p][kind]``."""

    vertices: tuple
    edges: dict = field(repr=False)

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, p):
        return p in self.edges

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.vertices)

    def arrow(self, p: Permutation, kind: str) -> Arrow:
        return rauzy_step(p, kind)

    def path(self, src: Permutation, predicate) -> Walk:
        """Shortest forward walk from ``src`` to the first vertex satisfying
        ``predicate`` (``src`` itself included)."""
        if predicate(src):
            return Walk(src)
        parent = {src: None}
        queue = deque([src])
        while queue:
            cur = queue.popleft()
            for kind in FORWARD_KINDS:
                a = rauzy_step(cur, kind)
                nxt = a.target
                if nxt in parent:
                    continue
                parent[nxt] = a
                if predicate(nxt):
                    arrows = []
                    node = nxt
                    while parent[node] is not None:
                        arrows.append(parent[node])
                        node = parent[node].source
                    return Walk(src, tuple(reversed(arrows)))
                queue.append(nxt)
        raise ClassSearchFailed("no vertex satisfies the predicate")

    def path_to(self, src: Permutation, dst: Permutation) -> Walk:
        return self.path(src, lambda q: q == dst)

    def random_walk(self, start: Permutation, length: int, rng: random.Random) -> Walk:
        """Random walk in the undirected class graph (forward and reversed arrows)."""
        arrows = []
        cur = start
        for _ in range(length):
            moves = [rauzy_step(cur, k) for k in FORWARD_KINDS]
            for k in FORWARD_KINDS:
                try:
                    moves.append(inverse_step(cur, k))
                except InvalidPermutation:
                    pass
            a = rng.choice(moves)
            arrows.append(a)
            cur = a.target
        return Walk(start, tuple(arrows))

    def random_cycle(self, start: Permutation, length: int, rng: random.Random) -> Walk:
        """Random undirected walk closed up by a shortest forward path home."""
        w = self.random_walk(start, length, rng)
        return w + self.path_to(w.end, start)

    def is_strongly_connected(self) -> bool:
        root = self.vertices[0]
        forward = _reach(root, lambda q: [self.edges[q][k] for k in FORWARD_KINDS])
        reverse_adj: dict = {q: [] for q in self.vertices}
        for q in self.vertices:
            for k in FORWARD_KINDS:
                reverse_adj[self.edges[q][k]].append(q)
        backward = _reach(root, lambda q: reverse_adj[q])
        return len(forward) == len(backward) == len(self.vertices)


def _reach(root, neighbours):
    seen = {root}
    stack = [root]
    while stack:
        cur = stack.pop()
        for nxt in neighbours(cur):
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen


def rauzy_class(p: Permutation, max_size: int = 10**6) -> RauzyClass:
    edges: dict = {}
    queue = deque([p])
    edges[p] = None
    while queue:
        cur = queue.popleft()
        out = {}
        for kind in FORWARD_KINDS:
            nxt = rauzy_step(cur, kind).target
            out[kind] = nxt
            if nxt not in edges:
                if len(edges) >= max_size:
                    raise SizeExceeded(max_size)
                edges[nxt] = None
                queue.append(nxt)
        edges[cur] = out
    vertices = tuple(sorted(edges, key=Permutation.encode))
    return RauzyClass(vertices, edges)


def is_hyperelliptic_vertex(p: Permutation) -> bool:
    """Bottom row is the reversed top row."""
    return p.bottom == p.top[::-1]


# --- singularities -------------------------------------------------------


@dataclass(frozen=True)
class OrbitMap:
    """The bijection on ``(letter id, row)`` pairs; row is ``TOP`` or ``BOTTOM``."""

    successor: dict
    excluded: frozenset

    def orbits(self) -> list[list[tuple[int, int]]]:
        """Orbits in order of first appearance, each listed along the map."""
        seen = set()
        out = []
        for start in sorted(self.successor):
            if start in seen:
                continue
            orbit = [start]
            seen.add(start)
            cur = self.successor[start]
            while cur != start:
                orbit.append(cur)
                seen.add(cur)
                cur = self.successor[cur]
            out.append(orbit)
        return out

    def orbit_of(self, pair) -> list[tuple[int, int]]:
        orbit = [pair]
        cur = self.successor[pair]
        while cur != pair:
            orbit.append(cur)
            cur = self.successor[cur]
        return orbit

    def cone_size(self, orbit) -> int:
        """Cone angle of the orbit's point, in units of pi."""
        return sum(1 for x in orbit if x not in self.excluded)


def orbit_map(p: Permutation) -> OrbitMap:
    """Turn around the marked points: ``(a, TOP)`` stands for the top side of
    ``a`` and its left endpoint, ``(a, BOTTOM)`` for the bottom side of ``a``
    and its right endpoint.

    The two end cases follow the gluing at the polygon's first and last
    vertex: ``(t_1, t) -> (b_1, t)`` and ``(b_d, b) -> (t_d, b)``.  For a
    standard permutation (``b_1 = t_d``) these read ``(t_d, t)`` and
    ``(b_1, b)``; without that condition the end cases must go through the
    gluing or the map is not a bijection.
    """
    t, b, d = p.top, p.bottom, p.d
    s = {}
    for j in range(1, d):
        s[(t[j], TOP)] = (t[j - 1], BOTTOM)
    s[(t[0], TOP)] = (b[0], TOP)
    for j in range(d - 1):
        s[(b[j], BOTTOM)] = (b[j + 1], TOP)
    s[(b[d - 1], BOTTOM)] = (t[d - 1], BOTTOM)
    return OrbitMap(s, frozenset({(t[0], TOP), (b[d - 1], BOTTOM)}))


@dataclass(frozen=True)
class StratumProfile:
    orders: tuple
    genus: int

    @property
    def n(self) -> int:
        return len(self.orders)

    def name(self) -> str:
        return "H(" + ",".join(str(m) for m in sorted(self.orders, reverse=True)) + ")"


def _orders_by_orbit(p: Permutation):
    om = orbit_map(p)
    out = []
    for orbit in om.orbits():
        size = om.cone_size(orbit)
        if size == 0:
            continue
        if size % 2 or size < 2:
            raise ProfileInconsistent(f"cone angle {size}*pi is not a multiple of 2*pi")
        out.append((orbit, size // 2 - 1))
    return om, out


def stratum_profile(p: Permutation) -> StratumProfile:
    _, data = _orders_by_orbit(p)
    orders = tuple(sorted(m for _, m in data))
    total = sum(orders)
    if total % 2:
        raise ProfileInconsistent(f"sum of orders {total} is odd")
    genus = total // 2 + 1
    if p.d != 2 * genus + len(orders) - 1:
        raise ProfileInconsistent(
            f"d={p.d} but 2g+n-1={2 * genus + len(orders) - 1} for orders {orders}")
    return StratumProfile(orders, genus)


# --- reductions and extensions ------------------------------------------


def simple_reduction(p: Permutation, letter) -> Permutation:
    i = p.index(letter)
    top, bottom = p.rows()
    name = p.alphabet[i]
    alphabet = tuple(a for a in p.alphabet if a != name)
    if len(alphabet) < 3:
        raise InvalidPermutation("reduction would leave fewer than 3 letters")
    q = Permutation.from_rows([a for a in top if a != name], [a for a in bottom if a != name],
                              alphabet)
    if not is_irreducible(q):
        raise NotIrreducible(f"erasing {name} gives a reducible permutation")
    return q


def fresh_letter(p: Permutation) -> str:
    k = p.d
    while str(k) in p.alphabet:
        k += 1
    return str(k)


def simple_extension(p: Permutation, new_letter, before_top, before_bottom) -> Permutation:
    """Insert ``new_letter`` just before ``before_top`` on top and just before
    ``before_bottom`` on the bottom row; its id is ``d``."""
    new = str(new_letter)
    if new in p.alphabet:
        raise IllegalInsertion(f"letter {new} already present")
    bt, bb = p.index(before_top), p.index(before_bottom)
    if bt == p.top[0] and bb == p.bottom[0]:
        raise ForbiddenPosition("cannot insert before both row heads")
    top, bottom = (list(r) for r in p.rows())
    top.insert(top.index(p.alphabet[bt]), new)
    bottom.insert(bottom.index(p.alphabet[bb]), new)
    q = Permutation.from_rows(top, bottom, p.alphabet + (new,))
    if not is_irreducible(q):
        raise NotIrreducible("extension is reducible")
    return q


@dataclass(frozen=True)
class Insertion:
    """Where a fresh letter goes: just before ``before_top`` / ``before_bottom``."""

    letter: str
    before_top: str
    before_bottom: str

    def apply(self, p: Permutation) -> Permutation:
        return simple_extension(p, self.letter, self.before_top, self.before_bottom)


def split_singularity(p: Permutation, m11: int, order: int | None = None,
                      new_letter=None) -> tuple[Permutation, Insertion]:
    """Split one cone point of order ``m1`` into orders ``m11`` and ``m1 - m11``.

    ``order`` selects the singularity (default: the largest).  Returns the
    extended permutation together with the insertion data that produced it.
    """
    if not is_standard(p):
        raise NotStandard("splitting needs a standard permutation")
    om, data = _orders_by_orbit(p)
    orders = [m for _, m in data]
    m1 = max(orders) if order is None else order
    chosen = [orbit for orbit, m in data if m == m1]
    if not chosen or m1 < 2:
        raise NoSuchSingularity(f"no singularity of order {m1} >= 2")
    if not 1 <= m11 <= m1 - 1:
        raise BadSplit(f"need 1 <= m11 <= {m1 - 1}, got {m11}")
    orbit = set(chosen[0])
    alpha = next((a for a in p.top[1:] if (a, TOP) in orbit), None)
    if alpha is None:
        raise NoSuchSingularity("no interior top vertex over the chosen cone point")
    ordered = [x for x in om.orbit_of((alpha, TOP)) if x not in om.excluded]
    if len(ordered) != 2 + 2 * m1:
        raise ProfileInconsistent("orbit size does not match the order")
    beta, row = ordered[2 + 2 * m11]
    if row != TOP:
        raise ProfileInconsistent("split position is not a top side")
    ins = Insertion(str(new_letter) if new_letter is not None else fresh_letter(p),
                    p.alphabet[alpha], p.alphabet[beta])
    return ins.apply(p), ins


def extension_map_on_walk(w: Walk, ins: Insertion) -> Walk:
    """Lift a forward walk of the reduced class to the extended class."""
    cur = ins.apply(w.start)
    arrows = []
    for a in w.arrows:
        if not a.forward:
            raise IllegalInsertion("only forward walks can be lifted")
        src = a.source
        kind = a.kind
        last_top = src.alphabet[src.top[-1]]
        last_bottom = src.alphabet[src.bottom[-1]]
        if kind == "top" and ins.before_bottom == last_bottom:
            steps = 2
        elif kind == "bottom" and ins.before_top == last_top:
            steps = 2
        else:
            steps = 1
        for _ in range(steps):
            arrow = rauzy_step(cur, kind)
            arrows.append(arrow)
            cur = arrow.target
        expected = ins.apply(a.target)
        if cur != expected:
            raise IllegalInsertion("lifted walk does not track the extension map")
    return Walk(ins.apply(w.start), tuple(arrows))


# --- representative families --------------------------------------------


def _minimal_top(g: int) -> list[int]:
    return [0, 1] + [k for k in range(2, 3 * g - 2) if k % 3 != 1]


def representatives(family: str, parameter: int) -> Permutation:
    """Explicit representatives.

    ``tau-minimal``/``sigma-minimal`` take the genus g (>=3 / >=4) and use
    letters ``0..3g-3`` without ``3k+1`` (k>=1); ``tau-d``/``sigma-d`` take
    the number of letters d (>=6 / >=8) with letters ``1..d``;
    ``tau-H2n``/``sigma-H2n`` take the genus (>=3 / >=4) and use all
    letters ``0..3g-3``.
    """
    n = int(parameter)
    if family == "tau-minimal":
        if n < 3:
            raise OutOfRange("tau-minimal needs g >= 3")
        bottom = [x for k in range(1, n) for x in (3 * k, 3 * k - 1)] + [1, 0]
        return Permutation.from_rows(_minimal_top(n), bottom)
    if family == "sigma-minimal":
        if n < 4:
            raise OutOfRange("sigma-minimal needs g >= 4")
        bottom = [6, 5, 3, 2] + [x for k in range(3, n) for x in (3 * k, 3 * k - 1)] + [1, 0]
        return Permutation.from_rows(_minimal_top(n), bottom)
    if family == "tau-d":
        if n < 6:
            raise OutOfRange("tau-d needs d >= 6")
        bottom = list(range(n, 5, -1)) + [3, 2, 5, 4, 1]
        return Permutation.from_rows(range(1, n + 1), bottom)
    if family == "sigma-d":
        if n < 8:
            raise OutOfRange("sigma-d needs d >= 8")
        bottom = list(range(n, 7, -1)) + [3, 2, 7, 6, 5, 4, 1]
        return Permutation.from_rows(range(1, n + 1), bottom)
    if family == "tau-H2n":
        if n < 3:
            raise OutOfRange("tau-H2n needs g >= 3")
        bottom = [3, 2] + [x for k in range(1, n - 1)
                           for x in (3 * k + 1, 3 * k + 3, 3 * k + 2)] + [1, 0]
        return Permutation.from_rows(range(3 * n - 2), bottom)
    if family == "sigma-H2n":
        if n < 4:
            raise OutOfRange("sigma-H2n needs g >= 4")
        bottom = [6, 5, 4, 3, 2] + [x for k in range(2, n - 1)
                                    for x in (3 * k + 1, 3 * k + 3, 3 * k + 2)] + [1, 0]
        return Permutation.from_rows(range(3 * n - 2), bottom)
    raise OutOfRange(f"unknown family {family!r}")


def hyperelliptic(d: int) -> Permutation:
    return Permutation.from_rows(range(1, d + 1), range(d, 0, -1))
