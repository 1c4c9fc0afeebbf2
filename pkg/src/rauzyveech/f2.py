"""Bit-packed linear algebra over GF(2) and vectorized matrix-group closure.

Vectors are Python ints: bit ``i`` is the coordinate of letter id ``i``.
A matrix is a tuple of row ints acting on row vectors, ``u -> u M``.

The closure engine stores each matrix as a small array of uint64 words with
rows packed side by side, and multiplies by a generator with one table
lookup per row (the table maps every possible row to its image).  The same
engine handles matrices mod 4 with two bits per entry.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import CapExceeded, DimensionMismatch, DimensionTooLarge

MASK64 = (1 << 64) - 1


# --- vectors ---------------------------------------------------------------


def popcount(x: int) -> int:
    return bin(x).count("1")


def parity(x: int) -> int:
    return popcount(x) & 1


def vec(bits: Iterable[int]) -> int:
    """Pack an iterable of 0/1 (or integers, reduced mod 2) into an int."""
    out = 0
    for i, b in enumerate(bits):
        if int(b) & 1:
            out |= 1 << i
    return out


def unvec(v: int, d: int) -> tuple[int, ...]:
    return tuple((v >> i) & 1 for i in range(d))


def unit(i: int) -> int:
    return 1 << i


def support(v: int) -> list[int]:
    return [i for i in range(v.bit_length()) if v >> i & 1]


def vec_mat(u: int, rows: Sequence[int]) -> int:
    """Row vector times matrix."""
    out = 0
    i = 0
    while u:
        if u & 1:
            out ^= rows[i]
        u >>= 1
        i += 1
    return out


def pairing(u: int, v: int, rows: Sequence[int]) -> int:
    """``u M v^T`` mod 2."""
    return parity(vec_mat(u, rows) & v)


# --- matrices --------------------------------------------------------------


@dataclass(frozen=True)
class F2Matrix:
    rows: tuple
    d: int

    def __post_init__(self):
        if len(self.rows) != self.d:
            raise DimensionMismatch("matrix must be square")
        if self.d > 64:
            raise DimensionTooLarge("dimension above 64")
        lim = 1 << self.d
        if any(r < 0 or r >= lim for r in self.rows):
            raise DimensionMismatch("row wider than the dimension")

    @classmethod
    def identity(cls, d: int) -> "F2Matrix":
        return cls(tuple(1 << i for i in range(d)), d)

    @classmethod
    def from_array(cls, a) -> "F2Matrix":
        a = np.asarray(a)
        return cls(tuple(vec(int(x) % 2 for x in row) for row in a.tolist()), a.shape[0])

    def to_array(self) -> np.ndarray:
        return np.array([unvec(r, self.d) for r in self.rows], dtype=np.int64)

    def apply(self, u: int) -> int:
        return vec_mat(u, self.rows)

    def __matmul__(self, other: "F2Matrix") -> "F2Matrix":
        if other.d != self.d:
            raise DimensionMismatch("dimensions differ")
        return F2Matrix(tuple(vec_mat(r, other.rows) for r in self.rows), self.d)

    def transpose(self) -> "F2Matrix":
        return F2Matrix(tuple(vec((r >> j) & 1 for r in self.rows) for j in range(self.d)),
                        self.d)

    def __add__(self, other: "F2Matrix") -> "F2Matrix":
        return F2Matrix(tuple(a ^ b for a, b in zip(self.rows, other.rows)), self.d)

    def is_identity(self) -> bool:
        return all(r == 1 << i for i, r in enumerate(self.rows))

    def pack(self) -> int:
        """Rows laid side by side, ``d`` bits each."""
        out = 0
        for i, r in enumerate(self.rows):
            out |= r << (i * self.d)
        return out

    @classmethod
    def unpack(cls, key: int, d: int) -> "F2Matrix":
        m = (1 << d) - 1
        return cls(tuple((key >> (i * d)) & m for i in range(d)), d)


def rank(rows: Iterable[int]) -> int:
    return len(echelon(rows))


def echelon(rows: Iterable[int]) -> list[int]:
    """Reduced basis of the row span, keyed by distinct leading bits."""
    basis: dict[int, int] = {}
    for r in rows:
        for lead in sorted(basis, reverse=True):
            if r >> lead & 1:
                r ^= basis[lead]
        if r:
            lead = r.bit_length() - 1
            for k in list(basis):
                if basis[k] >> lead & 1:
                    basis[k] ^= r
            basis[lead] = r
    return [basis[k] for k in sorted(basis)]


def in_span(v: int, rows: Iterable[int]) -> bool:
    ech = echelon(rows)
    for r in sorted(ech, reverse=True):
        if v >> (r.bit_length() - 1) & 1:
            v ^= r
    return v == 0


def solve(rows: Sequence[int], rhs: Sequence[int], nvars: int) -> int | None:
    """Solve ``sum_j x_j * column_j = rhs`` for the system whose i-th equation
    has coefficient row ``rows[i]`` (bit j = coefficient of x_j) and constant
    ``rhs[i]``.  Returns one solution as an int, or None when inconsistent."""
    aug = [(r & ((1 << nvars) - 1)) | ((int(b) & 1) << nvars) for r, b in zip(rows, rhs)]
    pivots = []
    row = 0
    for c in range(nvars):
        p = next((i for i in range(row, len(aug)) if aug[i] >> c & 1), None)
        if p is None:
            continue
        aug[row], aug[p] = aug[p], aug[row]
        for i in range(len(aug)):
            if i != row and aug[i] >> c & 1:
                aug[i] ^= aug[row]
        pivots.append(c)
        row += 1
    if any(aug[i] >> nvars & 1 for i in range(row, len(aug))):
        return None
    x = 0
    for i, c in enumerate(pivots):
        if aug[i] >> nvars & 1:
            x |= 1 << c
    return x


def kernel(rows: Sequence[int], d: int) -> list[int]:
    """Basis of ``{u : u M = 0}`` for a ``d``-row matrix."""
    # reduce [M | I] and read off the identity part of zero rows
    aug = [rows[i] | (1 << (d + i)) for i in range(d)]
    width = max((r.bit_length() for r in rows), default=0)
    row = 0
    for c in range(width):
        p = next((i for i in range(row, d) if aug[i] >> c & 1), None)
        if p is None:
            continue
        aug[row], aug[p] = aug[p], aug[row]
        for i in range(d):
            if i != row and aug[i] >> c & 1:
                aug[i] ^= aug[row]
        row += 1
    out = [r >> d for r in aug[row:]]
    return sorted(echelon(out))


def symplectic_basis(omega_rows: Sequence[int], d: int,
                     complement_of: Sequence[int] | None = None) -> list[tuple[int, int]]:
    """Hyperbolic pairs ``(a, b)`` with ``<a, b> = 1`` spanning a complement
    of the radical; built greedily from the coordinate vectors in order."""
    pool = [1 << i for i in range(d)]
    pairs = []
    while True:
        a = next((x for x in pool if any(pairing(x, y, omega_rows) for y in pool)), None)
        if a is None:
            return pairs
        b = next(y for y in pool if pairing(a, y, omega_rows))
        pairs.append((a, b))
        new_pool = []
        for x in pool:
            # project x onto the orthogonal of span(a, b)
            x2 = x ^ (pairing(x, b, omega_rows) * a) ^ (pairing(x, a, omega_rows) * b)
            if x2 and not in_span(x2, new_pool):
                new_pool.append(x2)
        pool = new_pool


# --- vectorized closure engine --------------------------------------------


def splitmix64(x: np.ndarray) -> np.ndarray:
    x = x.astype(np.uint64, copy=True)
    with np.errstate(over="ignore"):
        x += np.uint64(0x9E3779B97F4A7C15)
        x = (x ^ (x >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
        x = (x ^ (x >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
        x = x ^ (x >> np.uint64(31))
    return x


@dataclass(frozen=True)
class RowCodec:
    """How a square matrix over Z/modulus is packed into uint64 words."""

    n: int
    modulus: int = 2

    @property
    def bits(self) -> int:
        return 1 if self.modulus == 2 else 2

    @property
    def width(self) -> int:
        return self.n * self.bits

    @property
    def rows_per_word(self) -> int:
        return 64 // self.width

    @property
    def words(self) -> int:
        return -(-self.n // self.rows_per_word)

    def slot(self, i: int) -> tuple[int, int]:
        w, k = divmod(i, self.rows_per_word)
        return w, k * self.width

    def encode_row(self, row: Sequence[int]) -> int:
        out = 0
        for j, x in enumerate(row):
            out |= (int(x) % self.modulus) << (j * self.bits)
        return out

    def decode_row(self, code: int) -> list[int]:
        m = (1 << self.bits) - 1
        return [(code >> (j * self.bits)) & m for j in range(self.n)]

    def encode(self, matrix) -> np.ndarray:
        key = [0] * self.words
        for i, row in enumerate(np.asarray(matrix).tolist()):
            w, s = self.slot(i)
            key[w] |= self.encode_row(row) << s
        return np.array(key, dtype=np.uint64)

    def decode(self, key) -> np.ndarray:
        key = [int(x) for x in np.asarray(key).ravel()]
        m = (1 << self.width) - 1
        out = []
        for i in range(self.n):
            w, s = self.slot(i)
            out.append(self.decode_row((key[w] >> s) & m))
        return np.array(out, dtype=np.int64)

    def table(self, matrix) -> np.ndarray:
        """Image ``code(r) -> code(r M)`` for every possible row ``r``."""
        if self.width > 20:
            raise DimensionTooLarge("row lookup table would be too large")
        g = np.asarray(matrix, dtype=np.int64) % self.modulus
        codes = np.arange(1 << self.width, dtype=np.int64)
        m = (1 << self.bits) - 1
        entries = np.stack([(codes >> (j * self.bits)) & m for j in range(self.n)], axis=1)
        image = (entries @ g) % self.modulus
        out = np.zeros(len(codes), dtype=np.uint64)
        for j in range(self.n):
            out |= image[:, j].astype(np.uint64) << np.uint64(j * self.bits)
        return out

    def multiply(self, keys: np.ndarray, table: np.ndarray) -> np.ndarray:
        """Right-multiply every packed matrix in ``keys`` (shape (N, words))."""
        out = np.zeros_like(keys)
        mask = np.uint64((1 << self.width) - 1)
        for i in range(self.n):
            w, s = self.slot(i)
            code = (keys[:, w] >> np.uint64(s)) & mask
            out[:, w] |= table[code.astype(np.intp)] << np.uint64(s)
        return out

    def identity(self) -> np.ndarray:
        return self.encode(np.eye(self.n, dtype=np.int64))


def key_hash(keys: np.ndarray) -> np.ndarray:
    """One uint64 per packed matrix; the identity map for one-word keys."""
    if keys.shape[1] == 1:
        return keys[:, 0].copy()
    h = splitmix64(keys[:, 0])
    for w in range(1, keys.shape[1]):
        h = splitmix64(h ^ keys[:, w])
    return h


class HashCollision(RuntimeError):
    pass


def _dedupe(keys: np.ndarray):
    """Sorted distinct hashes and one key per hash, checking for collisions."""
    h = key_hash(keys)
    uh, first, inv = np.unique(h, return_index=True, return_inverse=True)
    if keys.shape[1] > 1 and not np.array_equal(keys[first][inv.ravel()], keys):
        raise HashCollision("distinct matrices share a hash")
    return uh, keys[first]


def digest(keys: np.ndarray) -> int:
    """Order-independent 64-bit fold of a set of packed matrices."""
    with np.errstate(over="ignore"):
        return int(np.sum(splitmix64(key_hash(keys)), dtype=np.uint64))


@dataclass
class SubgroupEnumeration:
    codec: RowCodec
    keys: np.ndarray = field(repr=False)
    hashes: np.ndarray = field(repr=False)
    generators: list = field(repr=False)
    complete: bool

    def __len__(self):
        return len(self.keys)

    @property
    def order(self) -> int:
        return len(self.keys)

    def digest(self) -> int:
        return digest(self.keys)

    def contains(self, matrix) -> bool:
        key = self.codec.encode(matrix)[None, :]
        h = key_hash(key)[0]
        i = np.searchsorted(self.hashes, h)
        return bool(i < len(self.hashes) and self.hashes[i] == h
                    and np.array_equal(self.keys[i], key[0]))

    def matrices(self, chunk: int = 1 << 16):
        """Yield decoded element arrays of shape (k, n, n) in chunks."""
        for start in range(0, len(self.keys), chunk):
            yield decode_many(self.codec, self.keys[start:start + chunk])


def decode_many(codec: RowCodec, keys: np.ndarray) -> np.ndarray:
    out = np.zeros((len(keys), codec.n, codec.n), dtype=np.int64)
    rmask = np.uint64((1 << codec.width) - 1)
    emask = np.uint64((1 << codec.bits) - 1)
    for i in range(codec.n):
        w, s = codec.slot(i)
        code = (keys[:, w] >> np.uint64(s)) & rmask
        for j in range(codec.n):
            out[:, i, j] = ((code >> np.uint64(j * codec.bits)) & emask).astype(np.int64)
    return out


def closure(generators: Sequence, modulus: int = 2, cap: int = 10**8) -> SubgroupEnumeration:
    """All products of the generators (a group, since everything is finite).

    Breadth-first from the identity under right multiplication by each
    generator.  Raises ``CapExceeded`` with the partial enumeration attached.
    """
    gens = [np.asarray(g, dtype=np.int64) % modulus for g in generators]
    if not gens:
        raise DimensionMismatch("need at least one generator to fix the dimension")
    n = gens[0].shape[0]
    if any(g.shape != (n, n) for g in gens):
        raise DimensionMismatch("generators must be square of equal size")
    codec = RowCodec(n, modulus)
    tables = [codec.table(g) for g in gens]
    start = codec.identity()[None, :]
    seen_h, seen_k = _dedupe(start)
    frontier = seen_k
    while len(frontier):
        fresh = []
        for t in tables:
            cand = codec.multiply(frontier, t)
            ch, ck = _dedupe(cand)
            pos = np.searchsorted(seen_h, ch)
            pos_c = np.minimum(pos, len(seen_h) - 1)
            hit = seen_h[pos_c] == ch
            if seen_k.shape[1] > 1 and hit.any():
                if not np.array_equal(seen_k[pos_c[hit]], ck[hit]):
                    raise HashCollision("distinct matrices share a hash")
            fresh.append(ck[~hit])
        layer = np.concatenate(fresh) if fresh else np.zeros((0, codec.words), np.uint64)
        if not len(layer):
            break
        lh, lk = _dedupe(layer)
        all_h = np.concatenate([seen_h, lh])
        order = np.argsort(all_h, kind="stable")
        seen_h = all_h[order]
        seen_k = np.concatenate([seen_k, lk])[order]
        frontier = lk
        if len(seen_h) > cap:
            raise CapExceeded(cap, SubgroupEnumeration(codec, seen_k, seen_h, gens, False))
    return SubgroupEnumeration(codec, seen_k, seen_h, gens, True)


def symplectic_group_order(g: int, q: int = 2) -> int:
    """``|Sp(2g, q)|`` by the product formula."""
    out = q ** (g * g)
    for i in range(1, g + 1):
        out *= q ** (2 * i) - 1
    return out
