"""Packed codeword representation: one GF(4) vector as two parallel bit planes.

Coordinate i of a word holds the symbol a_i + b_i*w where a_i is bit i of
``plane_a`` and b_i is bit i of ``plane_b``.  Addition of codewords is then
an independent XOR of the two planes, Hamming weight is a popcount of
``plane_a | plane_b``, and the Hermitian trace inner product collapses to
the binary symplectic form

    parity(popcount(a_u & b_v) + popcount(b_u & a_v)).

Lengths are capped at 64 so every plane fits one machine word; the hot
loops in :mod:`circ4.kernels` rely on that.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf4
from .errors import CapacityError, DimensionMismatch

PLANE_CAPACITY = 64


@dataclass(frozen=True)
class BitplaneWord:
    """An immutable length-n GF(4) vector stored as two n-bit plane masks."""

    n: int
    plane_a: int
    plane_b: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"word length must be >= 1, got {self.n}")
        if self.n > PLANE_CAPACITY:
            raise CapacityError(f"length {self.n} exceeds plane capacity {PLANE_CAPACITY}")
        mask = (1 << self.n) - 1
        if self.plane_a & ~mask or self.plane_b & ~mask:
            raise ValueError("plane bits set above position n-1")

    def __xor__(self, other: "BitplaneWord") -> "BitplaneWord":
        return word_add(self, other)

    def __repr__(self):
        return f"BitplaneWord({gf4.format_symbols(decode_word(self))!r})"


def zero_word(n: int) -> BitplaneWord:
    return BitplaneWord(n, 0, 0)


def encode_word(symbols: gf4.SymbolVector) -> BitplaneWord:
    """Pack a symbol vector; symbol codes already carry the (a, b) bit pair."""
    n = len(symbols)
    if n > PLANE_CAPACITY:
        raise CapacityError(f"length {n} exceeds plane capacity {PLANE_CAPACITY}")
    a = 0
    b = 0
    for i, e in enumerate(symbols):
        a |= (e & 1) << i
        b |= (e >> 1) << i
    return BitplaneWord(n, a, b)


def decode_word(w: BitplaneWord) -> gf4.SymbolVector:
    return tuple(((w.plane_a >> i) & 1) | (((w.plane_b >> i) & 1) << 1) for i in range(w.n))


def word_add(u: BitplaneWord, v: BitplaneWord) -> BitplaneWord:
    """Coordinatewise GF(4) sum; plane-wise XOR."""
    if u.n != v.n:
        raise DimensionMismatch(f"word lengths differ: {u.n} != {v.n}")
    return BitplaneWord(u.n, u.plane_a ^ v.plane_a, u.plane_b ^ v.plane_b)


def word_weight(w: BitplaneWord) -> int:
    """Hamming weight: the number of coordinates where either plane is set."""
    return (w.plane_a | w.plane_b).bit_count()


def word_distance(u: BitplaneWord, v: BitplaneWord) -> int:
    """Hamming distance; wt(u - v) = wt(u + v) in characteristic 2."""
    return word_weight(word_add(u, v))


def word_symplectic_ip(u: BitplaneWord, v: BitplaneWord) -> int:
    """Binary symplectic pairing, equal to herm_trace_ip on the decoded vectors."""
    if u.n != v.n:
        raise DimensionMismatch(f"word lengths differ: {u.n} != {v.n}")
    x = (u.plane_a & v.plane_b).bit_count() + (u.plane_b & v.plane_a).bit_count()
    return x & 1


def rotate_word(w: BitplaneWord, shift: int) -> BitplaneWord:
    """Cyclically move coordinate i to coordinate i + shift (mod n)."""
    n = w.n
    shift %= n
    if shift == 0:
        return w
    mask = (1 << n) - 1

    def rot(m: int) -> int:
        return ((m << shift) | (m >> (n - shift))) & mask

    return BitplaneWord(n, rot(w.plane_a), rot(w.plane_b))
