"""Scalar arithmetic over GF(4) = {0, 1, w, w^2} with w^2 = 1 + w.

Elements are plain ints 0..3 encoding the bit pair (a, b) with value
a + b*w: 0 -> 0, 1 -> 1, 2 -> w, 3 -> w^2.  Under this encoding field
addition is bitwise XOR, which is what makes the packed two-plane
codeword representation in :mod:`circ4.words` work.

Text I/O uses the four characters ``0``, ``1``, ``w``, ``W`` (W is w^2).
"""

from __future__ import annotations

from .errors import DimensionMismatch, VectorFormatError

ZERO = 0
ONE = 1
OMEGA = 2
OMEGA2 = 3
ELEMENTS = (ZERO, ONE, OMEGA, OMEGA2)

ELEMENT_TO_CHAR = "01wW"
CHAR_TO_ELEMENT = {c: e for e, c in enumerate(ELEMENT_TO_CHAR)}

# A vector over GF(4) is a tuple of element codes.
SymbolVector = tuple


def _mul(x: int, y: int) -> int:
    # (a + bw)(c + dw) = (ac + bd) + (ad + bc + bd)w, using w^2 = 1 + w
    a, b = x & 1, x >> 1
    c, d = y & 1, y >> 1
    return ((a & c) ^ (b & d)) | ((((a & d) ^ (b & c)) ^ (b & d)) << 1)


_MUL = tuple(tuple(_mul(x, y) for y in ELEMENTS) for x in ELEMENTS)
_CONJ = (0, 1, 3, 2)        # x -> x^2 fixes 0, 1 and swaps w <-> w^2
_TRACE = (0, 0, 1, 1)       # Tr(x) = x + x^2


def gf4_add(a: int, b: int) -> int:
    """Field addition; XOR in the bit-pair encoding (characteristic 2)."""
    return a ^ b


def gf4_mul(a: int, b: int) -> int:
    """Field multiplication."""
    return _MUL[a][b]


def gf4_conj(a: int) -> int:
    """Conjugation, the squaring map."""
    return _CONJ[a]


def gf4_trace(a: int) -> int:
    """Trace to GF(2): a + a^2, always 0 or 1."""
    return _TRACE[a]


def herm_trace_ip(u: SymbolVector, v: SymbolVector) -> int:
    """Hermitian trace inner product of two equal-length vectors.

    Returns sum_i Tr(u_i * conj(v_i)) over GF(2).  This binary form is
    the orthogonality test for additive GF(4) codes.
    """
    if len(u) != len(v):
        raise DimensionMismatch(f"vector lengths differ: {len(u)} != {len(v)}")
    acc = 0
    for x, y in zip(u, v):
        acc ^= _TRACE[_MUL[x][_CONJ[y]]]
    return acc


def parse_symbols(text: str) -> SymbolVector:
    """Parse a symbol string over the alphabet 0/1/w/W into element codes."""
    out = []
    for i, c in enumerate(text):
        e = CHAR_TO_ELEMENT.get(c)
        if e is None:
            raise VectorFormatError(f"invalid symbol {c!r} at position {i}")
        out.append(e)
    return tuple(out)


def format_symbols(symbols: SymbolVector) -> str:
    return "".join(ELEMENT_TO_CHAR[e] for e in symbols)
