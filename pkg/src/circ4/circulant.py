"""Circulant graph codes: generator vectors, their validation and expansion.

A generator vector is a length-n GF(4) vector whose first symbol is w and
whose remaining symbols are the 0/1 adjacency row of a circulant graph:
``adjacency[j-1]`` is 1 iff every vertex i is adjacent to i +- j (mod n).
Expanding the vector by cyclic right shifts yields the n x n generator
matrix of the graph code, i.e. the adjacency matrix with w added on the
diagonal.

Vertex bookkeeping is 0-based throughout.  The two candidate families and
the dense family are emitted in this convention; published descriptions of
the same edge sets usually label vertices from 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

from . import gf4
from .errors import CapacityError, SymmetryError, VectorFormatError
from .words import PLANE_CAPACITY, BitplaneWord

CandidateMode = Literal["plus", "minus"]


@dataclass(frozen=True)
class GeneratorVector:
    """First row of a circulant graph code: symbol w followed by adjacency bits.

    ``adjacency`` has n-1 entries; entry j-1 is the bit a_j for offset j.
    The w in position 0 is implied by the type and never stored.
    """

    n: int
    adjacency: tuple

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"vector length must be >= 1, got {self.n}")
        if self.n > PLANE_CAPACITY:
            raise CapacityError(f"length {self.n} exceeds plane capacity {PLANE_CAPACITY}")
        if len(self.adjacency) != self.n - 1:
            raise ValueError(f"expected {self.n - 1} adjacency bits, got {len(self.adjacency)}")
        if any(bit not in (0, 1) for bit in self.adjacency):
            raise ValueError("adjacency bits must be 0 or 1")

    @property
    def degree(self) -> int:
        """Degree of every vertex in the circulant graph."""
        return sum(self.adjacency)

    def symbols(self) -> gf4.SymbolVector:
        return (gf4.OMEGA,) + self.adjacency

    def text(self) -> str:
        return gf4.format_symbols(self.symbols())

    def offsets(self) -> tuple:
        """The connection set: offsets j with a_j = 1, in increasing order."""
        return tuple(j for j, bit in enumerate(self.adjacency, start=1) if bit)

    @classmethod
    def from_offsets(cls, n: int, offsets) -> "GeneratorVector":
        bits = [0] * (n - 1)
        for j in offsets:
            if not 1 <= j <= n - 1:
                raise ValueError(f"offset {j} out of range 1..{n - 1}")
            bits[j - 1] = 1
        return cls(n, tuple(bits))


@dataclass(frozen=True)
class CirculantCode:
    """Expanded generator matrix: n packed rows, row i the i-shift of row 0."""

    generator: GeneratorVector
    rows: tuple

    @property
    def n(self) -> int:
        return self.generator.n


def parse_generator_vector(text: str) -> GeneratorVector:
    """Parse generator-vector text over the alphabet 0/1/w/W.

    The first character must be 'w', or '0' which is auto-promoted to w
    (adjacency rows are written both ways in the literature).  All later
    characters must be 0 or 1.
    """
    if not text:
        raise VectorFormatError("empty vector text")
    first = text[0]
    if first == "W":
        raise VectorFormatError("symbol 'W' at position 0; the leading symbol must be 'w'")
    if first not in ("w", "0"):
        raise VectorFormatError(
            f"invalid leading symbol {first!r} at position 0; expected 'w' or '0'"
        )
    bits = []
    for i, c in enumerate(text[1:], start=1):
        if c in ("w", "W"):
            raise VectorFormatError(f"symbol {c!r} at position {i}; w may appear only at position 0")
        if c not in ("0", "1"):
            raise VectorFormatError(f"invalid symbol {c!r} at position {i}")
        bits.append(int(c))
    return GeneratorVector(len(text), tuple(bits))


def validate_circulant_symmetry(v: GeneratorVector) -> Optional[tuple]:
    """Return None if a_j = a_{n-j} for all offsets, else the first bad pair (j, n-j)."""
    n = v.n
    for j in range(1, n // 2 + 1):
        if v.adjacency[j - 1] != v.adjacency[n - j - 1]:
            return (j, n - j)
    return None


def expand_generator_matrix(v: GeneratorVector) -> CirculantCode:
    """Build the full circulant code; refuses asymmetric adjacency rows."""
    bad = validate_circulant_symmetry(v)
    if bad is not None:
        raise SymmetryError(f"adjacency bits at offsets {bad[0]} and {bad[1]} differ")
    n = v.n
    mask = (1 << n) - 1
    a0 = 0
    for j, bit in enumerate(v.adjacency, start=1):
        a0 |= bit << j
    b0 = 1  # the w on the diagonal
    rows = []
    for i in range(n):
        if i == 0:
            rows.append(BitplaneWord(n, a0, b0))
        else:
            ra = ((a0 << i) | (a0 >> (n - i))) & mask
            rb = ((b0 << i) | (b0 >> (n - i))) & mask
            rows.append(BitplaneWord(n, ra, rb))
    return CirculantCode(v, tuple(rows))


def _run(lo: int, hi: int) -> list:
    """Ascending arithmetic run lo, lo+2, ..., hi; empty when hi < lo."""
    return list(range(lo, hi + 1, 2)) if hi >= lo else []


def candidate_vector(n: int, target: int, mode: CandidateMode) -> GeneratorVector:
    """Connection set giving a circulant graph of degree target+1 or target-1.

    In plus mode the 0-based offsets are {1, 2} U {4, 6, ..., target-2}
    U {n/2} U {n-target+2, ..., n-4} U {n-2, n-1}; minus mode shrinks the
    two middle runs by one element each.  Runs may be empty for small
    targets.  The result is always mirror-symmetric; n must be even and
    target even (the run lengths only close up for even targets), with n
    large enough that the offsets stay distinct.
    """
    if mode not in ("plus", "minus"):
        raise ValueError(f"mode must be 'plus' or 'minus', got {mode!r}")
    if n % 2 != 0:
        raise ValueError(f"n must be even, got {n}")
    if target % 2 != 0:
        raise ValueError(f"target distance must be even, got {target}")
    min_target = 4 if mode == "plus" else 6
    if target < min_target:
        raise ValueError(f"target distance must be >= {min_target} in {mode} mode, got {target}")

    if mode == "plus":
        low_run = _run(4, target - 2)
        high_run = _run(n - target + 2, n - 4)
    else:
        low_run = _run(4, target - 4)
        high_run = _run(n - target + 4, n - 4)
    offsets = [1, 2] + low_run + [n // 2] + high_run + [n - 2, n - 1]

    if len(set(offsets)) != len(offsets) or min(offsets) < 1 or max(offsets) > n - 1:
        raise ValueError(f"n={n} is too small for distinct offsets at target {target}")
    v = GeneratorVector.from_offsets(n, offsets)
    assert validate_circulant_symmetry(v) is None
    return v


def dense_family_vector(n: int) -> GeneratorVector:
    """Dense-graph family: fixed 10-bit sleeves around a block of n-21 ones."""
    if n < 21:
        raise ValueError(f"dense family needs n >= 21, got {n}")
    sleeve = (0, 1, 1, 0, 0, 0, 0, 1, 1, 0)
    adjacency = sleeve + (1,) * (n - 21) + sleeve
    v = GeneratorVector(n, adjacency)
    assert validate_circulant_symmetry(v) is None
    return v


def to_dot(v: GeneratorVector, name: str = "circulant") -> str:
    """DOT text of the circulant graph (edges only, no layout hints)."""
    n = v.n
    lines = [f"graph {name} {{"]
    for i in range(n):
        lines.append(f"  {i};")
    for i in range(n):
        for j in v.offsets():
            k = (i + j) % n
            if i < k:
                lines.append(f"  {i} -- {k};")
    lines.append("}")
    return "\n".join(lines) + "\n"
