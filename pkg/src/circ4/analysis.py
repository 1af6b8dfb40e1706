"""Code analysis: minimum distance, weight enumerator, duality, classification.

Distance search has two interchangeable strategies.  The subset strategy
enumerates row subsets by increasing size and stops once the size exceeds
the best weight found; for graph codes every size-k subset sum is nonzero
in its k diagonal positions (the diagonal w can only become w^2 under the
binary off-diagonal entries), so weight >= k and the stop is a proof.
The full strategy walks all 2^n codewords in Gray order and yields the
whole weight distribution as a byproduct.  ``min_distance`` picks by
estimated work unless told otherwise.

Counts are exact integers end to end; nothing here goes through floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence, Union

from . import kernels
from .circulant import CirculantCode
from .errors import CapacityError, CostGuardError, RankDeficiencyError
from .words import BitplaneWord, word_symplectic_ip, word_weight

ENUMERATION_GUARD = 34  # largest n enumerated without an explicit override

RowsLike = Union[CirculantCode, Sequence[BitplaneWord]]


def _rows_of(code: RowsLike) -> list:
    rows = list(code.rows) if isinstance(code, CirculantCode) else list(code)
    if not rows:
        raise ValueError("no generator rows")
    n = rows[0].n
    if any(r.n != n for r in rows):
        raise ValueError("generator rows of mixed length")
    return rows


def gf2_row_rank(masks: Sequence[int]) -> int:
    """Rank over GF(2) of integer bit-rows, by elimination on leading bits."""
    pivots: dict = {}
    rank = 0
    for v in masks:
        while v:
            msb = v.bit_length() - 1
            if msb in pivots:
                v ^= pivots[msb]
            else:
                pivots[msb] = v
                rank += 1
                break
    return rank


# ---------------------------------------------------------------------------
# result types


@dataclass(frozen=True)
class WeightEnumerator:
    """Exact weight distribution (A_0, ..., A_n) of an additive code."""

    n: int
    counts: tuple

    def __post_init__(self):
        if len(self.counts) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} counts, got {len(self.counts)}")
        if any(c < 0 for c in self.counts):
            raise ValueError("negative count")

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def min_positive_weight(self) -> Optional[int]:
        for i in range(1, self.n + 1):
            if self.counts[i]:
                return i
        return None

    @classmethod
    def from_sparse(cls, n: int, nonzero: dict) -> "WeightEnumerator":
        counts = [0] * (n + 1)
        for i, a in nonzero.items():
            counts[i] = a
        return cls(n, tuple(counts))


@dataclass(frozen=True)
class DistanceResult:
    d: int
    witness: tuple                      # row indices whose sum has weight d
    k_max_searched: int
    proof_complete: bool
    strategy: str                       # "subsets" or "full"
    per_size_min: Optional[tuple] = None  # entry k-1: lightest size-k sum
    enumerator: Optional[WeightEnumerator] = None  # byproduct of the full strategy


@dataclass(frozen=True)
class SelfDualReport:
    self_orthogonal: bool
    independent_rows: bool
    self_dual: bool
    first_violation: Optional[tuple] = None  # (i, j) with nonzero pairing


class Classification(str, Enum):
    OPTIMUM = "optimum"
    PROPOSED_OPTIMUM = "proposed_optimum"
    SUBOPTIMAL = "suboptimal"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class MacWilliamsViolation:
    kind: str                  # "leading_term", "total_count" or "coefficient"
    index: Optional[int]
    expected: object
    actual: object

    def __str__(self):
        if self.kind == "coefficient":
            return (
                f"MacWilliams transform mismatch at coefficient {self.index}: "
                f"transform gives {self.actual}, enumerator has {self.expected}"
            )
        if self.kind == "total_count":
            return f"total codeword count is {self.actual}, expected {self.expected}"
        return f"A_0 is {self.actual}, expected {self.expected}"


# published lower/upper bound pairs for (n, 2^n) additive GF(4) codes;
# only lengths whose values this tool relies on, user-overridable via file
DEFAULT_BOUNDS = {
    12: (6, 6),
    16: (6, None),
    19: (7, None),
    22: (8, None),
    24: (8, None),
    30: (12, 12),
}


@dataclass(frozen=True)
class BoundsTable:
    """Map n -> (lower, optional upper) distance bound."""

    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        for n, (lo, hi) in self.entries.items():
            if lo < 1:
                raise ValueError(f"lower bound for n={n} must be >= 1")
            if hi is not None and hi < lo:
                raise ValueError(f"upper bound below lower bound for n={n}")

    @classmethod
    def default(cls) -> "BoundsTable":
        return cls(dict(DEFAULT_BOUNDS))

    @classmethod
    def from_file(cls, path, base: Optional["BoundsTable"] = None) -> "BoundsTable":
        """Load "n L [U]" lines; '#' starts a comment.  Entries override base."""
        entries = dict(base.entries) if base else {}
        for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) not in (2, 3):
                raise ValueError(f"{path}:{lineno}: expected 'n L [U]', got {raw!r}")
            try:
                nums = [int(p) for p in parts]
            except ValueError:
                raise ValueError(f"{path}:{lineno}: non-integer field in {raw!r}") from None
            n, lo = nums[0], nums[1]
            hi = nums[2] if len(nums) == 3 else None
            entries[n] = (lo, hi)
        return cls(entries)

    def entry(self, n: int) -> Optional[tuple]:
        return self.entries.get(n)

    def lower(self, n: int) -> Optional[int]:
        e = self.entries.get(n)
        return e[0] if e else None

    def upper(self, n: int) -> Optional[int]:
        e = self.entries.get(n)
        return e[1] if e else None


# ---------------------------------------------------------------------------
# operations


def _check_graph_code_shape(rows) -> None:
    """The subset-scan stop rule needs diagonal w and binary off-diagonals."""
    for i, r in enumerate(rows):
        if r.plane_b != (1 << i) or (r.plane_a >> i) & 1:
            raise ValueError(
                f"row {i} is not a graph-code generator row (diagonal w, 0/1 elsewhere)"
            )


def _estimate_prefers_full(n: int, rows) -> bool:
    # subset scan costs ~2 XOR+popcount units per subset, Gray scan ~1 per word
    d_ub = min(word_weight(r) for r in rows)
    subset_ops = 2 * sum(math.comb(n, k) for k in range(1, min(d_ub, n) + 1))
    return (1 << n) < subset_ops


def min_distance(
    code: RowsLike,
    cap: Optional[int] = None,
    strategy: str = "auto",
    early_exit_below: Optional[int] = None,
) -> DistanceResult:
    """Minimum distance of a circulant graph code, with a completeness proof.

    ``cap`` limits the subset size examined (and forces the subset
    strategy); without it the scan stops at the self-certifying bound
    size > best weight.  ``proof_complete`` is False when the cap cut the
    search short of that bound.  ``early_exit_below`` aborts the whole
    scan as soon as any weight below the given value is seen, which is
    what the sweep's reject filter wants; aborted results are upper
    bounds, never proofs.

    Under the full strategy the complete weight distribution comes out of
    the same pass and is attached as ``enumerator``.
    """
    rows = _rows_of(code)
    n = rows[0].n
    _check_graph_code_shape(rows)
    if cap is not None:
        if not 1 <= cap <= n:
            raise ValueError(f"cap must be in 1..{n}, got {cap}")
        strategy = "subsets"
    if strategy == "auto":
        strategy = "full" if _estimate_prefers_full(n, rows) else "subsets"
    if strategy not in ("subsets", "full"):
        raise ValueError(f"unknown strategy {strategy!r}")

    if strategy == "full":
        counts, best_w, best_mask = kernels.gray_scan(rows)
        witness = tuple(i for i in range(n) if (best_mask >> i) & 1)
        return DistanceResult(
            d=best_w,
            witness=witness,
            k_max_searched=n,
            proof_complete=True,
            strategy="full",
            enumerator=WeightEnumerator(n, tuple(counts)),
        )

    res = kernels.subset_scan(
        rows, cap=cap if cap is not None else n,
        early_exit_below=early_exit_below or 0,
    )
    d = res["d"]
    k_max = res["k_max"]
    witness = tuple(i for i in range(n) if (res["witness_mask"] >> i) & 1)
    per_size = tuple(res["per_k_min"][1 : k_max + 1]) if k_max else None
    return DistanceResult(
        d=d,
        witness=witness,
        k_max_searched=k_max,
        proof_complete=not res["aborted"] and d <= k_max,
        strategy="subsets",
        per_size_min=per_size,
    )


def weight_enumerator(
    code: RowsLike, allow_large: bool = False, log2_blocks: Optional[int] = None
) -> WeightEnumerator:
    """Exact weight distribution over all 2^n codewords via Gray traversal.

    Refuses n > 34 unless ``allow_large`` is set (the walk is Theta(2^n)),
    and refuses additively dependent generator rows outright: the span
    would then revisit words and every count would be wrong.
    """
    rows = _rows_of(code)
    n = rows[0].n
    if len(rows) != n:
        raise ValueError(f"need n={n} generator rows, got {len(rows)}")
    if n > ENUMERATION_GUARD and not allow_large:
        raise CostGuardError(
            f"weight enumeration over 2^{n} codewords refused; pass allow_large to override"
        )
    if n > 62:
        raise CapacityError("enumeration index would overflow the 63-bit counter")
    masks = [(r.plane_a << n) | r.plane_b for r in rows]
    rank = gf2_row_rank(masks)
    if rank < n:
        raise RankDeficiencyError(f"generator rows have rank {rank} < {n}")
    counts, _, _ = kernels.gray_scan(rows, log2_blocks=log2_blocks)
    assert counts[0] == 1, "independent rows must reach the zero word exactly once"
    return WeightEnumerator(n, tuple(counts))


def check_self_dual(code: RowsLike) -> SelfDualReport:
    """Self-orthogonality of all row pairs plus additive independence.

    For n rows of length n these two together pin the code to 2^n words
    equal to its own dual; either failing is reported with the first
    offending pair.
    """
    rows = _rows_of(code)
    n = rows[0].n
    first_violation = None
    for i in range(len(rows)):
        for j in range(i, len(rows)):
            if word_symplectic_ip(rows[i], rows[j]):
                first_violation = (i, j)
                break
        if first_violation:
            break
    self_orthogonal = first_violation is None
    masks = [(r.plane_a << n) | r.plane_b for r in rows]
    independent = gf2_row_rank(masks) == len(rows)
    return SelfDualReport(
        self_orthogonal=self_orthogonal,
        independent_rows=independent,
        self_dual=self_orthogonal and independent and len(rows) == n,
        first_violation=first_violation,
    )


def _krawtchouk_gf4(n: int, j: int, i: int) -> int:
    """Coefficient of x^(n-j) y^j in (x + 3y)^(n-i) (x - y)^i, exactly."""
    acc = 0
    for t in range(0, min(i, j) + 1):
        term = math.comb(i, t) * math.comb(n - i, j - t) * 3 ** (j - t)
        acc += -term if t & 1 else term
    return acc


def macwilliams_check(enum: WeightEnumerator) -> Optional[MacWilliamsViolation]:
    """Consistency oracle for enumerators of self-dual additive GF(4) codes.

    A self-dual code's distribution is a fixed point of the duality
    transform A_j -> 2^-n sum_i A_i K_j(i); this verifies that
    coefficientwise in exact integers, after the cheaper sanity checks
    A_0 = 1 and sum A_i = 2^n.  Returns None when consistent, otherwise
    the first violation found.
    """
    n = enum.n
    a = enum.counts
    if a[0] != 1:
        return MacWilliamsViolation("leading_term", 0, 1, a[0])
    size = 1 << n
    if enum.total != size:
        return MacWilliamsViolation("total_count", None, size, enum.total)
    for j in range(n + 1):
        s = sum(a[i] * _krawtchouk_gf4(n, j, i) for i in range(n + 1))
        if s != a[j] * size:
            return MacWilliamsViolation("coefficient", j, a[j], Fraction(s, size))
    return None


def classify(d: int, n: int, bounds: BoundsTable) -> Classification:
    """Place a distance against the published bounds for (n, 2^n) codes.

    Unknown when the table has no entry for n, and also when d exceeds
    the recorded lower bound, which means the table entry is stale and
    cannot certify anything.
    """
    entry = bounds.entry(n)
    if entry is None:
        return Classification.UNKNOWN
    lo, hi = entry
    if d < lo:
        return Classification.SUBOPTIMAL
    if d == lo:
        if hi is not None and hi == lo:
            return Classification.OPTIMUM
        return Classification.PROPOSED_OPTIMUM
    return Classification.UNKNOWN
