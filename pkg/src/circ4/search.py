"""Search drivers: the two-family candidate pipeline and the symmetric sweep.

Every driver emits ReportRecords, the one record shape shared with the
CLI.  Sweep output is deterministic for a fixed (n, budget, seed): the
candidate order is fixed, analysis is exact, and records are sorted by
distance (descending) then vector text, so concurrent analysis of the
candidates cannot reorder anything.  Sweep records carry no timing for
the same reason.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Union

from .analysis import (
    BoundsTable,
    Classification,
    check_self_dual,
    classify,
    min_distance,
    weight_enumerator,
)
from .circulant import (
    GeneratorVector,
    candidate_vector,
    expand_generator_matrix,
    parse_generator_vector,
)


@dataclass(frozen=True)
class ReportRecord:
    """One analyzed code, in the fixed report schema."""

    n: int
    vector: str
    d: int
    proof_complete: bool
    self_dual: bool
    classification: Classification
    enumerator: Optional[tuple] = None
    strategy: str = "analyze"
    seed: Optional[int] = None
    elapsed_ms: Optional[float] = None

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "vector": self.vector,
            "d": self.d,
            "proof_complete": self.proof_complete,
            "self_dual": self.self_dual,
            "classification": self.classification.value,
            "enumerator": list(self.enumerator) if self.enumerator is not None else None,
            "strategy": self.strategy,
            "seed": self.seed,
            "elapsed_ms": self.elapsed_ms,
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "ReportRecord":
        enum = obj.get("enumerator")
        return cls(
            n=obj["n"],
            vector=obj["vector"],
            d=obj["d"],
            proof_complete=obj["proof_complete"],
            self_dual=obj["self_dual"],
            classification=Classification(obj["classification"]),
            enumerator=tuple(enum) if enum is not None else None,
            strategy=obj.get("strategy", "analyze"),
            seed=obj.get("seed"),
            elapsed_ms=obj.get("elapsed_ms"),
        )


def analyze_vector(
    vector: Union[str, GeneratorVector],
    bounds: Optional[BoundsTable] = None,
    with_enumerator: bool = False,
    allow_large: bool = False,
    cap: Optional[int] = None,
    strategy_tag: str = "analyze",
    seed: Optional[int] = None,
    timed: bool = True,
) -> ReportRecord:
    """Full analysis of one generator vector into a ReportRecord."""
    gv = parse_generator_vector(vector) if isinstance(vector, str) else vector
    bounds = bounds if bounds is not None else BoundsTable.default()
    t0 = time.perf_counter()
    code = expand_generator_matrix(gv)
    dres = min_distance(code, cap=cap)
    duality = check_self_dual(code)
    enum = None
    if with_enumerator:
        full = dres.enumerator or weight_enumerator(code, allow_large=allow_large)
        enum = full.counts
    elapsed = (time.perf_counter() - t0) * 1000.0 if timed else None
    return ReportRecord(
        n=gv.n,
        vector=gv.text(),
        d=dres.d,
        proof_complete=dres.proof_complete,
        self_dual=duality.self_dual,
        classification=classify(dres.d, gv.n, bounds),
        enumerator=enum,
        strategy=strategy_tag,
        seed=seed,
        elapsed_ms=round(elapsed, 3) if elapsed is not None else None,
    )


def candidate_pipeline(n: int, bounds: Optional[BoundsTable] = None) -> list:
    """Build and analyze both candidate vectors for the tabled lower bound.

    The candidate construction pins the graph degree one above and one
    below the lower bound L_n; both codes are analyzed in full and the
    caller checks whether d reached L_n.
    """
    bounds = bounds if bounds is not None else BoundsTable.default()
    target = bounds.lower(n)
    if target is None:
        raise ValueError(f"bounds table has no lower-bound entry for n={n}")
    records = []
    for mode in ("plus", "minus"):
        gv = candidate_vector(n, target, mode)
        records.append(
            analyze_vector(gv, bounds=bounds, strategy_tag=f"candidate_{mode}")
        )
    return records


def symmetric_vector_space(n: int) -> int:
    """Number of distinct symmetric adjacency rows: 2^(n//2).

    Offsets 1..floor(n/2) are free; each j > n/2 is mirrored from n-j,
    and for even n the offset n/2 pairs with itself.
    """
    return 1 << (n // 2)


def _vector_from_free_bits(n: int, mask: int) -> GeneratorVector:
    half = n // 2
    adjacency = [0] * (n - 1)
    for j in range(1, n):
        adjacency[j - 1] = (mask >> (min(j, n - j) - 1)) & 1
    return GeneratorVector(n, tuple(adjacency))


def sweep_symmetric(
    n: int,
    budget: int,
    seed: int,
    target: Optional[int] = None,
    bounds: Optional[BoundsTable] = None,
    with_enumerators: bool = False,
    workers: int = 1,
) -> list:
    """Sweep symmetric generator vectors of length n for strong codes.

    Exhausts the whole 2^(n//2) space when it fits the budget, otherwise
    samples distinct vectors uniformly from the given seed.  With a
    target distance, candidates are first screened by a capped subset
    scan that bails out on the first weight below target; only survivors
    are fully analyzed and reported.  Without a target every candidate
    is reported.  Output order: d descending, then vector text; with
    ``workers`` > 1 candidates are analyzed in a thread pool (the scan
    kernels drop the GIL) and the sort keeps the output independent of
    completion order.
    """
    if budget < 1:
        raise ValueError(f"budget must be >= 1, got {budget}")
    bounds = bounds if bounds is not None else BoundsTable.default()
    space = symmetric_vector_space(n)
    if space <= budget:
        masks = range(space)
        seed_used = None
    else:
        rng = random.Random(seed)
        chosen: list = []
        seen = set()
        while len(chosen) < budget:
            m = rng.randrange(space)
            if m not in seen:
                seen.add(m)
                chosen.append(m)
        masks = chosen
        seed_used = seed

    def analyze_one(mask: int) -> Optional[ReportRecord]:
        gv = _vector_from_free_bits(n, mask)
        code = expand_generator_matrix(gv)
        if target is not None and target >= 2:
            screen = min_distance(code, cap=target - 1, early_exit_below=target)
            if screen.d < target:
                return None
        return analyze_vector(
            gv,
            bounds=bounds,
            with_enumerator=with_enumerators,
            strategy_tag="sweep",
            seed=seed_used,
            timed=False,
        )

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(analyze_one, masks))
    else:
        results = [analyze_one(m) for m in masks]
    records = [r for r in results if r is not None]
    records.sort(key=lambda r: (-r.d, r.vector))
    return records
