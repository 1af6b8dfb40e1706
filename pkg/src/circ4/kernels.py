"""Compiled enumeration kernels for distance and weight-distribution scans.

Two scans over the additive span of n packed generator rows:

* :func:`gray_scan` visits all 2^n subset sums in binary-reflected Gray
  order, one row XOR per step.  The index space is split into contiguous
  blocks by the top Gray bits; each block starts from an independently
  computed prefix sum, so block histograms merge by plain integer
  addition and the result is bit-identical for every block count.

* :func:`subset_scan` enumerates row subsets by increasing size k with a
  revolving-door combination generator (exactly one row leaves and one
  enters per step, two XORs).  For graph codes the sum of k rows is
  nonzero on its k diagonal positions, so its weight is at least k; the
  scan therefore stops once k exceeds the best weight found, which
  certifies the minimum distance without visiting larger subsets.

Counts stay in int64 (max 2^63 codewords, far above the n <= 64 cap).
"""

from __future__ import annotations

import numpy as np
from numba import int64, njit, uint64


@njit(uint64(uint64), cache=True, nogil=True, inline="always")
def _popcount(x):
    # SWAR popcount; valid for the full 64-bit range.
    x = x - ((x >> uint64(1)) & uint64(0x5555555555555555))
    x = (x & uint64(0x3333333333333333)) + ((x >> uint64(2)) & uint64(0x3333333333333333))
    x = (x + (x >> uint64(4))) & uint64(0x0F0F0F0F0F0F0F0F)
    return (x * uint64(0x0101010101010101)) >> uint64(56)


@njit(cache=True, nogil=True)
def _gray_scan_blocks(rows_a, rows_b, n, log2_blocks):
    nblocks = 1 << log2_blocks
    bsize = (int64(1) << n) >> log2_blocks
    hist = np.zeros((nblocks, n + 1), dtype=np.int64)
    best_w = np.full(nblocks, n + 1, dtype=np.int64)
    best_i = np.zeros(nblocks, dtype=np.int64)
    for blk in range(nblocks):
        start = blk * bsize
        # prefix sum of the rows selected by gray(start)
        g = uint64(start ^ (start >> 1))
        acc_a = uint64(0)
        acc_b = uint64(0)
        for j in range(n):
            if (g >> uint64(j)) & uint64(1):
                acc_a ^= rows_a[j]
                acc_b ^= rows_b[j]
        bw = int64(n + 1)
        bi = int64(0)
        w = int64(_popcount(acc_a | acc_b))
        hist[blk, w] += 1
        if 0 < w:
            bw = w
            bi = start
        i = start + 1
        end = start + bsize
        while i < end:
            # gray(i) ^ gray(i-1) flips exactly bit ctz(i); within a block
            # ctz(i) stays below the block-size exponent
            t = 0
            ii = i
            while ii & 1 == 0:
                ii >>= 1
                t += 1
            acc_a ^= rows_a[t]
            acc_b ^= rows_b[t]
            w = int64(_popcount(acc_a | acc_b))
            hist[blk, w] += 1
            if w < bw and w > 0:
                bw = w
                bi = i
            i += 1
        best_w[blk] = bw
        best_i[blk] = bi
    return hist, best_w, best_i


@njit(cache=True, nogil=True)
def _subset_scan(rows_a, rows_b, n, cap, early_exit_below):
    """Revolving-door scan of row subsets of size 1..cap.

    Returns (d, witness_mask, k_max, per_k_min, visited, aborted) where d
    is the lightest subset-sum weight seen (n+1 if nothing was scanned),
    witness_mask the row set achieving it, k_max the largest size fully
    enumerated, per_k_min[k] the lightest weight among size-k sums (-1
    where not scanned), and aborted is True when early_exit_below
    triggered a mid-scan return.
    """
    inf = int64(n + 1)
    d_star = inf
    witness = uint64(0)
    per_k = np.full(n + 1, -1, dtype=np.int64)
    visited = int64(0)
    k_max = int64(0)
    c = np.zeros(n + 2, dtype=np.int64)

    for k in range(1, n + 1):
        if k > cap or k > d_star:
            break
        # first combination {0, .., k-1}
        acc_a = uint64(0)
        acc_b = uint64(0)
        mask = uint64(0)
        for idx in range(k):
            c[idx] = idx
            acc_a ^= rows_a[idx]
            acc_b ^= rows_b[idx]
            mask |= uint64(1) << uint64(idx)
        c[k] = n  # sentinel
        k_min = inf
        w = int64(_popcount(acc_a | acc_b))
        visited += 1
        if w < k_min:
            k_min = w
        if w < d_star:
            d_star = w
            witness = mask
            if 0 < early_exit_below and w < early_exit_below:
                per_k[k] = k_min
                return d_star, witness, k_max, per_k, visited, True

        if k < n:
            while True:
                out = int64(-1)
                inn = int64(-1)
                j = int64(1)
                branch = 0  # 0: try decreasing c[j], 1: try increasing
                if k & 1:
                    if c[0] + 1 < c[1]:
                        out = c[0]
                        inn = c[0] + 1
                        c[0] = inn
                else:
                    if c[0] > 0:
                        out = c[0]
                        inn = c[0] - 1
                        c[0] = inn
                    else:
                        branch = 1
                if out < 0:
                    # walk j upward alternating decrease/increase attempts
                    while j < k:
                        if branch == 0:
                            if c[j] > j:
                                out = c[j]
                                inn = j - 1
                                c[j] = c[j - 1]
                                c[j - 1] = inn
                                break
                            branch = 1
                        else:
                            if c[j] + 1 < c[j + 1]:
                                out = c[j - 1]
                                inn = c[j] + 1
                                c[j - 1] = c[j]
                                c[j] = inn
                                break
                            branch = 0
                        j += 1
                    if out < 0:
                        break  # size-k enumeration exhausted
                acc_a ^= rows_a[out] ^ rows_a[inn]
                acc_b ^= rows_b[out] ^ rows_b[inn]
                mask ^= (uint64(1) << uint64(out)) | (uint64(1) << uint64(inn))
                w = int64(_popcount(acc_a | acc_b))
                visited += 1
                if w < k_min:
                    k_min = w
                if w < d_star:
                    d_star = w
                    witness = mask
                    if 0 < early_exit_below and w < early_exit_below:
                        per_k[k] = k_min
                        return d_star, witness, k_max, per_k, visited, True
        per_k[k] = k_min
        k_max = k
    return d_star, witness, k_max, per_k, visited, False


def _pack_rows(rows) -> tuple:
    ra = np.array([w.plane_a for w in rows], dtype=np.uint64)
    rb = np.array([w.plane_b for w in rows], dtype=np.uint64)
    return ra, rb


def default_block_exponent(n: int) -> int:
    """Contiguous-block split used unless the caller overrides it."""
    return 0 if n < 18 else min(12, n - 16)


def gray_scan(rows, log2_blocks: int | None = None) -> tuple:
    """Full traversal of all 2^n subset sums of the given BitplaneWords.

    Returns (counts, best_weight, best_mask): the exact weight histogram
    as a list of n+1 ints, the smallest nonzero weight, and the row-subset
    bitmask of the first (lowest Gray index) word achieving it.  The block
    split never changes the result, only the work partitioning.
    """
    n = rows[0].n
    if log2_blocks is None:
        log2_blocks = default_block_exponent(n)
    if not 0 <= log2_blocks <= n:
        raise ValueError(f"log2_blocks must be in 0..{n}, got {log2_blocks}")
    ra, rb = _pack_rows(rows)
    hist, best_w, best_i = _gray_scan_blocks(ra, rb, n, log2_blocks)
    counts = [int(x) for x in hist.sum(axis=0)]
    w, i = min(zip(best_w.tolist(), best_i.tolist()))
    if w > n:
        return counts, None, None  # only the zero word exists (n = 0 cannot happen)
    mask = i ^ (i >> 1)
    return counts, int(w), int(mask)


def subset_scan(rows, cap: int, early_exit_below: int = 0) -> dict:
    """Bounded-size subset scan; see :func:`_subset_scan` for the contract."""
    n = rows[0].n
    ra, rb = _pack_rows(rows)
    d, witness, k_max, per_k, visited, aborted = _subset_scan(
        ra, rb, n, cap, early_exit_below
    )
    return {
        "d": int(d),
        "witness_mask": int(witness),
        "k_max": int(k_max),
        "per_k_min": [int(x) for x in per_k],
        "visited": int(visited),
        "aborted": bool(aborted),
    }


def warmup() -> None:
    """Force-compile the kernels on a toy instance (JIT cache priming)."""
    ra = np.array([1, 2], dtype=np.uint64)
    rb = np.array([2, 1], dtype=np.uint64)
    _gray_scan_blocks(ra, rb, 2, 1)
    _subset_scan(ra, rb, 2, 2, 0)
