"""Shared helpers: small-universe generators and brute-force oracles."""

from __future__ import annotations

import itertools

from convexcodes.core import (
    BitVector,
    Code,
    Density,
    Geometry,
    Regime,
    SensorMatrix,
    regime_check,
)


def all_words(k: int) -> list[str]:
    return ["".join(bits) for bits in itertools.product("01", repeat=k)]


def _mask_block_contiguous(mask: int) -> bool:
    if mask == 0:
        return True
    shifted = mask >> (mask & -mask).bit_length() - 1
    return shifted & (shifted + 1) == 0


def _rows_ok(perm: tuple[int, ...], k: int, circular: bool) -> bool:
    n = len(perm)
    rows = [0] * k
    for j, m in enumerate(perm):
        while m:
            i = (m & -m).bit_length() - 1
            rows[i] |= 1 << j
            m &= m - 1
    full = (1 << n) - 1
    for rm in rows:
        if _mask_block_contiguous(rm):
            continue
        if circular and _mask_block_contiguous(full ^ rm):
            continue
        return False
    return True


def brute_orderable(strings, regime: Regime) -> bool:
    """Try every column permutation; the reference for co/cco_order."""
    words = [BitVector.from_string(s) for s in strings]
    k = words[0].n if words else 0
    masks = [w.mask for w in words]
    circular = regime.geometry is Geometry.CIRCLE
    if regime.density is Density.SPARSE:
        for perm in itertools.permutations(masks):
            if _rows_ok(perm, k, circular):
                return True
        return False
    for perm in itertools.permutations(words):
        m = SensorMatrix.from_columns(perm, regime.geometry)
        if regime_check(m, regime):
            return True
    return False


def brute_dense_multiordering(words: Code, max_len: int) -> bool:
    """Does any column sequence of length <= max_len with support equal to
    words form an HCO matrix?"""
    ws = list(words.words)
    dense = Regime(Geometry.LINE, Density.DENSE)
    for length in range(len(ws), max_len + 1):
        for seq in itertools.product(ws, repeat=length):
            if set(seq) != set(ws):
                continue
            m = SensorMatrix.from_columns(seq, Geometry.LINE)
            if regime_check(m, dense):
                return True
    return False


def brute_multiset_orderable(ms, regime: Regime) -> bool:
    pool = []
    for w, mult in ms.entries.items():
        pool.extend([w] * mult)
    for perm in set(itertools.permutations(pool)):
        m = SensorMatrix.from_columns(perm, regime.geometry)
        if regime_check(m, regime):
            return True
    return False
