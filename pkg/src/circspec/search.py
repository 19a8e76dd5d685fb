"""Exhaustive search over negation-closed symbol sets of prime-order circulants."""
from __future__ import annotations

import numpy as np

from . import kernels
from .graphs import SymbolSet
from .numtheory import is_prime

SEARCH_MAX_P = 31


def mask_to_symbol(p: int, mask: int) -> SymbolSet:
    """Bit b of mask selects the residue pair {b+1, p-b-1}."""
    h = (p - 1) // 2
    s = [r for b in range(h) if mask >> b & 1 for r in (b + 1, p - b - 1)]
    return SymbolSet(p, s)


def symbol_to_mask(sym: SymbolSet) -> int:
    h = (sym.n - 1) // 2
    return sum(1 << (r - 1) for r in sym.symbol if 1 <= r <= h)


def distinct_counts(p: int) -> np.ndarray:
    """Distinct-eigenvalue count for every nonempty pair mask 1 .. 2^h - 1 (index = mask - 1)."""
    if not is_prime(p) or p < 3:
        raise ValueError(f"need an odd prime, got {p}")
    if p > SEARCH_MAX_P:
        raise ValueError(f"p = {p} exceeds the search limit {SEARCH_MAX_P}")
    h = (p - 1) // 2
    masks = np.arange(1, 1 << h, dtype=np.int64)
    return kernels.prime_distinct_counts(p, masks)


def search_prime(p: int, distinct: int) -> list[SymbolSet]:
    """All nonempty symbol sets of G(p; S) with exactly `distinct` distinct eigenvalues."""
    counts = distinct_counts(p)
    hits = np.nonzero(counts == distinct)[0] + 1
    return sorted((mask_to_symbol(p, int(m)) for m in hits), key=lambda s: (len(s.symbol), s.symbol))
