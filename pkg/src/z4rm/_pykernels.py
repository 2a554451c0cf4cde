"""Pure-numpy fallback for the compiled enumeration kernel."""
import numpy as np

from .ring import LEE_WEIGHT

_BLOCK_BITS = 14


def _all_combinations(gens):
    """Every 0/1 combination of ``gens`` as rows, coefficient 0 varying fastest."""
    k, n = gens.shape
    words = np.zeros((1, n), dtype=np.uint8)
    for g in gens:
        words = np.concatenate([words, (words + g) & 3])
    return words


def lee_distribution(gens, n):
    gens = np.ascontiguousarray(gens, dtype=np.uint8)
    k = gens.shape[0] if gens.ndim == 2 else gens.size // max(n, 1)
    gens = gens.reshape(k, n)
    low = min(k, _BLOCK_BITS)
    table = _all_combinations(gens[:low])
    counts = np.zeros(2 * n + 1, dtype=np.int64)
    for prefix in _all_combinations(gens[low:]):
        w = LEE_WEIGHT[(table + prefix) & 3].sum(axis=1)
        counts += np.bincount(w, minlength=2 * n + 1)
    return counts
