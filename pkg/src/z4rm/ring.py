"""Arithmetic over Z4 and Z2, the Gray map and the Lee/Hamming weights.

Vectors are plain numpy ``uint8`` arrays marked read-only, so they can be
shared freely between codes and enumeration routines.
"""
import numpy as np

# Lee weight and Gray image per Z4 symbol.
LEE_WEIGHT = np.array([0, 1, 2, 1], dtype=np.int64)
GRAY_TABLE = np.array([[0, 0], [0, 1], [1, 1], [1, 0]], dtype=np.uint8)


class LengthMismatch(ValueError):
    """Raised when two operands do not share a common length."""


def _frozen(a):
    a.flags.writeable = False
    return a


def as_z4(v):
    """Validate ``v`` as a vector over Z4 and return a read-only copy."""
    a = np.array(v, dtype=np.int64).reshape(-1)
    if a.size and (a.min() < 0 or a.max() > 3):
        raise ValueError(f"entries must lie in {{0,1,2,3}}, got {v!r}")
    return _frozen(a.astype(np.uint8))


def as_z2(b):
    a = np.array(b, dtype=np.int64).reshape(-1)
    if a.size and (a.min() < 0 or a.max() > 1):
        raise ValueError(f"entries must lie in {{0,1}}, got {b!r}")
    return _frozen(a.astype(np.uint8))


def zeros(n):
    return _frozen(np.zeros(n, dtype=np.uint8))


def _check_lengths(u, v):
    if len(u) != len(v):
        raise LengthMismatch(f"length {len(u)} != length {len(v)}")


def vec_add(u, v):
    u, v = as_z4(u), as_z4(v)
    _check_lengths(u, v)
    return _frozen((u + v) % 4)


def vec_neg(v):
    v = as_z4(v)
    return _frozen((4 - v.astype(np.int64)).astype(np.uint8) % 4)


def vec_sub(u, v):
    return vec_add(u, vec_neg(v))


def scalar_mul(c, v):
    if c not in (0, 1, 2, 3):
        raise ValueError(f"scalar must lie in {{0,1,2,3}}, got {c!r}")
    v = as_z4(v)
    return _frozen(((c * v.astype(np.int64)) % 4).astype(np.uint8))


def lee_weight(v):
    return int(LEE_WEIGHT[as_z4(v)].sum())


def lee_distance(u, v):
    return lee_weight(vec_sub(u, v))


def gray_map(v):
    """Coordinate ``i`` of ``v`` becomes bits ``2i, 2i+1``."""
    return _frozen(GRAY_TABLE[as_z4(v)].reshape(-1))


def hamming_weight(b):
    return int(as_z2(b).sum())


def gray_map_rows(words):
    """Vectorised Gray map for a 2-D array of Z4 words."""
    words = np.asarray(words, dtype=np.uint8)
    return GRAY_TABLE[words].reshape(words.shape[0], -1)


def lee_weights_rows(words):
    return LEE_WEIGHT[np.asarray(words, dtype=np.uint8)].sum(axis=1)
