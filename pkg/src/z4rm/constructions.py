"""Plotkin-type constructions of quaternary linear codes.

Every construction stacks the generator matrices of its inputs as stored on
the input codes, so the result carries the block matrix itself (not a
canonical form).  The BQ-Plotkin construction depends on that matrix through
:func:`gen_prime` and :func:`gen_hat`.
"""
import numpy as np

from .code import QuaternaryCode
from .ring import LengthMismatch


def _common_length(*codes):
    n = codes[0].n
    for c in codes[1:]:
        if c.n != n:
            raise LengthMismatch(f"input codes have lengths {[c.n for c in codes]}")
    return n


def _blocks(n, *block_rows):
    """Assemble a block matrix; each block is an int array or ``0``."""
    out = []
    for blocks in block_rows:
        height = next(b.shape[0] for b in blocks if not isinstance(b, int))
        row = [np.zeros((height, n), dtype=np.int64) if isinstance(b, int) else b
               for b in blocks]
        out.append(np.concatenate(row, axis=1))
    width = n * len(block_rows[0])
    return np.concatenate(out).reshape(-1, width) % 4


def _g(code):
    return code.rows.astype(np.int64)


def is_order_two_row(row):
    return not (np.asarray(row) & 1).any()


def _as_rows(rows):
    g = np.array(rows, dtype=np.int64)
    return g.reshape(1, -1) if g.ndim == 1 else g


def gen_prime(rows):
    """Replace every entry 2 by 1 in the order-two rows; keep the others."""
    g = _as_rows(rows)
    out = g.copy()
    for i, row in enumerate(g):
        if is_order_two_row(row):
            out[i] = row // 2
    return out


def gen_hat(rows):
    """Drop the order-two rows."""
    g = _as_rows(rows)
    keep = [i for i, row in enumerate(g) if not is_order_two_row(row)]
    return g[keep]


def plotkin(a, b):
    """``{(u1 | u1+u2) : u1 in a, u2 in b}``."""
    n = _common_length(a, b)
    ga, gb = _g(a), _g(b)
    return QuaternaryCode(_blocks(n, [ga, ga], [0, gb]), 2 * n)


def quaternary_plotkin(a, b):
    """``{(u1 | u1+u2 | u1+2u2 | u1+3u2)}``."""
    n = _common_length(a, b)
    ga, gb = _g(a), _g(b)
    return QuaternaryCode(_blocks(n, [ga, ga, ga, ga], [0, gb, 2 * gb, 3 * gb]), 4 * n)


def double_plotkin(a, b, c, d):
    n = _common_length(a, b, c, d)
    ga, gb, gc, gd = _g(a), _g(b), _g(c), _g(d)
    m = _blocks(n, [ga, ga, ga, ga], [0, gb, 2 * gb, 3 * gb], [0, 0, gc, gc], [0, 0, 0, gd])
    return QuaternaryCode(m, 4 * n)


def bq_plotkin(a, b, c):
    """BQ-Plotkin construction; the middle code enters through its
    primed and hatted matrices."""
    n = _common_length(a, b, c)
    ga, gc = _g(a), _g(c)
    gp, gh = gen_prime(_g(b)), gen_hat(_g(b))
    m = _blocks(
        n,
        [ga, ga, ga, ga],
        [0, gp, 2 * gp, 3 * gp],
        [0, 0, gh, gh],
        [0, 0, 0, gc],
    )
    return QuaternaryCode(m, 4 * n)
