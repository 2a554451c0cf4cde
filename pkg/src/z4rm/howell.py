"""Howell form and related linear algebra for row spans over Z4.

Row spans over Z4 have no unique echelon form; the Howell form fixes that by
normalising pivots to 1 or 2, reducing the entries above each pivot, and
adding ``2*row`` for every 2-pivot row so that the span of the rows below any
column contains every span element vanishing before that column.  With that
property in place, reduction of a vector against the form decides membership,
and the rows of ``[G^T | I]`` that vanish on the first block generate the
kernel of ``G``.
"""
import numpy as np


def _as_matrix(rows, n=None):
    a = np.array(rows, dtype=np.int64)
    if a.size == 0:
        if n is None:
            if a.ndim == 2:
                n = a.shape[1]
            else:
                raise ValueError("length must be given for an empty row set")
        return np.zeros((0, n), dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    if n is not None and a.shape[1] != n:
        raise ValueError(f"rows have length {a.shape[1]}, expected {n}")
    return a % 4


def howell_form(rows, n=None):
    """Return the Howell form of the Z4 row span of ``rows``.

    The result is an ``int64`` array whose rows have strictly increasing
    pivot columns; every pivot is 1 or 2, columns of 1-pivots are zero in
    all other rows, and entries above a 2-pivot are 0 or 1.  Zero rows are
    dropped.  Two row sets span the same module iff their Howell forms are
    identical.
    """
    a = _as_matrix(rows, n)
    n = a.shape[1]
    work = [r for r in a if r.any()]
    out = []
    pivots = []
    for col in range(n):
        if not work:
            break
        idx = next((i for i, r in enumerate(work) if r[col] & 1), None)
        if idx is not None:
            p = work.pop(idx)
            if p[col] == 3:
                p = (3 * p) % 4
            rest = []
            for r in work:
                if r[col]:
                    r = (r - r[col] * p) % 4
                if r.any():
                    rest.append(r)
            work = rest
            pivots.append((col, 1))
            out.append(p)
            continue
        idx = next((i for i, r in enumerate(work) if r[col] == 2), None)
        if idx is None:
            continue
        p = work.pop(idx)
        rest = []
        for r in work:
            if r[col]:
                r = (r - p) % 4
            if r.any():
                rest.append(r)
        doubled = (2 * p) % 4
        if doubled.any():
            rest.append(doubled)
        work = rest
        pivots.append((col, 2))
        out.append(p)

    # back-substitution: reduce entries above every pivot
    for i in range(len(out)):
        row = out[i]
        for k in range(i + 1, len(out)):
            col, piv = pivots[k]
            e = row[col]
            if piv == 1 and e:
                row = (row - e * out[k]) % 4
            elif piv == 2 and e >= 2:
                row = (row - out[k]) % 4
        out[i] = row
    if not out:
        return np.zeros((0, n), dtype=np.int64)
    return np.array(out, dtype=np.int64)


def pivots_of(h):
    """Pivot ``(column, value)`` pairs of a Howell form."""
    res = []
    for row in h:
        col = int(np.flatnonzero(row)[0])
        res.append((col, int(row[col])))
    return res


def reduce_vector(h, v, pivots=None):
    """Reduce ``v`` against the Howell form ``h``; zero residue means member."""
    v = np.array(v, dtype=np.int64) % 4
    if pivots is None:
        pivots = pivots_of(h)
    for (col, piv), row in zip(pivots, h):
        e = v[col]
        if piv == 1:
            if e:
                v = (v - e * row) % 4
        elif e >= 2:
            v = (v - row) % 4
    return v


def log2_span_size(h):
    """log2 of the number of elements spanned by a Howell form."""
    return sum(2 if piv == 1 else 1 for _, piv in pivots_of(h))


def kernel(g, n=None):
    """Howell form of ``{x in Z4^n : g x^T = 0}``."""
    g = _as_matrix(g, n)
    k, n = g.shape
    aug = np.concatenate([g.T % 4, np.eye(n, dtype=np.int64)], axis=1)
    h = howell_form(aug)
    keep = [row[k:] for row in h if not row[:k].any()]
    return howell_form(np.array(keep, dtype=np.int64).reshape(-1, n), n)


# --- binary helpers -------------------------------------------------------

def _bits(row):
    """Pack a 0/1 row into an int, coordinate 0 as the least significant bit."""
    v = 0
    for i in np.flatnonzero(row):
        v |= 1 << int(i)
    return v


class _Gf2Basis:
    """Incremental GF(2) elimination that remembers how each basis vector was
    combined from the inserted vectors."""

    def __init__(self):
        self.rows = {}  # leading bit -> (vector, combination mask)

    def express(self, v):
        """Return (residue, combination) of ``v`` against the basis."""
        combo = 0
        while v:
            lead = v.bit_length() - 1
            if lead not in self.rows:
                break
            bv, bc = self.rows[lead]
            v ^= bv
            combo ^= bc
        return v, combo

    def insert(self, v, label):
        """Insert ``v`` tagged with ``label``; False if it was dependent."""
        res, combo = self.express(v)
        if not res:
            return False
        self.rows[res.bit_length() - 1] = (res, combo ^ (1 << label))
        return True


def binary_rank(rows):
    basis = _Gf2Basis()
    return sum(basis.insert(_bits(np.asarray(r) % 2), i) for i, r in enumerate(rows))


def span_type(rows, n=None):
    """``(gamma, delta)`` of the Z4 span of ``rows``: the span is
    isomorphic to ``Z2^gamma x Z4^delta``."""
    h = howell_form(rows, n)
    delta = binary_rank(h)
    gamma = log2_span_size(h) - 2 * delta
    return gamma, delta


def minimal_generators(h):
    """Split a Howell form into a minimal generating set.

    Returns ``(order_two, order_four)``: ``delta`` rows containing an odd
    entry and ``gamma`` rows with all entries in {0, 2}, chosen
    deterministically from ``h``.  Since ``h`` is unique per span, so is the
    result.
    """
    h = np.asarray(h, dtype=np.int64)
    n = h.shape[1]
    odd = [r for r in h if (r & 1).any()]
    even = [r for r in h if not (r & 1).any()]

    basis = _Gf2Basis()
    four = []
    leftovers = []
    for r in odd:
        if basis.insert(_bits(r % 2), len(four)):
            four.append(r)
            continue
        # r differs from a combination of chosen rows by an order-two word
        _, combo = basis.express(_bits(r % 2))
        acc = np.zeros(n, dtype=np.int64)
        for i, g in enumerate(four):
            if combo >> i & 1:
                acc = acc + g
        leftovers.append((r - acc) % 4)

    two = []
    span = howell_form(np.array(four, dtype=np.int64).reshape(-1, n), n)
    piv = pivots_of(span)
    for r in even + leftovers:
        if reduce_vector(span, r, piv).any():
            two.append(r)
            span = howell_form(np.array(two + four, dtype=np.int64), n)
            piv = pivots_of(span)
    as_arr = lambda rs: np.array(rs, dtype=np.int64).reshape(-1, n)
    return as_arr(two), as_arr(four)
