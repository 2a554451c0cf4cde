# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel.

Words are bit-sliced: coordinate i of a Z4 word lives in bit i of a low
plane and a high plane (value = lo + 2*hi), packed 64 coordinates per
uint64.  Codewords are visited in binary-reflected Gray-code order over the
binary coefficient vector, so every step adds or subtracts one generator.
"""
import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef void _pack(const unsigned char[:, ::1] rows, uint64_t[:, ::1] lo,
                uint64_t[:, ::1] hi, bint negate):
    cdef Py_ssize_t i, j
    cdef unsigned char v
    for i in range(rows.shape[0]):
        for j in range(rows.shape[1]):
            v = rows[i, j] & 3
            if negate:
                v = (4 - v) & 3
            if v & 1:
                lo[i, j >> 6] |= (<uint64_t>1) << (j & 63)
            if v & 2:
                hi[i, j >> 6] |= (<uint64_t>1) << (j & 63)


def lee_distribution(const unsigned char[:, ::1] gens, Py_ssize_t n):
    """Lee weight counts (length 2n+1) of all 0/1 combinations of ``gens``.

    The rows of ``gens`` must be such that distinct coefficient vectors give
    distinct words; each codeword is then counted exactly once.
    """
    cdef Py_ssize_t k = gens.shape[0]
    if k > 62:
        raise ValueError("too many generators for exhaustive enumeration")
    cdef Py_ssize_t nw = (n + 63) // 64 if n > 0 else 1
    cdef uint64_t[:, ::1] plo = np.zeros((max(k, 1), nw), dtype=np.uint64)
    cdef uint64_t[:, ::1] phi = np.zeros((max(k, 1), nw), dtype=np.uint64)
    cdef uint64_t[:, ::1] nlo = np.zeros((max(k, 1), nw), dtype=np.uint64)
    cdef uint64_t[:, ::1] nhi = np.zeros((max(k, 1), nw), dtype=np.uint64)
    if k:
        _pack(gens, plo, phi, False)
        _pack(gens, nlo, nhi, True)
    cdef uint64_t[::1] lo = np.zeros(nw, dtype=np.uint64)
    cdef uint64_t[::1] hi = np.zeros(nw, dtype=np.uint64)
    counts_arr = np.zeros(2 * n + 1, dtype=np.int64)
    cdef int64_t[::1] counts = counts_arr
    cdef uint64_t total = (<uint64_t>1) << k
    cdef uint64_t t, state = 0
    cdef uint64_t a, b, c, x, y
    cdef Py_ssize_t i, w
    cdef long weight
    counts[0] = 1
    with nogil:
        for t in range(1, total):
            i = __builtin_ctzll(t)
            weight = 0
            if (state >> i) & 1:
                for w in range(nw):
                    a = lo[w]; b = hi[w]
                    x = nlo[i, w]; y = nhi[i, w]
                    c = a & x
                    lo[w] = a ^ x
                    hi[w] = b ^ y ^ c
                    weight += __builtin_popcountll(lo[w]) + 2 * __builtin_popcountll(hi[w] & ~lo[w])
            else:
                for w in range(nw):
                    a = lo[w]; b = hi[w]
                    x = plo[i, w]; y = phi[i, w]
                    c = a & x
                    lo[w] = a ^ x
                    hi[w] = b ^ y ^ c
                    weight += __builtin_popcountll(lo[w]) + 2 * __builtin_popcountll(hi[w] & ~lo[w])
            state ^= (<uint64_t>1) << i
            counts[weight] += 1
    return counts_arr
