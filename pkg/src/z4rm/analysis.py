"""Binary (Gray image) parameters of quaternary codes."""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .code import DEFAULT_CAP, CapExceeded, codeword_array, contains, min_lee_distance
from .howell import binary_rank
from .ring import gray_map_rows


@dataclass(frozen=True)
class GrayImageReport:
    n: int
    k: int
    d: Optional[int]  # None when the distance could not be enumerated
    is_linear: bool

    def lines(self):
        d = "unavailable" if self.d is None else str(self.d)
        return [f"n={self.n}", f"k={self.k}", f"d={d}",
                f"linear={'yes' if self.is_linear else 'no'}"]


def is_gray_image_linear(code):
    """Gray image is linear iff ``2 (u*v)`` lies in the code for all
    codewords; the obstruction is bilinear, so generator pairs suffice."""
    g = code.generator_matrix.astype(np.int64)
    for i in range(len(g)):
        for j in range(i, len(g)):
            if not contains(code, (2 * g[i] * g[j]) % 4):
                return False
    return True


def gray_image_is_linear_exhaustive(code, cap=2 ** 16):
    """Oracle: a binary set containing 0 is a subspace iff its size is
    ``2^rank``.  Materialises the whole Gray image."""
    words = gray_map_rows(codeword_array(code, cap))
    return 2 ** binary_rank(words) == len(words)


def gray_image_params(code, cap=DEFAULT_CAP):
    d = None
    if not code.is_zero():
        try:
            d = min_lee_distance(code, cap)
        except CapExceeded:
            d = None
    return GrayImageReport(2 * code.n, code.log2_size, d, is_gray_image_linear(code))


def hadamard_check(code, m, cap=DEFAULT_CAP):
    """Gray image has the ``(2^m, 2^(m+1), 2^(m-1))`` profile."""
    n = 2 * code.n
    if n != 2 ** m or code.log2_size != m + 1:
        return False
    return min_lee_distance(code, cap) == n // 2


def extended_perfect_check(code, m, cap=DEFAULT_CAP):
    """Gray image has the ``(2^m, 2^(2^m-m-1), 4)`` profile.

    For ``m = 1`` the profile is a single word; the zero code passes.
    """
    n = 2 * code.n
    if n != 2 ** m or code.log2_size != n - m - 1:
        return False
    if code.is_zero():
        return True
    return min_lee_distance(code, cap) == 4
