"""The quaternary Reed-Muller families RM_s(r, m).

For fixed ``m`` there are ``floor((m+1)/2)`` families, indexed by
``0 <= s <= floor((m-1)/2)``; code ``RM_s(r, m)`` has length ``2^(m-1)``.
Members are built recursively: by the Plotkin construction from
``RM_s(., m-1)``, except for odd ``m`` with ``s = (m-1)/2`` which uses the
BQ-Plotkin construction on ``RM_{s-1}(., m-2)``.
"""
from dataclasses import dataclass
from functools import lru_cache
from math import comb
import threading

import numpy as np

from .code import QuaternaryCode
from .constructions import bq_plotkin, plotkin


class InvalidIndex(ValueError):
    pass


@dataclass(frozen=True)
class RmIndex:
    s: int
    r: int
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise InvalidIndex(f"m must be >= 1, got m={self.m}")
        if not -1 <= self.r <= self.m:
            raise InvalidIndex(f"r must satisfy -1 <= r <= m={self.m}, got r={self.r}")
        top = (self.m - 1) // 2
        if not 0 <= self.s <= top:
            raise InvalidIndex(
                f"s must satisfy 0 <= s <= floor((m-1)/2)={top}, got s={self.s}"
            )

    @property
    def length(self):
        return 2 ** (self.m - 1)

    @property
    def uses_bq(self):
        """Whether this family is built with the BQ-Plotkin construction."""
        return self.m % 2 == 1 and self.m >= 3 and self.s == (self.m - 1) // 2


def family_indices(m):
    return range((m - 1) // 2 + 1)


def rm_dimension(r, m):
    """log2 of |RM_s(r, m)|."""
    return sum(comb(m, i) for i in range(r + 1))


_lock = threading.Lock()


def rm_code(s, r, m):
    """Build ``RM_s(r, m)``; results are memoised and shared."""
    idx = RmIndex(s, r, m)
    with _lock:
        return _build(idx.s, idx.r, idx.m)


@lru_cache(maxsize=None)
def _build(s, r, m):
    n = 2 ** (m - 1)
    if r == -1:
        return QuaternaryCode(np.zeros((0, n), dtype=np.int64), n)
    if r == 0:
        return QuaternaryCode(np.full((1, n), 2), n)
    if r == m:
        return QuaternaryCode(np.eye(n, dtype=np.int64), n)
    if RmIndex(s, r, m).uses_bq:
        if r == m - 1:
            top = _build(s - 1, m - 2, m - 2)
            return bq_plotkin(top, top, _build(s - 1, m - 3, m - 2))
        return bq_plotkin(
            _build(s - 1, r, m - 2),
            _build(s - 1, r - 1, m - 2),
            _build(s - 1, r - 2, m - 2),
        )
    return plotkin(_build(s, r, m - 1), _build(s, r - 1, m - 1))


def rm_table(m):
    """``(gamma, delta)`` of every ``RM_s(r, m)``, one list per ``s``,
    ``r = 0..m``."""
    return [[(rm_code(s, r, m).gamma, rm_code(s, r, m).delta) for r in range(m + 1)]
            for s in family_indices(m)]


@lru_cache(maxsize=None)
def _predicted(s, r, m):
    if r == -1:
        return 0, 0
    if r == 0:
        return 1, 0
    if r == m:
        return 0, 2 ** (m - 1)
    if RmIndex(s, r, m).uses_bq:
        if r == m - 1:
            a = b = _predicted(s - 1, m - 2, m - 2)
            c = _predicted(s - 1, m - 3, m - 2)
        else:
            a = _predicted(s - 1, r, m - 2)
            b = _predicted(s - 1, r - 1, m - 2)
            c = _predicted(s - 1, r - 2, m - 2)
        return a[0] + c[0], a[1] + b[0] + 2 * b[1] + c[1]
    a, b = _predicted(s, r, m - 1), _predicted(s, r - 1, m - 1)
    return a[0] + b[0], a[1] + b[1]


def rm_gamma_delta_predicted(s, r, m):
    """``(gamma, delta)`` from the construction recurrences alone."""
    idx = RmIndex(s, r, m)
    return _predicted(idx.s, idx.r, idx.m)


def format_table(table):
    return "\n".join(" ".join(f"({g},{d})" for g, d in row) for row in table) + "\n"
