"""Standard and Kronecker inner products, dual codes, MacWilliams transform.

The Kronecker inner product of length ``N = 2^i`` weighs coordinate ``j``
by ``3^popcount(j) mod 4``, the diagonal of the i-fold Kronecker power of
``diag(1, 3)``.  Since that diagonal squares to all-ones, the Kronecker dual
is the standard dual multiplied coordinatewise by the diagonal.
"""
import enum
from functools import lru_cache

import numpy as np

from . import howell
from .code import DEFAULT_CAP, QuaternaryCode, lee_weight_distribution
from .ring import LengthMismatch, as_z4


class InnerProduct(enum.Enum):
    STANDARD = "standard"
    KRONECKER = "kronecker"


def _kind(kind):
    return kind if isinstance(kind, InnerProduct) else InnerProduct(kind)


def _pair(u, v):
    u, v = as_z4(u), as_z4(v)
    if len(u) != len(v):
        raise LengthMismatch(f"length {len(u)} != length {len(v)}")
    return u.astype(np.int64), v.astype(np.int64)


def standard_inner(u, v):
    u, v = _pair(u, v)
    return int((u * v).sum() % 4)


def _is_power_of_two(n):
    return n >= 1 and n & (n - 1) == 0


@lru_cache(maxsize=None)
def _diag(n):
    if not _is_power_of_two(n):
        raise ValueError(f"Kronecker inner product needs a power-of-two length, got {n}")
    d = np.array([1 if bin(j).count("1") % 2 == 0 else 3 for j in range(n)], dtype=np.uint8)
    d.flags.writeable = False
    return d


def kronecker_diagonal(n):
    """Diagonal of ``K_N``; ``N = 1`` gives ``(1,)``."""
    return _diag(n)


def kronecker_inner(u, v):
    u, v = _pair(u, v)
    d = _diag(len(u)).astype(np.int64)
    return int((u * d * v).sum() % 4)


def inner(u, v, kind=InnerProduct.STANDARD):
    if _kind(kind) is InnerProduct.KRONECKER:
        return kronecker_inner(u, v)
    return standard_inner(u, v)


def dual_code(code, kind=InnerProduct.STANDARD):
    """Dual of ``code`` under the chosen inner product."""
    kind = _kind(kind)
    if kind is InnerProduct.KRONECKER:
        d = _diag(code.n).astype(np.int64)
    k = howell.kernel(code.rows, code.n)
    if kind is InnerProduct.KRONECKER:
        k = (k * d) % 4
    return QuaternaryCode(k, code.n)


def _log4_twice(code):
    return code.gamma + 2 * code.delta


def verify_dual_pair(a, b, kind=InnerProduct.STANDARD):
    """Generator-wise orthogonality plus ``|a| * |b| = 4^N``."""
    if a.n != b.n:
        raise LengthMismatch(f"code lengths differ: {a.n} vs {b.n}")
    if _log4_twice(a) + _log4_twice(b) != 2 * a.n:
        return False
    ga = a.rows.astype(np.int64)
    gb = b.rows.astype(np.int64)
    if _kind(kind) is InnerProduct.KRONECKER:
        gb = gb * _diag(a.n).astype(np.int64)
    return not ((ga @ gb.T) % 4).any()


def macwilliams_transform(counts, n):
    """Lee weight distribution of the dual from that of the code.

    ``counts[w]`` codewords of Lee weight ``w`` contribute
    ``(x+y)^(2n-w) (x-y)^w``; the result is divided by the code size.
    Exact integer arithmetic.
    """
    counts = [int(c) for c in counts]
    size = sum(counts)
    total = [0] * (2 * n + 1)
    for w, a in enumerate(counts):
        if not a:
            continue
        poly = _binomial_product(2 * n - w, w)
        for j, c in enumerate(poly):
            total[j] += a * c
    out = []
    for t in total:
        q, rem = divmod(t, size)
        if rem:
            raise ArithmeticError("distribution is not that of a linear code")
        out.append(q)
    return np.array(out, dtype=object)


@lru_cache(maxsize=None)
def _binomial_product(p, q):
    """Coefficients of y^j in (x+y)^p (x-y)^q."""
    from math import comb
    a = [comb(p, i) for i in range(p + 1)]
    b = [comb(q, i) * (-1) ** i for i in range(q + 1)]
    out = [0] * (p + q + 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def macwilliams_check(code, kind=InnerProduct.STANDARD, cap=DEFAULT_CAP):
    """Enumerated dual distribution equals the transformed one, and the
    standard and Kronecker duals share their distribution."""
    dist = lee_weight_distribution(code, cap)
    predicted = macwilliams_transform(dist, code.n)
    dual = dual_code(code, kind)
    got = lee_weight_distribution(dual, cap)
    if [int(x) for x in got] != [int(x) for x in predicted]:
        return False
    other = InnerProduct.STANDARD if _kind(kind) is InnerProduct.KRONECKER else InnerProduct.KRONECKER
    if other is InnerProduct.KRONECKER and not _is_power_of_two(code.n):
        return True
    alt = lee_weight_distribution(dual_code(code, other), cap)
    return bool((alt == got).all())


def standard_dual_family_code(code):
    """Code generated by ``G * K_N`` (coordinatewise by the diagonal)."""
    d = _diag(code.n).astype(np.int64)
    return QuaternaryCode((code.rows.astype(np.int64) * d) % 4, code.n)
