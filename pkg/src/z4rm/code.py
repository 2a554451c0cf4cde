"""Quaternary linear codes given by generator matrices.

A :class:`QuaternaryCode` keeps the rows it was built from (constructions
depend on that exact matrix) and derives everything else lazily from the
Howell form of their span: the type ``(N; gamma, delta)``, membership, a
canonical minimal generator matrix and the Q4CODE text serialisation.
"""
from functools import cached_property
import itertools

import numpy as np

from . import howell, kernels
from .ring import LengthMismatch, LEE_WEIGHT, as_z4

DEFAULT_CAP = 2 ** 26


class CapExceeded(RuntimeError):
    """Raised when exhaustive enumeration would exceed the configured cap."""

    def __init__(self, required, cap):
        super().__init__(
            f"enumeration needs {required} codewords (cap={required} or larger), "
            f"configured cap is {cap}"
        )
        self.required = required
        self.cap = cap


class ZeroCodeError(ValueError):
    """Raised when a nonzero codeword is required but the code is {0}."""


class Q4CodeFormatError(ValueError):
    pass


class QuaternaryCode:
    """Row span over Z4 of a generator matrix.

    ``rows`` is kept exactly as given (reduced mod 4); an empty matrix with
    explicit ``n`` is the zero code.
    """

    def __init__(self, rows, n=None):
        a = np.array(rows, dtype=np.int64)
        if a.size == 0:
            if n is None:
                if a.ndim != 2:
                    raise ValueError("the zero code needs an explicit length")
                n = a.shape[1]
            a = np.zeros((0, n), dtype=np.int64)
        elif a.ndim == 1:
            a = a.reshape(1, -1)
        if n is not None and a.shape[1] != n:
            raise LengthMismatch(f"rows have length {a.shape[1]}, expected {n}")
        if a.size and (a.min() < 0 or a.max() > 3):
            raise ValueError("generator entries must lie in {0,1,2,3}")
        a = a.astype(np.uint8)
        a.flags.writeable = False
        self.rows = a
        self.n = a.shape[1]

    def __repr__(self):
        return f"QuaternaryCode(N={self.n}, gamma={self.gamma}, delta={self.delta})"

    @cached_property
    def howell(self):
        h = howell.howell_form(self.rows, self.n)
        h.flags.writeable = False
        return h

    @cached_property
    def _pivots(self):
        return howell.pivots_of(self.howell)

    @cached_property
    def _type(self):
        delta = howell.binary_rank(self.howell)
        gamma = howell.log2_span_size(self.howell) - 2 * delta
        return gamma, delta

    @property
    def gamma(self):
        return self._type[0]

    @property
    def delta(self):
        return self._type[1]

    @property
    def log2_size(self):
        return self.gamma + 2 * self.delta

    @property
    def size(self):
        return 2 ** self.log2_size

    @cached_property
    def _minimal(self):
        two, four = howell.minimal_generators(self.howell)
        two, four = two.astype(np.uint8), four.astype(np.uint8)
        two.flags.writeable = False
        four.flags.writeable = False
        return two, four

    @property
    def order_two_generators(self):
        return self._minimal[0]

    @property
    def order_four_generators(self):
        return self._minimal[1]

    @property
    def generator_matrix(self):
        """Canonical minimal generator matrix, order-two rows first."""
        two, four = self._minimal
        return np.concatenate([two, four]).reshape(-1, self.n)

    @cached_property
    def binary_generators(self):
        """Rows whose 0/1 combinations list every codeword exactly once."""
        two, four = self._minimal
        g = np.concatenate([two, four, (2 * four.astype(np.int64)) % 4])
        return np.ascontiguousarray(g.reshape(-1, self.n), dtype=np.uint8)

    def is_zero(self):
        return self.howell.shape[0] == 0

    def is_whole_space(self):
        return self.gamma == 0 and self.delta == self.n

    def is_even_code(self):
        """Index-2 subcode of Z4^N made of even-Lee-weight words."""
        if self.log2_size != 2 * self.n - 1:
            return False
        return all(LEE_WEIGHT[g].sum() % 2 == 0 for g in self.generator_matrix)

    def __contains__(self, v):
        return contains(self, v)


def code_type(code):
    """``(N, gamma, delta)`` of ``code``."""
    return code.n, code.gamma, code.delta


def contains(code, v):
    v = as_z4(v)
    if len(v) != code.n:
        raise LengthMismatch(f"vector of length {len(v)} vs code length {code.n}")
    return not howell.reduce_vector(code.howell, v, code._pivots).any()


def _check_same_length(a, b):
    if a.n != b.n:
        raise LengthMismatch(f"code lengths differ: {a.n} vs {b.n}")


def is_subcode(a, b):
    """True iff every generator of ``a`` lies in ``b``."""
    _check_same_length(a, b)
    return all(contains(b, row) for row in a.rows)


def codes_equal(a, b):
    _check_same_length(a, b)
    return a.howell.shape == b.howell.shape and bool((a.howell == b.howell).all())


def _check_cap(code, cap):
    if cap is not None and code.size > cap:
        raise CapExceeded(code.size, cap)


def codeword_array(code, cap=DEFAULT_CAP):
    """All codewords as a ``(|C|, N)`` uint8 array, in enumeration order."""
    _check_cap(code, cap)
    gens = code.generator_matrix.astype(np.int64)
    ranges = [2] * code.gamma + [4] * code.delta
    if not ranges:
        return np.zeros((1, code.n), dtype=np.uint8)
    coeffs = np.stack(np.meshgrid(*[np.arange(r) for r in ranges], indexing="ij"), -1)
    coeffs = coeffs.reshape(-1, len(ranges))
    return ((coeffs @ gens) % 4).astype(np.uint8)


def enumerate_codewords(code, cap=DEFAULT_CAP):
    """Yield every codeword once, in lexicographic order of coefficient tuples.

    Order-two generators take coefficients in {0,1}, order-four generators in
    {0,1,2,3}; the first generator's coefficient is the most significant.
    """
    _check_cap(code, cap)
    gens = code.generator_matrix.astype(np.int64)
    ranges = [range(2)] * code.gamma + [range(4)] * code.delta
    for coeffs in itertools.product(*ranges):
        w = (np.array(coeffs, dtype=np.int64) @ gens) % 4 if coeffs else np.zeros(code.n, np.int64)
        w = w.astype(np.uint8)
        w.flags.writeable = False
        yield w


def lee_weight_distribution(code, cap=DEFAULT_CAP):
    """Counts of codewords by Lee weight ``0..2N``."""
    _check_cap(code, cap)
    return kernels.lee_distribution(code.binary_generators, code.n)


def min_lee_distance(code, cap=DEFAULT_CAP):
    """Minimum Lee weight over nonzero codewords.

    The whole space and the even code are answered from their structure;
    everything else is enumerated and must fit within ``cap``.
    """
    if code.is_zero():
        raise ZeroCodeError("the zero code has no nonzero codeword")
    if code.is_whole_space():
        return 1
    if code.is_even_code():
        return 2
    dist = lee_weight_distribution(code, cap)
    return int(np.flatnonzero(dist[1:])[0]) + 1


# --- Q4CODE v1 -------------------------------------------------------------

def dumps(code):
    lines = ["Q4CODE v1", f"N={code.n} GAMMA={code.gamma} DELTA={code.delta}"]
    lines += ["".join(str(int(x)) for x in row) for row in code.generator_matrix]
    return "\n".join(lines) + "\n"


def loads(text):
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != "Q4CODE v1":
        raise Q4CodeFormatError("missing 'Q4CODE v1' header")
    if len(lines) < 2:
        raise Q4CodeFormatError("missing parameter line")
    try:
        fields = dict(item.split("=", 1) for item in lines[1].split(" "))
        n, gamma, delta = (int(fields[key]) for key in ("N", "GAMMA", "DELTA"))
    except (ValueError, KeyError):
        raise Q4CodeFormatError(f"bad parameter line: {lines[1]!r}") from None
    body = lines[2:]
    if len(body) != gamma + delta:
        raise Q4CodeFormatError(f"expected {gamma + delta} rows, found {len(body)}")
    rows = []
    for line in body:
        if len(line) != n or set(line) - set("0123"):
            raise Q4CodeFormatError(f"bad row {line!r}")
        rows.append([int(c) for c in line])
    code = QuaternaryCode(np.array(rows, dtype=np.int64).reshape(-1, n), n)
    if (code.gamma, code.delta) != (gamma, delta):
        raise Q4CodeFormatError(
            f"rows span a code of type ({code.gamma},{code.delta}), header says ({gamma},{delta})"
        )
    return code


def read_code(path):
    with open(path, encoding="ascii", newline="") as f:
        return loads(f.read())


def write_code(code, path):
    with open(path, "w", encoding="ascii", newline="\n") as f:
        f.write(dumps(code))
