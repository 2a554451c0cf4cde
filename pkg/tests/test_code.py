import itertools

import numpy as np
import pytest

import oracles
from z4rm.code import (CapExceeded, Q4CodeFormatError, QuaternaryCode, ZeroCodeError,
                       code_type, codes_equal, codeword_array, contains, dumps,
                       enumerate_codewords, is_subcode, lee_weight_distribution, loads,
                       min_lee_distance, read_code, write_code)
from z4rm.family import family_indices, rm_code
from z4rm.ring import LengthMismatch

RM0_12 = QuaternaryCode([(0, 2), (1, 1)])
RM0_02 = QuaternaryCode([(2, 2)])
RM1_13 = QuaternaryCode([(1, 1, 1, 1), (0, 1, 2, 3)])
RM1_23 = QuaternaryCode([(0, 0, 0, 2), (1, 1, 1, 1), (0, 1, 2, 3), (0, 0, 1, 1)])
ZERO4 = QuaternaryCode(np.zeros((0, 4), dtype=int), 4)
WHOLE2 = QuaternaryCode(np.eye(2, dtype=int))


def family_codes(max_m):
    for m in range(1, max_m + 1):
        for s in family_indices(m):
            for r in range(-1, m + 1):
                yield (s, r, m), rm_code(s, r, m)


def as_set(words):
    return {tuple(int(x) for x in w) for w in words}


def test_howell_examples():
    c = QuaternaryCode([(2, 2), (1, 1)])
    assert code_type(c) == (2, 0, 1)
    assert as_set(enumerate_codewords(c)) == oracles.span([(2, 2), (1, 1)], 2)
    assert len(oracles.span([(1, 1)], 2)) == 4
    assert code_type(QuaternaryCode([(0, 0)])) == (2, 0, 0)
    assert code_type(RM0_12) == (2, 1, 1)


def test_code_type_examples():
    assert code_type(QuaternaryCode([(2,)])) == (1, 1, 0)
    assert code_type(QuaternaryCode([(1,)])) == (1, 0, 1)
    assert code_type(RM1_23) == (4, 1, 3)


def test_generator_layout_order_two_first():
    g = RM0_12.generator_matrix
    assert g.tolist() == [[0, 2], [1, 1]]


def test_contains_examples():
    for s in (0, 1):
        assert contains(rm_code(s, 2, 3), (2, 2, 2, 2))
    assert contains(RM1_23, (0, 0, 0, 0))
    assert (1, 0, 0, 0) not in oracles.span(RM1_13.rows, 4)
    assert not contains(RM1_13, (1, 0, 0, 0))
    with pytest.raises(LengthMismatch):
        contains(RM1_13, (1, 0))


def test_is_subcode_examples():
    assert is_subcode(RM0_02, RM0_12)
    assert is_subcode(RM1_23, RM1_23)
    assert not is_subcode(RM1_13, rm_code(1, 0, 3))
    with pytest.raises(LengthMismatch):
        is_subcode(RM0_02, RM1_13)


def test_enumerate_examples():
    assert as_set(enumerate_codewords(ZERO4)) == {(0, 0, 0, 0)}
    assert as_set(enumerate_codewords(RM0_02)) == {(0, 0), (2, 2)}
    assert len(list(enumerate_codewords(RM1_13))) == 16


def test_enumeration_order_is_lexicographic_in_coefficients():
    words = [tuple(int(x) for x in w) for w in enumerate_codewords(RM0_12)]
    expected = [tuple((a * 2 * np.array([0, 1]) + b * np.array([1, 1])) % 4)
                for a in range(2) for b in range(4)]
    assert words == [tuple(int(x) for x in e) for e in expected]
    assert words == [tuple(int(x) for x in w) for w in codeword_array(RM0_12)]


def test_enumeration_cap():
    with pytest.raises(CapExceeded, match="16"):
        list(enumerate_codewords(RM1_13, cap=8))
    with pytest.raises(CapExceeded):
        lee_weight_distribution(RM1_13, cap=8)


def test_min_lee_distance_examples(backend):
    assert min_lee_distance(RM0_02) == 4
    assert min_lee_distance(WHOLE2) == 1
    assert min_lee_distance(RM1_13) == oracles.min_distance(oracles.span(RM1_13.rows, 4)) == 4
    with pytest.raises(ZeroCodeError):
        min_lee_distance(ZERO4)


def test_min_lee_distance_shortcuts_skip_enumeration():
    assert min_lee_distance(QuaternaryCode(np.eye(16, dtype=int)), cap=1) == 1
    assert min_lee_distance(rm_code(0, 5, 6), cap=1) == 2
    with pytest.raises(CapExceeded):
        min_lee_distance(rm_code(0, 2, 5), cap=1024)


def test_lee_weight_distribution_examples(backend):
    assert lee_weight_distribution(RM0_02).tolist() == [1, 0, 0, 0, 1]
    assert lee_weight_distribution(ZERO4).tolist() == [1] + [0] * 8
    assert lee_weight_distribution(RM0_12).sum() == 8


def test_codes_equal_examples():
    assert codes_equal(QuaternaryCode([(2, 2), (1, 1)]), QuaternaryCode([(1, 1)]))
    assert not codes_equal(RM0_02, RM0_12)
    assert codes_equal(RM1_23, QuaternaryCode(RM1_23.rows[::-1]))


def test_size_law_and_distribution(backend):
    for idx, c in family_codes(4):
        dist = lee_weight_distribution(c)
        assert dist.sum() == c.size == 2 ** (c.gamma + 2 * c.delta)
        assert dist[0] == 1
        if not c.is_zero():
            assert min_lee_distance(c) == int(np.flatnonzero(dist[1:])[0]) + 1


def test_distribution_matches_oracle(backend):
    for idx, c in family_codes(3):
        assert lee_weight_distribution(c).tolist() == oracles.distribution(
            oracles.span(c.rows, c.n), c.n)


def test_closure(rng):
    c = rm_code(1, 2, 4)
    words = codeword_array(c)
    for _ in range(1000):
        u, v = words[rng.integers(len(words))], words[rng.integers(len(words))]
        assert contains(c, (u.astype(int) + v) % 4)
        for k in range(4):
            assert contains(c, (k * u.astype(int)) % 4)


def test_canonical_form_preserves_span():
    for idx, c in family_codes(3):
        raw = oracles.span(c.rows, c.n)
        assert as_set(enumerate_codewords(c)) == raw
        assert oracles.span(c.howell, c.n) == raw
        assert (QuaternaryCode(c.howell, c.n).howell == c.howell).all()


def test_codes_equal_is_set_equality(rng):
    codes = [c for _, c in family_codes(3) if c.n == 4]
    codes += [QuaternaryCode(rng.integers(0, 4, (int(rng.integers(0, 3)), 4)), 4)
              for _ in range(25)]
    sets = [as_set(codeword_array(c)) for c in codes]
    for (a, sa), (b, sb) in itertools.product(zip(codes, sets), repeat=2):
        assert codes_equal(a, b) == (sa == sb)


# --- Q4CODE ---------------------------------------------------------------

def test_q4code_text_is_bit_exact():
    assert dumps(RM1_23) == "Q4CODE v1\nN=4 GAMMA=1 DELTA=3\n0002\n1001\n0101\n0011\n"
    assert dumps(ZERO4) == "Q4CODE v1\nN=4 GAMMA=0 DELTA=0\n"


def test_q4code_round_trip(tmp_path):
    for idx, c in family_codes(4):
        path = tmp_path / "c.q4"
        write_code(c, path)
        back = read_code(path)
        assert code_type(back) == code_type(c)
        assert codes_equal(back, c)
        assert dumps(back) == dumps(c)
        raw = path.read_bytes()
        assert b"\r" not in raw and not any(line.endswith(b" ") for line in raw.split(b"\n"))


@pytest.mark.parametrize("text", [
    "",
    "Q4CODE v2\nN=1 GAMMA=0 DELTA=1\n1\n",
    "Q4CODE v1\nN=2 GAMMA=0\n",
    "Q4CODE v1\nN=2 GAMMA=0 DELTA=1\n",
    "Q4CODE v1\nN=2 GAMMA=0 DELTA=1\n14\n",
    "Q4CODE v1\nN=2 GAMMA=0 DELTA=1\n1\n",
    "Q4CODE v1\nN=2 GAMMA=1 DELTA=0\n11\n",
])
def test_q4code_rejects_malformed(text):
    with pytest.raises(Q4CodeFormatError):
        loads(text)
