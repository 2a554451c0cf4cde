"""Family-wide invariant suite behind ``z4rm verify --family``."""
from .analysis import extended_perfect_check, hadamard_check
from .code import codes_equal, is_subcode, min_lee_distance
from .duality import InnerProduct, dual_code, macwilliams_check, verify_dual_pair
from .family import family_indices, rm_code, rm_dimension, rm_gamma_delta_predicted

DEFAULT_DISTANCE_CAP = 2 ** 20
EXTENDED_DISTANCE_CAP = 2 ** 26


def _members(m):
    for s in family_indices(m):
        for r in range(-1, m + 1):
            yield s, r, rm_code(s, r, m)


def check_types(m):
    return all((c.gamma, c.delta) == rm_gamma_delta_predicted(s, r, m)
               for s, r, c in _members(m))


def check_sizes(m):
    return all(c.log2_size == (rm_dimension(r, m) if r >= 0 else 0)
               and 2 * c.n == 2 ** m for s, r, c in _members(m))


def check_distance(m, cap):
    checked = skipped = 0
    for s, r, c in _members(m):
        if r < 0:
            continue
        if c.size > cap and not (c.is_whole_space() or c.is_even_code()):
            skipped += 1
            continue
        if min_lee_distance(c, cap) != 2 ** (m - r):
            return False, f"RM_{s}({r},{m})"
        checked += 1
    return True, f"{checked} checked, {skipped} above cap"


def check_inclusions(m):
    return all(is_subcode(rm_code(s, r - 1, m), rm_code(s, r, m))
               for s in family_indices(m) for r in range(0, m + 1))


def check_even_code(m):
    for s in family_indices(m):
        c = rm_code(s, m - 1, m)
        if not (c.is_even_code() and c.gamma == 1 and c.delta == 2 ** (m - 1) - 1):
            return False
    return True


def check_kronecker_duality(m):
    return all(verify_dual_pair(c, rm_code(s, m - 1 - r, m), InnerProduct.KRONECKER)
               for s, r, c in _members(m))


def check_involution(m):
    for s, r, c in _members(m):
        for kind in InnerProduct:
            if not codes_equal(dual_code(dual_code(c, kind), kind), c):
                return False
    return True


def check_macwilliams(m, cap=2 ** 16):
    for s, r, c in _members(m):
        if c.size > cap or 4 ** c.n // c.size > cap:
            continue
        if not macwilliams_check(c, InnerProduct.KRONECKER, cap):
            return False
    return True


def check_hadamard(m, cap):
    return all(hadamard_check(rm_code(s, 1, m), m, cap) for s in family_indices(m))


def check_extended_perfect(m, cap):
    return all(extended_perfect_check(rm_code(s, m - 2, m), m, cap)
               for s in family_indices(m))


def run_suite(max_m, extended=False, out=print):
    """Run every property for ``m = 1..max_m``; return True iff all pass."""
    cap = EXTENDED_DISTANCE_CAP if extended else DEFAULT_DISTANCE_CAP
    ok_all = True

    def report(name, m, result):
        nonlocal ok_all
        detail = ""
        if isinstance(result, tuple):
            result, detail = result
        ok_all &= bool(result)
        out(f"{'PASS' if result else 'FAIL'} {name} m={m}" + (f" ({detail})" if detail else ""))

    for m in range(1, max_m + 1):
        report("type-recurrence", m, check_types(m))
        report("size", m, check_sizes(m))
        report("inclusion-chain", m, check_inclusions(m))
        report("even-code", m, check_even_code(m))
        report("distance", m, check_distance(m, cap))
        report("kronecker-duality", m, check_kronecker_duality(m))
        if m <= 4 or extended:
            report("dual-involution", m, check_involution(m))
        if m <= 4:
            report("macwilliams", m, check_macwilliams(m))
        hcap = cap
        if 2 ** (m + 1) <= hcap:
            report("hadamard", m, check_hadamard(m, hcap))
        if m >= 1 and 2 ** (2 ** m - m - 1) <= hcap:
            report("extended-perfect", m, check_extended_perfect(m, hcap))
    return ok_all
