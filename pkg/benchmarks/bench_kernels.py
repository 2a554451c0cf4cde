"""Time the compiled Lee-distribution kernel against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat N] [--max-log2 K]
"""
import argparse
import time

import numpy as np

from z4rm import _pykernels, kernels
from z4rm.family import rm_code

CASES = [(0, 2, 4), (1, 2, 4), (0, 2, 5), (1, 2, 5), (2, 2, 5), (1, 3, 5)]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t)
    return min(times), result


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--max-log2", type=int, default=26, help="skip codes with more words")
    args = p.parse_args(argv)

    if kernels.BACKEND != "cython":
        print("compiled kernel not available; timing the fallback only")
    print(f"{'code':<12}{'words':>10}{'compiled s':>12}{'numpy s':>10}{'speedup':>9}")
    for s, r, m in CASES:
        c = rm_code(s, r, m)
        if c.log2_size > args.max_log2:
            continue
        g = c.binary_generators
        tp, ref = best_of(lambda: _pykernels.lee_distribution(g, c.n), args.repeat)
        if kernels.BACKEND == "cython":
            tc, got = best_of(lambda: kernels.lee_distribution(g, c.n), args.repeat)
            assert np.array_equal(got, ref)
            cols = f"{tc:>12.4f}{tp:>10.4f}{tp / tc:>8.1f}x"
        else:
            cols = f"{'-':>12}{tp:>10.4f}{'-':>9}"
        print(f"RM_{s}({r},{m}){'':<3}{c.size:>10}{cols}")


if __name__ == "__main__":
    main()
