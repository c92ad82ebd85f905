"""Compare the jit and pure kernel backends on the preorder census.

Usage::

    python3 benchmarks/bench_kernels.py [--max-n 6] [--repeat 3]

Prints one line per (n, backend) with the best wall time, and the speedup
of the jit backend over the pure one.  Both backends are imported directly,
so the FINTOP_DISABLE_NUMBA flag is irrelevant here.
"""

import argparse
import time

import numpy as np

from fintop.kernels import jit, pure


def best_time(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--max-n", type=int, default=6,
                        help="largest point count to census (default 6)")
    parser.add_argument("--repeat", type=int, default=3,
                        help="repetitions per measurement; best is kept")
    args = parser.parse_args()

    jit.signature_counts(2)  # trigger jit compilation outside the timings
    print(f"{'n':>2} {'backend':>8} {'total':>10} {'seconds':>10}  speedup")
    for n in range(2, args.max_n + 1):
        ref = jit.signature_counts(n)
        assert np.array_equal(ref, pure.signature_counts(n))
        t_jit = best_time(lambda: jit.signature_counts(n), args.repeat)
        t_pure = best_time(lambda: pure.signature_counts(n), args.repeat)
        total = int(ref.sum())
        print(f"{n:>2} {'jit':>8} {total:>10} {t_jit:>10.4f}")
        print(f"{n:>2} {'pure':>8} {total:>10} {t_pure:>10.4f}  {t_pure / t_jit:.1f}x")


if __name__ == "__main__":
    main()
