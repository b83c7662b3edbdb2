"""Compare the numba and numpy descent-histogram kernels.

    python benchmarks/bench_descent_histogram.py [--m-max 10] [--repeat 3]
"""
import argparse
import time

import numpy as np

from eulerian_rcs import perms


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--m-min", type=int, default=6)
    parser.add_argument("--m-max", type=int, default=10)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--ascents", action="store_true")
    args = parser.parse_args()

    if perms.HAVE_NUMBA:
        perms._histogram_numba(3, args.ascents)  # compile outside the timing
    print(f"{'m':>3} {'perms':>10} {'numpy s':>10} {'numba s':>10} {'speedup':>8}")
    for m in range(args.m_min, args.m_max + 1):
        t_np, h_np = best_of(lambda: perms._histogram_numpy(m, args.ascents), args.repeat)
        if perms.HAVE_NUMBA:
            t_nb, h_nb = best_of(lambda: perms._histogram_numba(m, args.ascents), args.repeat)
            assert np.array_equal(h_np, h_nb)
            print(f"{m:>3} {int(h_np.sum()):>10} {t_np:>10.4f} {t_nb:>10.4f} {t_np / t_nb:>8.1f}")
        else:
            print(f"{m:>3} {int(h_np.sum()):>10} {t_np:>10.4f} {'n/a':>10} {'n/a':>8}")


if __name__ == "__main__":
    main()
