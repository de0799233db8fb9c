"""Time the compiled rank kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py --sizes 1000 10000 100000

first_fit_replay is quadratic and only runs up to --quadratic-cap.
"""
import argparse
import random
import timeit

from sigmacolor import _kernels_py

try:
    from sigmacolor import _kernels
except ImportError:
    _kernels = None


def instance(n, seed):
    rng = random.Random(seed)
    lo = [rng.randrange(4 * n) for _ in range(n)]
    hi = [a + rng.randint(1, 40) for a in lo]
    return lo, hi


def bench(fn, args, repeat):
    return min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[1000, 10000, 100000])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quadratic-cap", type=int, default=5000)
    args = ap.parse_args()
    if _kernels is None:
        print("compiled extension not built; timing the fallback only")
    print(f"{'kernel':<18}{'n':>9}{'python s':>12}{'cython s':>12}{'speedup':>9}")
    for n in args.sizes:
        lo, hi = instance(n, n)
        colors = list(_kernels_py.greedy_by_left(lo, hi))
        cases = {
            "max_overlap": (lo, hi),
            "first_conflict": (lo, hi, colors),
            "greedy_by_left": (lo, hi),
            "first_fit_replay": (lo, hi),
        }
        if n > args.quadratic_cap:
            del cases["first_fit_replay"]
        for name, call_args in cases.items():
            py = bench(getattr(_kernels_py, name), call_args, args.repeat)
            if _kernels is None:
                print(f"{name:<18}{n:>9}{py:>12.4f}{'-':>12}{'-':>9}")
                continue
            cy = bench(getattr(_kernels, name), call_args, args.repeat)
            print(f"{name:<18}{n:>9}{py:>12.4f}{cy:>12.4f}{py / cy:>8.1f}x")


if __name__ == "__main__":
    main()
