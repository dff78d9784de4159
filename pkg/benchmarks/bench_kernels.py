"""Times the table kernels: compiled extension vs pure-Python fallback.

Usage:
    python benchmarks/bench_kernels.py [--sizes 500,1000,2000] [--repeats 3]

The table build is the only hot loop in the package; exact mode is
arbitrary-precision and has no compiled twin, so the comparison covers
the two fixed-width modes.
"""

import argparse
import random
import time
from array import array

from elemsym import _kernels_py

try:
    from elemsym import _kernels
except ImportError:
    _kernels = None


def best_of(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench(sizes, repeats):
    rng = random.Random(0)
    print(f"{'mode':<8} {'n':>6} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for n in sizes:
        ire = [rng.randint(-(1 << 31), 1 << 31) for _ in range(n)]
        iim = [rng.randint(-(1 << 31), 1 << 31) for _ in range(n)]
        fre = array("d", (rng.uniform(-1, 1) for _ in range(n)))
        fim = array("d", (rng.uniform(-1, 1) for _ in range(n)))
        qre, qim = array("q", ire), array("q", iim)

        for mode, pure_fn, ext_name, args in (
            ("wrap64", lambda: _kernels_py.build_wrap64(ire, iim), "build_wrap64", (qre, qim)),
            ("float", lambda: _kernels_py.build_float(fre, fim), "build_float", (fre, fim)),
        ):
            pure_t = best_of(pure_fn, repeats)
            if _kernels is None:
                print(f"{mode:<8} {n:>6} {pure_t:>10.4f} {'not built':>13} {'-':>8}")
                continue
            ext_fn = getattr(_kernels, ext_name)
            ext_t = best_of(lambda: ext_fn(*args), repeats)
            print(f"{mode:<8} {n:>6} {pure_t:>10.4f} {ext_t:>13.4f} {pure_t / ext_t:>7.1f}x")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="500,1000,2000",
                        help="comma-separated input sizes")
    parser.add_argument("--repeats", type=int, default=3, help="best-of repeats")
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",") if s]
    if _kernels is None:
        print("note: compiled kernels not built; showing pure-Python timings only")
    bench(sizes, args.repeats)


if __name__ == "__main__":
    main()
