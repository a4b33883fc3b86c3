"""Time the compiled and pure-Python lattice kernels on the same sweep.

    python benchmarks/bench_kernels.py [--r-max 12] [--k-max 4] [--repeat 3]
"""
import argparse
import time
from math import gcd

from termsing import _pykernels

try:
    from termsing import _ckernels
except ImportError:
    _ckernels = None


def run_sweep(mod, r_max, k_max):
    results = []
    for r in range(2, r_max + 1):
        for a in range(1, r):
            if gcd(r, a) != 1:
                continue
            w = (a, r - a, 1)
            basis = mod.hilbert_basis(r, w)
            D = k_max * max(map(sum, basis))
            results.append(mod.order_counts(r, w, basis, D, k_max))
    return results


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--r-max", type=int, default=12)
    ap.add_argument("--k-max", type=int, default=4)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    py_t, py_out = best_of(lambda: run_sweep(_pykernels, args.r_max, args.k_max), args.repeat)
    print(f"python  r<={args.r_max} K={args.k_max}: {py_t:8.4f} s")
    if _ckernels is None:
        print("cython  extension not built")
        return
    c_t, c_out = best_of(lambda: run_sweep(_ckernels, args.r_max, args.k_max), args.repeat)
    print(f"cython  r<={args.r_max} K={args.k_max}: {c_t:8.4f} s")
    assert c_out == py_out, "kernels disagree"
    print(f"speedup {py_t / c_t:.1f}x, outputs identical")


if __name__ == "__main__":
    main()
