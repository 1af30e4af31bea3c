"""Time the table-monoid scan kernels, numba against numpy.

    python3 benchmarks/bench_kernels.py [--primes 3 5] [--repeat 3]

The first numba call of each kernel is reported separately (compile or
cache load); the timed figure is the best of ``--repeat`` warm calls.
Results of both backends are compared before anything is timed.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from geninv import _kernels as K
from geninv.monoid import all_matrices, table_from_matrices
from geninv.scalars import GF


def best(fn, args, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t)
    return min(times)


def same(x, y):
    if isinstance(x, tuple):
        return all(np.array_equal(u, v) for u, v in zip(x, y))
    return np.array_equal(x, y)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", type=int, nargs="+", default=[3, 5])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if not K.HAVE_NUMBA:
        print("numba not installed; only the numpy path is available")
    print(f"{'table':10} {'kernel':22} {'numpy s':>10} {'numba s':>10} {'first call':>11} {'speedup':>8}")
    for p in args.primes:
        M = table_from_matrices(all_matrices(GF(p), 2), check=False)
        mul = np.ascontiguousarray(M.mul, dtype=np.int64)
        star = np.ascontiguousarray(M.star, dtype=np.int64)
        wl, wr = K.green_tables_numpy(mul)
        cases = [
            ("associativity", (mul,)),
            ("star", (mul, star)),
            ("green_tables", (mul,)),
            ("along_tables", (mul, wl, wr, False)),
            ("penrose_masks", (mul, star)),
        ]
        for name, a in cases:
            base = name if name in ("green_tables", "along_tables", "penrose_masks") else f"{name}_violation"
            f_np = getattr(K, f"{base}_numpy")
            f_nb = getattr(K, f"{base}_numba")
            t_np = best(f_np, a, args.repeat)
            if f_nb is None:
                print(f"M2(GF({p})) {name:22} {t_np:10.4f} {'-':>10}")
                continue
            t0 = time.perf_counter()
            first = f_nb(*a)
            t_first = time.perf_counter() - t0
            if not same(first, f_np(*a)):
                raise SystemExit(f"backend mismatch in {name} on GF({p})")
            t_nb = best(f_nb, a, args.repeat)
            print(f"M2(GF({p})) {name:22} {t_np:10.4f} {t_nb:10.4f} {t_first:11.3f} {t_np / max(t_nb, 1e-9):7.1f}x")


if __name__ == "__main__":
    main()
