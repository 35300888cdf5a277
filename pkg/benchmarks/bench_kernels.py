"""Time the numba and numpy point-counting kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat N]

Each row builds a discrete-log table for F_{p^k} and counts affine points of
y^m = x^a1 (x-1)^a2 with both backends, checking that the results agree.
The first numba call per signature includes JIT compilation, so one warm-up
run is done before timing.
"""

import argparse
import time
from math import gcd

from cyclicnp.oracle import kernels
from cyclicnp.oracle.field import build_field

CASES = [
    # (p, k, m, a1, a2)
    (2, 12, 7, 1, 1),
    (3, 8, 11, 1, 2),
    (5, 6, 9, 1, 1),
    (7, 5, 12, 1, 5),
    (101, 3, 10, 1, 4),
    (1009, 2, 11, 1, 1),
]


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    print(f"{'field':>12} {'q':>10} | {'log numpy':>10} {'log numba':>10} | "
          f"{'count numpy':>11} {'count numba':>11} | speedup")
    for p, k, m, a1, a2 in CASES:
        F = build_field(p, k)
        q = F.order
        mat = F.mul_matrix(F.primitive_element())
        g = gcd(m, q - 1)

        kernels.log_table_numba(mat, p, q)  # warm-up / compile
        t_ln, logs_nb = best_of(lambda: kernels.log_table_numba(mat, p, q), args.repeat)
        t_lp, logs_np = best_of(lambda: kernels.log_table_numpy(mat, p, q), args.repeat)
        assert (logs_nb == logs_np).all()

        kernels.count_affine_numba(logs_nb, p, a1, a2, g)
        t_cn, c_nb = best_of(lambda: kernels.count_affine_numba(logs_nb, p, a1, a2, g), args.repeat)
        t_cp, c_np = best_of(lambda: kernels.count_affine_numpy(logs_np, p, a1, a2, g), args.repeat)
        assert c_nb == c_np

        speedup = (t_lp + t_cp) / (t_ln + t_cn)
        print(f"{f'F_{p}^{k}':>12} {q:>10} | {t_lp:>9.4f}s {t_ln:>9.4f}s | "
              f"{t_cp:>10.4f}s {t_cn:>10.4f}s | {speedup:5.2f}x")


if __name__ == "__main__":
    main()
