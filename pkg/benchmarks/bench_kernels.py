"""Compare the compiled and numpy kernels.

    python benchmarks/bench_kernels.py [--batch 2000] [--dim 16] [--k-star 2000]
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from delaytimes import integrality
from delaytimes.kernels import get_backend


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--batch", type=int, default=2000)
    ap.add_argument("--dim", type=int, default=16)
    ap.add_argument("--k-star", type=int, default=2000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = {}
    for name in ("cython", "python"):
        try:
            backends[name] = get_backend(name)
        except ImportError:
            print(f"{name}: not available")

    rng = np.random.default_rng(0)
    x = rng.standard_normal((args.batch, args.dim, args.dim))
    a = x @ np.swapaxes(x, 1, 2)
    ref = np.linalg.eigvalsh(a)
    print(f"Jacobi eigenvalues, {args.batch} matrices of size {args.dim}:")
    base = None
    for name, mod in backends.items():
        t, (w, sweeps) = _time(lambda: mod.jacobi_eigvals_batch(a), args.repeat)
        err = np.max(np.abs(np.sort(w, axis=1) - ref) / np.abs(ref).max(axis=1, keepdims=True))
        base = base or t
        print(f"  {name:7s} {t * 1e3:9.1f} ms  max rel err {err:.1e}  sweeps {sweeps.min()}..{sweeps.max()}"
              f"  relative time {t / base:5.2f}")

    print(f"P_k integrality recursion up to k* = {args.k_star}:")
    saved = integrality._pk_step
    try:
        for name, mod in backends.items():
            integrality._pk_step = mod.pk_step
            t, rep = _time(lambda: integrality.verify_pk(args.k_star), 1)
            print(f"  {name:7s} {t:9.2f} s   verdict {rep.verdict}")
    finally:
        integrality._pk_step = saved


if __name__ == "__main__":
    main()
