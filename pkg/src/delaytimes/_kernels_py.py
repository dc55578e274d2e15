"""Pure-Python/numpy versions of the compiled kernels in ``_kernels.pyx``.

The Jacobi sweep is vectorized over the batch axis: each (p, q) rotation is
applied to every matrix in the stack at once.
"""
from __future__ import annotations

import numpy as np


def jacobi_eigvals_batch(a, tol: float = 1e-12, max_sweeps: int = 50):
    work = np.array(a, dtype=np.float64, copy=True)
    if work.ndim != 3 or work.shape[1] != work.shape[2]:
        raise ValueError("expected a stack of square matrices, shape (B, n, n)")
    B, n, _ = work.shape
    sweeps = np.full(B, -1, dtype=np.int32)
    diag_idx = np.arange(n)
    offmask = ~np.eye(n, dtype=bool)
    active = np.ones(B, dtype=bool)
    for sweep in range(max_sweeps + 1):
        sq = work * work
        diag = sq[:, diag_idx, diag_idx].sum(axis=1)
        off = (sq * offmask).sum(axis=(1, 2))
        done = active & (off <= tol * tol * (off + diag))
        sweeps[done] = sweep
        active &= ~done
        if not active.any() or sweep == max_sweeps:
            break
        idx = np.flatnonzero(active)
        sub = work[idx]
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = sub[:, p, q]
                nz = apq != 0.0
                if not nz.any():
                    continue
                safe = np.where(nz, apq, 1.0)
                with np.errstate(over="ignore"):  # huge theta means a negligible rotation
                    theta = (sub[:, q, q] - sub[:, p, p]) / (2.0 * safe)
                    t = np.where(nz, np.copysign(1.0, theta) / (np.abs(theta) + np.hypot(theta, 1.0)), 0.0)
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                cc, ss = c[:, None], s[:, None]
                x = sub[:, :, p].copy()
                y = sub[:, :, q]
                sub[:, :, p] = cc * x - ss * y
                sub[:, :, q] = ss * x + cc * y
                x = sub[:, p, :].copy()
                y = sub[:, q, :]
                sub[:, p, :] = cc * x - ss * y
                sub[:, q, :] = ss * x + cc * y
        work[idx] = sub
    w = work[:, diag_idx, diag_idx].copy()
    return w, sweeps


def pk_step(k: int, a: list, b: list):
    c1, c2, s = 3 * (2 * k - 3), k - 3, (k - 2) ** 2
    la, lb = len(a), len(b)
    n = max(la, lb + 1)
    out = []
    for i in range(n):
        v = c1 * a[i] if i < la else 0
        if i < lb:
            v -= c2 * b[i]
        if 0 < i <= lb:
            v += c2 * s * b[i - 1]
        q, r = divmod(v, k)
        if r:
            return None, i
        out.append(q)
    while out and out[-1] == 0:
        out.pop()
    return out, None
