# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: batched cyclic Jacobi eigenvalues and the P_k recursion step."""
import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, fabs, hypot

cnp.import_array()


cdef int _jacobi(double* a, int n, double* w, double tol, int max_sweeps) noexcept nogil:
    cdef int sweep, i, j, p, q, r
    cdef double off, diag, apq, app, aqq, theta, t, c, s, x, y
    for sweep in range(max_sweeps + 1):
        off = 0.0
        diag = 0.0
        for i in range(n):
            for j in range(n):
                if i == j:
                    diag += a[i * n + j] * a[i * n + j]
                else:
                    off += a[i * n + j] * a[i * n + j]
        if off <= tol * tol * (off + diag):
            for i in range(n):
                w[i] = a[i * n + i]
            return sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p * n + q]
                if apq == 0.0:
                    continue
                app = a[p * n + p]
                aqq = a[q * n + q]
                theta = (aqq - app) / (2.0 * apq)
                t = 1.0 / (fabs(theta) + hypot(theta, 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                for r in range(n):
                    x = a[r * n + p]
                    y = a[r * n + q]
                    a[r * n + p] = c * x - s * y
                    a[r * n + q] = s * x + c * y
                for r in range(n):
                    x = a[p * n + r]
                    y = a[q * n + r]
                    a[p * n + r] = c * x - s * y
                    a[q * n + r] = s * x + c * y
    return -1


def jacobi_eigvals_batch(a, double tol=1e-12, int max_sweeps=50):
    """Eigenvalues of a stack of real symmetric matrices, shape (B, n, n).

    Returns ``(eigvals (B, n), sweeps (B,))``; ``sweeps[i] == -1`` marks non-convergence.
    """
    cdef cnp.ndarray[cnp.float64_t, ndim=3, mode="c"] work = np.array(a, dtype=np.float64, order="C", copy=True)
    cdef Py_ssize_t B = work.shape[0]
    cdef int n = <int>work.shape[1]
    cdef cnp.ndarray[cnp.float64_t, ndim=2, mode="c"] w = np.empty((B, n), dtype=np.float64)
    cdef cnp.ndarray[cnp.int32_t, ndim=1, mode="c"] sweeps = np.empty(B, dtype=np.int32)
    cdef double* pa = <double*>work.data
    cdef double* pw = <double*>w.data
    cdef int* ps = <int*>sweeps.data
    cdef Py_ssize_t b
    with nogil:
        for b in range(B):
            ps[b] = _jacobi(pa + b * n * n, n, pw + b * n, tol, max_sweeps)
    return w, sweeps


def pk_step(long k, list a, list b):
    """One step of ``k P_k = 3(2k-3) P_{k-1} - (k-3)(1-(k-2)^2 zeta) P_{k-2}``.

    Returns ``(coeffs, None)`` or ``(None, index)`` for the first coefficient
    not divisible by ``k``.
    """
    cdef long c1 = 3 * (2 * k - 3), c2 = k - 3
    cdef object s = (k - 2) * (k - 2)
    cdef Py_ssize_t la = len(a), lb = len(b), n, i
    cdef object v, q, r
    cdef list out = []
    n = la if la > lb + 1 else lb + 1
    for i in range(n):
        v = c1 * a[i] if i < la else 0
        if i < lb:
            v = v - c2 * b[i]
        if 0 < i <= lb:
            v = v + c2 * s * b[i - 1]
        q, r = divmod(v, k)
        if r:
            return None, i
        out.append(q)
    while out and out[len(out) - 1] == 0:
        out.pop()
    return out, None
