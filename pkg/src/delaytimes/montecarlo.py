"""Monte Carlo estimates of Wishart trace moments and delay-time moments.

``W = X X^dagger`` with ``X`` an ``N x (N + alpha)`` Gaussian matrix:
complex entries with ``E|x|^2 = 1`` for beta = 2, real standard normal
entries for beta = 1.  The delay-time moments use ``alpha = N + 2 - beta``
and ``tau_k = N^(k-1) E[Tr W^-k]``.

Reproducibility: samples are drawn in fixed-size blocks and block ``b``
uses its own PCG64 stream seeded by ``SeedSequence([seed, b])``.  Shards
own contiguous runs of blocks and the per-block statistics are merged in
block order, so the result is bitwise independent of the shard count.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .moments import DivergentMomentError, check_beta

__all__ = [
    "MCEstimate",
    "RNG_SPEC",
    "BLOCK_SIZE",
    "eigvals_symmetric",
    "sample_wishart_moments",
    "sample_delay_moments",
    "sample_delay_moment",
]

BLOCK_SIZE = 1000
MAX_DIM = 256
RNG_SPEC = {
    "generator": "PCG64",
    "library": f"numpy {np.__version__}",
    "seeding": "SeedSequence([seed, block_index])",
    "block_size": BLOCK_SIZE,
}


@dataclass(frozen=True)
class MCEstimate:
    beta: int
    N: int
    k: int
    samples: int
    mean: float
    stderr: float
    seed: int
    shards: int
    rng: dict = field(default_factory=lambda: dict(RNG_SPEC))

    def z_score(self, exact) -> float:
        return (self.mean - float(exact)) / self.stderr if self.stderr > 0 else math.inf


def eigvals_symmetric(matrix, tol: float = 1e-12, max_sweeps: int = 50) -> np.ndarray:
    """All eigenvalues (ascending) of a real-symmetric or complex-Hermitian matrix by Jacobi rotations.

    A Hermitian ``A + iB`` is handled through its real embedding
    ``[[A, -B], [B, A]]``, whose spectrum is that of ``A + iB`` with every
    eigenvalue doubled.
    """
    a = np.asarray(matrix)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    n = a.shape[0]
    if n > MAX_DIM:
        raise ValueError(f"dimension {n} exceeds {MAX_DIM}")
    if n == 0:
        return np.zeros(0)
    scale = float(np.max(np.abs(a))) or 1.0
    if np.max(np.abs(a - a.conj().T)) > 1e-10 * scale:
        raise ValueError("matrix is not symmetric/Hermitian")
    if np.iscomplexobj(a):
        A, B = a.real, a.imag
        emb = np.block([[A, -B], [B, A]])
        w = _jacobi(emb[None], tol, max_sweeps)[0]
        return np.sort(w)[::2].copy()
    return np.sort(_jacobi(a.real[None], tol, max_sweeps)[0])


def _jacobi(stack, tol, max_sweeps):
    w, sweeps = kernels.jacobi_eigvals_batch(np.ascontiguousarray(stack, dtype=np.float64), tol, max_sweeps)
    if np.any(sweeps < 0):
        raise ArithmeticError(f"Jacobi iteration did not converge within {max_sweeps} sweeps")
    return w


def _wishart_eigs(beta: int, N: int, M: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """Eigenvalues of ``count`` sampled Wishart matrices, shape (count, N)."""
    if beta == 2:
        X = (rng.standard_normal((count, N, M)) + 1j * rng.standard_normal((count, N, M))) * math.sqrt(0.5)
        W = X @ np.conj(np.swapaxes(X, 1, 2))
        A, B = W.real, W.imag
        emb = np.concatenate([np.concatenate([A, -B], axis=2), np.concatenate([B, A], axis=2)], axis=1)
        w = np.sort(_jacobi(emb, 1e-12, 50), axis=1)
        return w[:, ::2]
    X = rng.standard_normal((count, N, M))
    W = X @ np.swapaxes(X, 1, 2)
    return _jacobi(W, 1e-12, 50)


def _block_stats(beta, N, M, ks, seed, block, count, scales):
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, block])))
    eigs = _wishart_eigs(beta, N, M, count, rng)
    rows = []
    for k, s in zip(ks, scales):
        vals = s * np.sum(eigs ** float(k), axis=1)
        mean = float(np.mean(vals))
        m2 = float(np.sum((vals - mean) ** 2))
        rows.append((count, mean, m2))
    return rows


def _merge(a, b):
    n_a, mean_a, m2_a = a
    n_b, mean_b, m2_b = b
    n = n_a + n_b
    delta = mean_b - mean_a
    return n, mean_a + delta * n_b / n, m2_a + m2_b + delta * delta * n_a * n_b / n


def _run(beta, N, M, ks, samples, seed, shards, scales):
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if shards < 1:
        raise ValueError("shards must be >= 1")
    if not 0 <= seed < 2**64:
        raise ValueError("seed must be a 64-bit unsigned integer")
    nblocks = -(-samples // BLOCK_SIZE)
    counts = [min(BLOCK_SIZE, samples - b * BLOCK_SIZE) for b in range(nblocks)]
    bounds = np.linspace(0, nblocks, min(shards, nblocks) + 1).astype(int)

    def shard_job(lo, hi):
        return [_block_stats(beta, N, M, ks, seed, b, counts[b], scales) for b in range(lo, hi)]

    with ThreadPoolExecutor(max_workers=len(bounds) - 1) as pool:
        parts = list(pool.map(shard_job, bounds[:-1], bounds[1:]))
    blocks = [blk for part in parts for blk in part]
    out = []
    for j in range(len(ks)):
        acc = blocks[0][j]
        for blk in blocks[1:]:
            acc = _merge(acc, blk[j])
        n, mean, m2 = acc
        sd = math.sqrt(m2 / (n - 1)) if n > 1 else 0.0
        out.append((mean, sd / math.sqrt(n)))
    return out


def sample_wishart_moments(beta: int, N: int, alpha: int, ks, samples: int, seed: int, shards: int = 1):
    """Estimates of ``E[Tr W^k]`` for each ``k`` in ``ks``; returns a list of ``(mean, stderr)``.

    ``alpha = M - N`` is the (integer) excess of columns.  Negative ``k``
    requires the moment to be finite: ``alpha >= |k|`` (beta = 2) or
    ``alpha >= 2|k|`` (beta = 1).
    """
    check_beta(beta)
    ks = [int(k) for k in ks]
    if N < 1 or alpha < 0:
        raise ValueError("need N >= 1 and alpha >= 0")
    for k in ks:
        if k < 0 and alpha < (-k if beta == 2 else -2 * k):
            raise DivergentMomentError(f"divergent moment: E Tr W^{k} is infinite for alpha={alpha}")
    if N + alpha > MAX_DIM or (beta == 2 and 2 * N > MAX_DIM):
        raise ValueError("matrix too large for the Jacobi kernel")
    return _run(beta, N, N + alpha, ks, samples, seed, shards, [1.0] * len(ks))


def sample_delay_moments(beta: int, N: int, ks, samples: int, seed: int, shards: int = 1) -> list[MCEstimate]:
    """Joint estimates of ``tau_k`` for several ``k`` from a single set of samples."""
    check_beta(beta)
    ks = [int(k) for k in ks]
    for k in ks:
        if k < 1:
            raise ValueError("k must be positive")
        if (beta == 2 and not N > k) or (beta == 1 and not N > 2 * k):
            raise DivergentMomentError(f"divergent moment: tau_{k} needs N > {k if beta == 2 else 2 * k}")
    M = 2 * N if beta == 2 else 2 * N + 1
    scales = [float(N) ** (k - 1) for k in ks]
    res = _run(beta, N, M, [-k for k in ks], samples, seed, shards, scales)
    return [MCEstimate(beta, N, k, samples, m, s, seed, shards) for k, (m, s) in zip(ks, res)]


def sample_delay_moment(beta: int, N: int, k: int, samples: int, seed: int, shards: int = 1) -> MCEstimate:
    """Estimate ``tau_k = N^(k-1) E[Tr W^-k]`` at ``alpha = N + 2 - beta``."""
    return sample_delay_moments(beta, N, [k], samples, seed, shards)[0]
