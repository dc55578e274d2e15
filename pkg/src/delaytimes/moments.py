"""Exact finite-N moments of the time-delay matrix and of Wishart matrices.

``tau_k(N)`` is computed symbolically as a rational function of ``N``; the
Wishart moments ``D_N(k, alpha) = E[Tr W**k]`` are computed by three-term
recursions in ``k`` that run over any exact field (``Fraction`` for numeric
queries, :class:`RatFunc` when ``N`` or ``alpha`` are symbolic).
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Union

from .algebra import Poly, RatFunc, TruncSeries

__all__ = [
    "SymmetryClass",
    "MomentRatFunc",
    "WishartMomentQuery",
    "SingularRecursionError",
    "DivergentMomentError",
    "check_beta",
    "tau_beta2_symbolic",
    "tau_beta1_symbolic",
    "tau_symbolic",
    "tau_exact_sum_MS",
    "tau_exact_sum_Nov",
    "wishart_moment",
    "wishart_moment_value",
    "complex_wishart_moments",
    "real_wishart_moments",
    "wishart_mgf_series",
    "mgf_ode_residual",
]

Field = Union[Fraction, RatFunc]


class SingularRecursionError(ValueError):
    """A recursion coefficient vanished on the stepping path."""

    def __init__(self, k: int, detail: str = ""):
        self.k = k
        super().__init__(f"singular recursion coefficient at k = {k}" + (f" ({detail})" if detail else ""))


class DivergentMomentError(ValueError):
    """The requested moment is infinite (or a Gamma argument is non-positive)."""


def check_beta(beta: int) -> int:
    if beta == 4:
        raise ValueError("beta = 4 is unsupported")
    if beta not in (1, 2):
        raise ValueError(f"beta must be 1 or 2, got {beta!r}")
    return beta


SymmetryClass = int  # 1 (real) or 2 (complex); validated by check_beta


@dataclass(frozen=True)
class MomentRatFunc:
    beta: int
    k: int
    value: RatFunc

    def __call__(self, N) -> Fraction:
        try:
            return self.value(Fraction(N))
        except ZeroDivisionError:
            raise DivergentMomentError(f"tau_{self.k} (beta={self.beta}) has a pole at N = {N}") from None


@dataclass(frozen=True)
class WishartMomentQuery:
    beta: int
    k: int
    alpha: Fraction
    N: int

    def __post_init__(self):
        check_beta(self.beta)
        if int(self.N) != self.N or self.N < 1:
            raise ValueError(f"N must be a positive integer, got {self.N!r}")
        alpha = Fraction(self.alpha)
        object.__setattr__(self, "alpha", alpha)
        if alpha <= 0:
            raise ValueError("alpha must be positive")
        if self.k < 0:
            # E[lambda**-|k|] near 0 needs exponent (beta/2)(alpha+1) - 1 - |k| > -1
            bound = abs(self.k) - 1 if self.beta == 2 else 2 * abs(self.k) - 1
            if alpha <= bound:
                raise DivergentMomentError(
                    f"E[Tr W^{self.k}] diverges for beta={self.beta}, alpha={alpha}: need alpha > {bound}"
                )


# ---------------------------------------------------------------------------
# tau_k(N) as rational functions
# ---------------------------------------------------------------------------


def tau_beta2_symbolic(k_max: int) -> list[MomentRatFunc]:
    """``tau_0 .. tau_kmax`` for beta = 2 from the three-term recursion in k."""
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    N = RatFunc.var("N")
    N2 = N * N
    taus = [RatFunc(1), RatFunc(1)]
    for k in range(1, k_max):
        rhs = 3 * (2 * k - 1) * N2 * taus[k] - (k - 2) * N2 * taus[k - 1]
        taus.append(rhs / ((N2 - k * k) * (k + 1)))
    return [MomentRatFunc(2, k, t) for k, t in enumerate(taus[: k_max + 1])]


def tau_beta1_symbolic(k_max: int) -> tuple[list[MomentRatFunc], list[MomentRatFunc]]:
    """``(taus, bs)`` for beta = 1; ``bs`` is the auxiliary sequence driving the recursion."""
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    N = RatFunc.var("N")
    N2 = N * N
    Np1sq = (N + 1) * (N + 1)
    bs = [(N - 1) / N, (N - 1) / (N + 1)]
    for k in range(1, k_max):
        rhs = (3 * N - 1) * (2 * k - 1) * N * bs[k] - (k - 2) * N2 * bs[k - 1]
        bs.append(rhs / ((Np1sq - k * k) * (k + 1)))
    taus = [RatFunc(1), RatFunc(1)]
    for k in range(1, k_max):
        inhom = Fraction(3, k + 1) * ((k + 3 * N) * N * bs[k] - N2 * bs[k - 1])
        rhs = inhom - 6 * N2 * taus[k] + N2 * taus[k - 1]
        taus.append(rhs / (4 * k * (k + 1) + 1 - Np1sq))
    return (
        [MomentRatFunc(1, k, t) for k, t in enumerate(taus[: k_max + 1])],
        [MomentRatFunc(1, k, b) for k, b in enumerate(bs[: k_max + 1])],
    )


def tau_symbolic(beta: int, k_max: int) -> list[MomentRatFunc]:
    check_beta(beta)
    return tau_beta2_symbolic(k_max) if beta == 2 else tau_beta1_symbolic(k_max)[0]


# ---------------------------------------------------------------------------
# Closed-form sums at beta = 2
# ---------------------------------------------------------------------------


def _rising(a: int, n: int) -> int:
    """Gamma(a + n) / Gamma(a) for integer a >= 1."""
    out = 1
    for i in range(n):
        out *= a + i
    return out


def _check_sum_args(k: int, N: int) -> None:
    if k < 1:
        raise ValueError("k must be >= 1")
    if N < k:
        raise DivergentMomentError("moment diverges or Gamma argument non-positive")


def tau_exact_sum_MS(k: int, N: int) -> Fraction:
    """N-term positive sum for ``tau_k`` at beta = 2; Gamma ratios as integer products."""
    _check_sum_args(k, N)
    # Gamma(N+1)/Gamma(2N) = 1 / (N+1)(N+2)...(2N-1)
    outer = Fraction(1, _rising(N + 1, N - 1))
    total = 0
    for j in range(N):
        # Gamma(2N-k-j) / Gamma(N-j) = (N-j)...(2N-k-j-1), or its reciprocal
        lo, hi = N - j, 2 * N - k - j
        ratio = Fraction(_rising(lo, hi - lo)) if hi >= lo else Fraction(1, _rising(hi, lo - hi))
        total += comb(k + j - 1, k - 1) * comb(k + j, k - 1) * ratio
    return Fraction(N ** (k - 1), k) * total * outer


def tau_exact_sum_Nov(k: int, N: int) -> Fraction:
    """Alternating k-term sum for ``tau_k`` at beta = 2."""
    _check_sum_args(k, N)
    total = Fraction(0)
    for j in range(k):
        up = _rising(N - j, k)  # Gamma(N-j+k)/Gamma(N-j)
        down = _rising(N + j + 1 - k, k)  # Gamma(N+j+1)/Gamma(N+j+1-k)
        total += (-1) ** j * comb(k - 1, j) * Fraction(up, down)
    return Fraction(N ** (k - 1), factorial(k)) * total


# ---------------------------------------------------------------------------
# Wishart moments D_N(k, alpha)
# ---------------------------------------------------------------------------


def _is_zero(x) -> bool:
    return x == 0


def complex_wishart_moments(N: Field, alpha: Field, k_min: int, k_max: int) -> dict[int, Field]:
    """``{k: D^(2)_N(k, alpha)}`` for ``k_min <= k <= k_max`` (range always covers 0 and 1)."""
    k_min, k_max = min(k_min, 0), max(k_max, 1)
    s = alpha + 2 * N
    D = {0: N, 1: N * (N + alpha)}
    for k in range(1, k_max):
        D[k + 1] = ((2 * k + 1) * s * D[k] + (k - 1) * (k * k - alpha * alpha) * D[k - 1]) / (k + 2)
    for k in range(0, k_min, -1):
        c = (k - 1) * (k * k - alpha * alpha)
        if _is_zero(c):
            raise SingularRecursionError(k, "(k-1)(k^2-alpha^2) = 0")
        D[k - 1] = ((k + 2) * D[k + 1] - (2 * k + 1) * s * D[k]) / c
    return D


def real_wishart_moments(N: Field, alpha: Field, k_min: int, k_max: int) -> dict[int, Field]:
    """``{k: D^(1)_N(k, alpha)}``; the inhomogeneity uses complex moments at size ``N-1``.

    Upward stepping starts from the seed ``D(2) = N(N+alpha)(2N+alpha+1)``
    because the relation at k = 1 carries a 3/(k-1) factor.
    """
    k_min, k_max = min(k_min, 0), max(k_max, 2)
    if isinstance(N, (int, Fraction)) and N == 1:
        warnings.warn(
            "beta=1 recursion at N=1 uses the size-0 complex ensemble, taken as D^(2)_0 = 0",
            stacklevel=3,
        )
        D2 = {k: Fraction(0) for k in range(k_min, k_max + 1)}
    else:
        D2 = complex_wishart_moments(N - 1, alpha, k_min + 1, k_max)
    lin = 2 * (alpha - 1) + 4 * N

    def inhom(k):
        return Fraction(3, k - 1) * ((alpha + 2 * N - k - 1) * D2[k] - D2[k + 1])

    D = {0: N, 1: N * (N + alpha), 2: N * (N + alpha) * (2 * N + alpha + 1)}
    for k in range(2, k_max):
        D[k + 1] = lin * D[k] + (1 - alpha * alpha + 4 * k * (k - 1)) * D[k - 1] + inhom(k)
    for k in range(0, k_min, -1):
        c = 1 - alpha * alpha + 4 * k * (k - 1)
        if _is_zero(c):
            raise SingularRecursionError(k, "1 - alpha^2 + 4k(k-1) = 0")
        D[k - 1] = (D[k + 1] - lin * D[k] - inhom(k)) / c
    return D


def wishart_moment_value(beta: int, k: int, alpha: Field, N: Field) -> Field:
    """``D^(beta)_N(k, alpha)`` without finiteness validation (symbolic arguments allowed)."""
    check_beta(beta)
    if beta == 2:
        return complex_wishart_moments(N, alpha, k, k)[k]
    return real_wishart_moments(N, alpha, k, k)[k]


def wishart_moment(q: WishartMomentQuery) -> Fraction:
    """Exact ``E[Tr W**k]`` for a validated numeric query."""
    return wishart_moment_value(q.beta, q.k, q.alpha, Fraction(q.N))


def wishart_mgf_series(alpha, N: int, order: int) -> TruncSeries:
    """Series in ``s`` of ``E[Tr(W e^{sW})]`` for the complex ensemble.

    ``N(alpha+N) 2F1(1-alpha-N, 1-N; 2; s^2) (1-s)^-(alpha+2N)``; the 2F1
    terminates because ``1-N`` is a nonpositive integer.  Positive moments
    are ``D(k) = (k-1)! * [s^(k-1)]``.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    alpha = Fraction(alpha)
    a, b = 1 - alpha - N, 1 - N
    hyp = [Fraction(0)] * (order + 1)
    term = Fraction(1)
    j = 0
    while 2 * j <= order and term != 0:
        hyp[2 * j] = term
        term = term * (a + j) * (b + j) / ((2 + j) * (j + 1))
        j += 1
    e = alpha + 2 * N
    binom = [Fraction(1)]
    for n in range(order):
        binom.append(binom[-1] * (e + n) / (n + 1))
    return TruncSeries(hyp, order) * TruncSeries(binom, order) * (N * (alpha + N))


def mgf_ode_residual(alpha, N: int, order: int) -> TruncSeries:
    """Residual of the second-order ODE satisfied by the complex generating function."""
    alpha = Fraction(alpha)
    M = wishart_mgf_series(alpha, N, order)
    e = alpha + 2 * N
    s = lambda cs: Poly(cs, "s")  # noqa: E731
    d1 = M.derivative()
    d2 = d1.derivative()
    return d2 * s([0, 1, 0, -1]) + d1 * s([3, -2 * e, -5]) - M * s([3 * e, 4 - alpha * alpha])
