"""Generating functions of the expansion coefficients.

* ``P_k(zeta)``: numerators of ``J_k(zeta) = sum_g tau_{k,g} zeta^g`` at beta = 2.
* ``R_g(z)``: numerators of ``F_g(z) = sum_k tau_{k,g} z^k = R_g / y^((3g-1)/2)``.
* ``F_g``, ``f_g`` at beta = 1 via integral recursions on :class:`AlgebraicSeries`.
* the residual of the third-order PDE obeyed by the double series at beta = 2.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import SPECTRAL_CURVE, AlgebraicSeries, Poly, RatFunc, TruncSeries
from .coeffs import CoeffTable, coeff_table_beta2

__all__ = [
    "PolyFamily",
    "FunctionalFormError",
    "p_polynomial",
    "p_polynomials",
    "j_eval",
    "j_ratfunc",
    "r_polynomial",
    "f_beta2_series",
    "f_beta1_pair",
    "f_beta1_family",
    "phi_ode_residual",
]

Y = SPECTRAL_CURVE.y


class FunctionalFormError(ArithmeticError):
    """A coefficient that must vanish for ``F_g = R_g / y^((3g-1)/2)`` did not."""


@dataclass(frozen=True)
class PolyFamily:
    kind: str  # "P" or "R"
    index: int
    poly: Poly

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self.poly.coeffs


# ---------------------------------------------------------------------------
# P_k and J_k
# ---------------------------------------------------------------------------


def p_polynomials(k_max: int) -> list[Poly]:
    """``[P_0, ..., P_kmax]`` from ``k P_k = 3(2k-3) P_{k-1} - (k-3)(1-(k-2)^2 zeta) P_{k-2}``."""
    ps = [Poly([1], "zeta"), Poly([1], "zeta")]
    for k in range(2, k_max + 1):
        factor = Poly([1, -((k - 2) ** 2)], "zeta")
        ps.append((ps[k - 1].scale(3 * (2 * k - 3)) - (factor * ps[k - 2]).scale(k - 3)).scale(Fraction(1, k)))
    return ps[: k_max + 1]


@lru_cache(maxsize=None)
def p_polynomial(k: int) -> Poly:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return p_polynomials(k)[k]


def _j_denominator(k: int) -> Poly:
    den = Poly([1], "zeta")
    for j in range(1, k):
        den = den * Poly([1, 0, -(j * j)], "zeta")
    return den


def j_ratfunc(k: int) -> RatFunc:
    """``J_k(zeta)`` as a rational function of ``zeta``."""
    if k <= 1:
        return RatFunc(Poly([1], "zeta"))
    num = Poly([c for a in p_polynomial(k).coeffs for c in (a, 0)], "zeta")
    return RatFunc(num, _j_denominator(k))


def j_eval(k: int, zeta0) -> Fraction:
    """``P_k(zeta0^2) / prod_{j<k} (1 - j^2 zeta0^2)``; equals ``tau_k(N)`` at ``zeta0 = 1/N``."""
    if k <= 1:
        return Fraction(1)
    z2 = Fraction(zeta0) ** 2
    den = Fraction(1)
    for j in range(1, k):
        f = 1 - j * j * z2
        if f == 0:
            raise ZeroDivisionError(f"pole of J_{k}: 1 - {j}^2 zeta^2 = 0")
        den *= f
    return p_polynomial(k)(z2) / den


# ---------------------------------------------------------------------------
# R_g and F_g at beta = 2
# ---------------------------------------------------------------------------


def _y_half_power(twice: int, order: int) -> TruncSeries:
    """Series of ``y**(twice/2)``."""
    if twice % 2 == 0:
        return SPECTRAL_CURVE.power_series(twice // 2, order)
    return SPECTRAL_CURVE.power_series(Fraction(twice, 2), order)


def r_polynomial(g: int, check_depth: int = 10, table: CoeffTable | None = None) -> PolyFamily:
    """Extract ``R_g`` from ``F_g * y^((3g-1)/2)`` and verify the product terminates.

    Coefficients ``2g-1 .. 2g-2+check_depth`` and ``z^0, z^1`` of the product
    must vanish; otherwise :class:`FunctionalFormError` is raised.
    """
    if g < 2 or g % 2:
        raise ValueError("g must be an even integer >= 2")
    K = 2 * g - 2 + check_depth
    if table is None or table.k_max < K or table.g_max < g:
        table = coeff_table_beta2(K, g)
    F = TruncSeries(table.row(g)[: K + 1], K)
    prod = F * _y_half_power(3 * g - 1, K)
    for j in [0, 1] + list(range(2 * g - 1, K + 1)):
        if prod[j] != 0:
            raise FunctionalFormError(f"functional form violated: coefficient z^{j} of R_{g} is {prod[j]}")
    return PolyFamily("R", g, Poly(prod.coeffs[: 2 * g - 1], "z"))


def f_beta2_series(g: int, order: int) -> TruncSeries:
    """Series of ``F_g`` at beta = 2."""
    if g < 0:
        raise ValueError("g must be nonnegative")
    if g % 2:
        return TruncSeries([], order)
    if g == 0:
        return (TruncSeries([3, -1], order) - SPECTRAL_CURVE.sqrt_series(order)) / 2
    R = r_polynomial(g, check_depth=0).poly
    return TruncSeries.from_poly(R, order) * _y_half_power(-(3 * g - 1), order)


# ---------------------------------------------------------------------------
# F_g and f_g at beta = 1
# ---------------------------------------------------------------------------


def _beta1_seeds(order: int):
    inv_y = SPECTRAL_CURVE.series(order).inverse()
    F0 = AlgebraicSeries(TruncSeries([Fraction(3, 2), Fraction(-1, 2)], order), TruncSeries([Fraction(-1, 2)], order))
    # (1-3z)/(2y) - 1/(2 sqrt y) = (1-3z)/(2y) - sqrt(y)/(2y)
    F1 = AlgebraicSeries(inv_y * Poly([1, -3], "z") / 2, -inv_y / 2)
    # -(z+1+sqrt y)/(2 sqrt y) = -1/2 - (z+1) sqrt(y) / (2y)
    f1 = AlgebraicSeries(TruncSeries([Fraction(-1, 2)], order), -(inv_y * Poly([1, 1], "z")) / 2)
    return F0, F1, F0, f1


def _d(s: AlgebraicSeries, n: int) -> AlgebraicSeries:
    for _ in range(n):
        s = s.derivative()
    return s


def f_beta1_family(g_max: int, order: int) -> tuple[list[AlgebraicSeries], list[AlgebraicSeries]]:
    """``([F_0..F_gmax], [f_0..f_gmax])`` at beta = 1, each truncated to ``order``."""
    work = order + 4 * max(g_max, 1) + 4
    F0, F1, f0, f1 = _beta1_seeds(work)
    Fs, fs = [F0, F1], [f0, f1]
    for g in range(1, g_max):
        Fm, Fg, fm, fg = Fs[g - 1], Fs[g], fs[g - 1], fs[g]
        dfg = fg.derivative()
        inner = fg - dfg * Poly([2, 2], "z") + _d(fm, 3).mul_z(2) + _d(fm, 2).mul_z(1) - fm.derivative()
        f_next = inner.mul_sqrt_y(-3).integrate().mul_sqrt_y(1)
        integrand = (
            _d(Fm, 3).mul_z(2) * 4
            + _d(Fm, 2).mul_z(1) * 8
            - Fg.derivative() * 2
            + f_next * Poly([-9, 3], "z")
            - dfg.mul_z(1) * 3
        )
        F_next = integrand.integrate().mul_sqrt_y(-2)
        assert F_next.to_series()[0] == 0, "F_{g+1}(0) must vanish"
        Fs.append(F_next)
        fs.append(f_next)
    for s in Fs + fs:
        if s.order < order:
            raise ArithmeticError(f"truncation order {s.order} fell below requested {order}")
    return [s.truncate(order) for s in Fs[: g_max + 1]], [s.truncate(order) for s in fs[: g_max + 1]]


def f_beta1_pair(g: int, order: int) -> tuple[AlgebraicSeries, AlgebraicSeries]:
    """``(F_g, f_g)`` at beta = 1 as ``a + b sqrt(y)`` pairs truncated to ``order``."""
    if g < 0:
        raise ValueError("g must be nonnegative")
    Fs, fs = f_beta1_family(g, order)
    return Fs[g], fs[g]


# ---------------------------------------------------------------------------
# PDE residual of the double series at beta = 2
# ---------------------------------------------------------------------------


def phi_ode_residual(order_z: int, order_zeta: int, table: CoeffTable | None = None) -> list[TruncSeries]:
    """Residual of ``zeta^2 z^2 phi_zzz + zeta^2 z phi_zz - y phi_z + y'/2 phi + 4``.

    Returned as ``[r_0(z), ..., r_{order_zeta}(z)]`` where ``r_n`` collects the
    coefficient of ``zeta^n``; each ``r_n`` is known through ``z^order_z``.
    """
    K = order_z + 1
    if table is None:
        table = coeff_table_beta2(K, order_zeta)
    F = [TruncSeries([table.entries[k, g] for k in range(K + 1)], K) for g in range(order_zeta + 1)]
    dy_half = Poly([-3, 1], "z")
    out = []
    for n in range(order_zeta + 1):
        r = (Y * -1) * F[n].derivative() + F[n] * dy_half
        if n >= 2:
            d2 = F[n - 2].derivative().derivative()
            r = r + d2.derivative().mul_z(2) + d2.mul_z(1)
        if n == 0:
            r = r + 4
        out.append(r.truncate(order_z))
    return out
