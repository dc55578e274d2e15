"""Leading asymptotics of ``tau_{k,2g}`` (beta = 2) in either index.

As ``k -> oo``: ``tau_{k,2g} ~ A_g k^((6g-3)/2) (3 - sqrt 8)^-k``.
As ``g -> oo``: ``tau_{k,2g} ~ B_k (k-1)^(2g)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import mpmath

from .coeffs import CoeffTable, coeff_table_beta2
from .genfun import p_polynomial, r_polynomial

__all__ = ["AsympConstant", "b_constant", "a_constant", "gamma_half_integer", "ratio_diagnostics", "RatioReport"]

DEFAULT_DIGITS = 50


@dataclass(frozen=True)
class AsympConstant:
    kind: str
    index: int
    numeric: mpmath.mpf
    digits: int
    exact: Fraction | None = None


def b_constant(k: int) -> Fraction:
    """``B_k = P_k((k-1)^-2) / prod_{j=0}^{k-2} (1 - j^2 (k-1)^-2)``."""
    if k <= 1:
        raise ValueError("degenerate index: B_k needs k >= 2")
    z = Fraction(1, (k - 1) ** 2)
    den = Fraction(1)
    for j in range(k - 1):
        den *= 1 - j * j * z
    return p_polynomial(k)(z) / den


def gamma_half_integer(n: int) -> mpmath.mpf:
    """``Gamma(n + 1/2) = (2n)! / (4^n n!) sqrt(pi)`` at the current precision."""
    q = Fraction(factorial(2 * n), 4**n * factorial(n))
    return mpmath.mpf(q.numerator) / q.denominator * mpmath.sqrt(mpmath.pi)


def _eval_at_lower_edge(coeffs) -> tuple[Fraction, Fraction]:
    """Evaluate a rational polynomial at ``3 - 2 sqrt 2`` exactly as ``u + v sqrt 2``."""
    u, v = Fraction(0), Fraction(0)
    for c in reversed(coeffs):
        # (u + v r)(3 - 2 r) with r^2 = 2
        u, v = 3 * u - 4 * v + c, 3 * v - 2 * u
    return u, v


def a_constant(g: int, digits: int = DEFAULT_DIGITS) -> AsympConstant:
    """``A_g = (sqrt32 (3 - sqrt8))^((1-6g)/2) R_{2g}(3 - sqrt8) / Gamma((6g-1)/2)``."""
    if g < 1:
        raise ValueError("g must be >= 1")
    R = r_polynomial(2 * g, check_depth=0).poly
    u, v = _eval_at_lower_edge(R.coeffs)
    with mpmath.workdps(digits + 15):
        r2 = mpmath.sqrt(2)
        zm = 3 - 2 * r2
        R_val = mpmath.mpf(u.numerator) / u.denominator + mpmath.mpf(v.numerator) / v.denominator * r2
        base = 4 * r2 * zm  # sqrt(32) (3 - sqrt 8)
        val = base ** (mpmath.mpf(1 - 6 * g) / 2) * R_val / gamma_half_integer(3 * g - 1)
    with mpmath.workdps(digits):
        val = +val
    return AsympConstant("A", g, val, digits)


@dataclass
class RatioReport:
    direction: str
    fixed_index: int
    ratios: list  # (index, ratio)
    monotone_toward_one: bool

    def as_rows(self):
        return [(i, r) for i, r in self.ratios]


def _monotone_toward_one(values) -> bool:
    dist = [abs(v - 1) for v in values]
    return all(b < a for a, b in zip(dist, dist[1:]))


def ratio_diagnostics(
    direction: str,
    fixed_index: int,
    indices,
    table: CoeffTable | None = None,
    digits: int = DEFAULT_DIGITS,
) -> RatioReport:
    """Exact table value divided by the asymptotic prediction along ``indices``.

    ``g_to_inf``: ``fixed_index`` is ``k``; ratios ``tau_{k,2g} / (B_k (k-1)^(2g))`` are exact.
    ``k_to_inf``: ``fixed_index`` is ``g``; ratios ``tau_{k,2g} / (A_g k^((6g-3)/2) (3-sqrt8)^-k)``.
    """
    indices = list(indices)
    if direction == "g_to_inf":
        k = fixed_index
        need_g = 2 * max(indices)
        if table is None or table.k_max < k or table.g_max < need_g:
            table = coeff_table_beta2(k, need_g)
        B = b_constant(k)
        ratios = [(g, table.entries[k, 2 * g] / (B * (k - 1) ** (2 * g))) for g in indices]
    elif direction == "k_to_inf":
        g = fixed_index
        need_k = max(indices)
        if table is None or table.k_max < need_k or table.g_max < 2 * g:
            table = coeff_table_beta2(need_k, 2 * g)
        A = a_constant(g, digits).numeric
        ratios = []
        with mpmath.workdps(digits):
            zm = 3 - 2 * mpmath.sqrt(2)
            for k in indices:
                tau = table.entries[k, 2 * g]
                pred = A * mpmath.mpf(k) ** (mpmath.mpf(6 * g - 3) / 2) * zm ** (-k)
                ratios.append((k, (mpmath.mpf(tau.numerator) / tau.denominator) / pred))
    else:
        raise ValueError(f"unknown direction {direction!r}")
    return RatioReport(direction, fixed_index, ratios, _monotone_toward_one([r for _, r in ratios]))
