"""Tables of 1/N-expansion coefficients ``tau_{k,g}`` (and the auxiliary ``b_{k,g}``).

Layers of fixed ``g`` are filled by marching ``k`` upward from the two
seed columns ``k = 0, 1``.  Layer index -1 is the zero layer.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import SPECTRAL_CURVE, TruncSeries, series_sqrt
from .moments import check_beta

__all__ = ["CoeffTable", "schroeder", "coeff_table_beta2", "coeff_table_beta1", "coeff_table"]


@dataclass
class CoeffTable:
    beta: int
    k_max: int
    g_max: int
    entries: dict[tuple[int, int], Fraction] = field(default_factory=dict)
    aux_entries: dict[tuple[int, int], Fraction] = field(default_factory=dict)

    def __getitem__(self, kg: tuple[int, int]) -> Fraction:
        return self.entries[kg]

    def column(self, k: int) -> list[Fraction]:
        """``tau_{k,0..g_max}`` (the 1/N expansion of ``tau_k``)."""
        return [self.entries[k, g] for g in range(self.g_max + 1)]

    def row(self, g: int) -> list[Fraction]:
        return [self.entries[k, g] for k in range(self.k_max + 1)]

    def aux_column(self, k: int) -> list[Fraction]:
        return [self.aux_entries[k, g] for g in range(self.g_max + 1)]

    def aux_row(self, g: int) -> list[Fraction]:
        return [self.aux_entries[k, g] for k in range(self.k_max + 1)]


def schroeder(k: int) -> int:
    """Large Schroeder number as the terminating sum ``2F1(1-k, k; 2; -1)``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    total = Fraction(0)
    term = Fraction(1)
    j = 0
    while term != 0:
        total += term
        # ratio of consecutive terms of sum (1-k)_j (k)_j / ((2)_j j!) (-1)^j
        term = term * (1 - k + j) * (k + j) * -1 / ((2 + j) * (j + 1))
        j += 1
    assert total.denominator == 1
    return int(total)


def _schroeder_row(k_max: int) -> list[Fraction]:
    # seeds from the hypergeometric sum, then (k+1) S_{k+1} = 3(2k-1) S_k - (k-2) S_{k-1}
    row =[Fraction(schroeder(0)), Fraction(schroeder(1))]
    for k in range(1, k_max):
        row.append((3 * (2 * k - 1) * row[k] - (k - 2) * row[k - 1]) / (k + 1))
    return row[: k_max + 1]


def coeff_table_beta2(k_max: int, g_max: int) -> CoeffTable:
    """Fill ``tau_{k,g}`` at beta = 2; odd layers vanish."""
    if k_max < 0 or g_max < 0:
        raise ValueError("k_max and g_max must be nonnegative")
    K = max(k_max, 1)
    layers: list[list[Fraction]] = [_schroeder_row(K), [Fraction(0)] * (K + 1)]
    for g in range(0, g_max - 1):
        prev = layers[g]
        new = [Fraction(0), Fraction(0)] + [Fraction(0)] * (K - 1)
        for k in range(1, K):
            acc = 3 * (2 * k - 1) * new[k] - (k - 2) * new[k - 1] + k * k * (k + 1) * prev[k + 1]
            new[k + 1] = acc / (k + 1)
        layers.append(new)
    table = CoeffTable(2, k_max, g_max)
    for g in range(g_max + 1):
        for k in range(k_max + 1):
            table.entries[k, g] = layers[g][k]
    return table


def _tau1_row1(order: int) -> list[Fraction]:
    """``tau_{k,1}`` at beta = 1: coefficients of ``(1 - 3z - sqrt y) / (2y)``."""
    y = SPECTRAL_CURVE.series(order)
    F1 = (TruncSeries([1, -3], order) - series_sqrt(y)) / (y * 2)
    return list(F1.coeffs)


def _b_row1(order: int) -> list[Fraction]:
    """``b_{k,1}``: coefficients of ``f_1 = -(z + 1 + sqrt y) / (2 sqrt y)``."""
    sq = SPECTRAL_CURVE.sqrt_series(order)
    f1 = -(TruncSeries([1, 1], order) + sq) / (sq * 2)
    return list(f1.coeffs)


def coeff_table_beta1(k_max: int, g_max: int, *, layer1_from_recursion: bool = False) -> CoeffTable:
    """Fill ``tau_{k,g}`` and ``b_{k,g}`` at beta = 1.

    Rows ``g = 0`` are Schroeder numbers and rows ``g = 1`` come from the
    algebraic generating functions, unless ``layer1_from_recursion`` is set,
    in which case layer 1 is produced by the recursion from layer 0 against a
    zero layer -1 (used to cross-check the two descriptions).
    """
    if k_max < 0 or g_max < 0:
        raise ValueError("k_max and g_max must be nonnegative")
    K = max(k_max, 1)
    zero = [Fraction(0)] * (K + 1)
    tau: list[list[Fraction]] = [_schroeder_row(K)]
    b: list[list[Fraction]] = [_schroeder_row(K)]
    start = 0
    if not layer1_from_recursion and g_max >= 1:
        tau.append(_tau1_row1(K))
        b.append(_b_row1(K))
        start = 1

    for g in range(start, g_max):
        gn = g + 1
        b_prev = b[g]
        b_prev2 = b[g - 1] if g >= 1 else zero
        bn = [Fraction(0)] * (K + 1)
        bn[0] = Fraction((gn == 0) - (gn == 1))
        bn[1] = Fraction((-1) ** gn * (2 - (gn == 0)))
        for k in range(1, K):
            bn[k + 1] = (
                Fraction(3 * (2 * k - 1), k + 1) * bn[k]
                - Fraction(k - 2, k + 1) * bn[k - 1]
                - 2 * b_prev[k + 1]
                - Fraction(2 * k - 1, k + 1) * b_prev[k]
                - (1 - k * k) * b_prev2[k + 1]
            )
        t_prev = tau[g]
        t_prev2 = tau[g - 1] if g >= 1 else zero
        tn = [Fraction(int(gn == 0)), Fraction(int(gn == 0))] + [Fraction(0)] * (K - 1)
        for k in range(1, K):
            rhs = Fraction(3, k + 1) * (bn[k - 1] - 3 * bn[k] - k * b_prev[k])
            tn[k + 1] = rhs + 6 * tn[k] - tn[k - 1] - 2 * t_prev[k + 1] + 4 * k * (k + 1) * t_prev2[k + 1]
        tau.append(tn)
        b.append(bn)

    table = CoeffTable(1, k_max, g_max)
    for g in range(g_max + 1):
        for k in range(k_max + 1):
            table.entries[k, g] = tau[g][k]
            table.aux_entries[k, g] = b[g][k]
    return table


def coeff_table(beta: int, k_max: int, g_max: int) -> CoeffTable:
    check_beta(beta)
    return coeff_table_beta2(k_max, g_max) if beta == 2 else coeff_table_beta1(k_max, g_max)
