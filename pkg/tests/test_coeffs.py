from fractions import Fraction as F

import pytest

from delaytimes import golden
from delaytimes.algebra import expand_in_invN
from delaytimes.coeffs import coeff_table, coeff_table_beta1, coeff_table_beta2, schroeder
from delaytimes.moments import tau_beta1_symbolic, tau_symbolic


def test_schroeder_values():
    assert schroeder(0) == 1
    assert schroeder(4) == 22
    assert schroeder(8) == 8558
    assert [schroeder(k) for k in range(10)] == [1, 1, 2, 6, 22, 90, 394, 1806, 8558, 41586]


def test_beta2_examples():
    t = coeff_table_beta2(8, 6)
    assert t[3, 2] == 30 and t[4, 4] == 3262 and t[2, 6] == 2


def test_beta1_examples():
    t = coeff_table_beta1(8, 6)
    assert t[3, 1] == 18 and t[6, 3] == 1092460
    assert t.aux_entries[2, 1] == -8


@pytest.mark.parametrize("beta", [1, 2])
def test_reference_table(beta):
    rows = golden.TABLES[beta]
    t = coeff_table(beta, 8, 6)
    for k, row in enumerate(rows):
        assert t.column(k) == [F(v) for v in row]


@pytest.mark.parametrize("beta", [1, 2])
def test_structural_invariants(beta):
    t = coeff_table(beta, 15, 10)
    assert t.row(0) == [schroeder(k) for k in range(16)]
    for k in (0, 1):
        assert t.column(k) == [1] + [0] * 10
    if beta == 2:
        for g in range(1, 11, 2):
            assert all(v == 0 for v in t.row(g))


def test_beta1_aux_boundary_columns():
    t = coeff_table_beta1(6, 8)
    for g in range(9):
        assert t.aux_entries[0, g] == (g == 0) - (g == 1)
        assert t.aux_entries[1, g] == (-1) ** g * (2 - (g == 0))


@pytest.mark.parametrize("beta", [1, 2])
def test_expansion_matches_table(beta):
    k_max, g_max = 8, 8
    t = coeff_table(beta, k_max, g_max)
    for tau in tau_symbolic(beta, k_max):
        assert expand_in_invN(tau.value, g_max) == t.column(tau.k)


def test_aux_expansion_matches_table():
    _, bs = tau_beta1_symbolic(8)
    t = coeff_table_beta1(8, 8)
    for b in bs:
        assert expand_in_invN(b.value, 8) == t.aux_column(b.k)


def test_layer1_resolution():
    # running the recursion from a zero layer -1 reproduces the closed-form first layer
    a = coeff_table_beta1(12, 4)
    b = coeff_table_beta1(12, 4, layer1_from_recursion=True)
    assert a.entries == b.entries and a.aux_entries == b.aux_entries
    assert a.aux_entries[0, 1] == -1


@pytest.mark.parametrize("beta", [1, 2])
def test_nonnegative_integers(beta):
    t = coeff_table(beta, 20, 20)
    assert all(v.denominator == 1 and v >= 0 for v in t.entries.values())
