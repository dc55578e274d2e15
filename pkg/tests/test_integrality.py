import pytest

from delaytimes.algebra import SPECTRAL_CURVE
from delaytimes.coeffs import coeff_table_beta1, coeff_table_beta2
from delaytimes.genfun import r_polynomial
from delaytimes.integrality import c_sequence, legendre_at_3, verify_pk, verify_rg, verify_table
from delaytimes.kernels import get_backend


def test_legendre_examples():
    assert [legendre_at_3(l) for l in (0, 1, 3)] == [1, 3, 63]
    with pytest.raises(ValueError):
        legendre_at_3(-1)


def test_legendre_is_inverse_sqrt_y_series():
    from fractions import Fraction

    s = SPECTRAL_CURVE.power_series(Fraction(-1, 2), 50)
    assert list(s.coeffs) == [legendre_at_3(l) for l in range(51)]


def test_c_sequence_modes():
    assert c_sequence(2, 4)[:3] == [1, 6, 35]
    assert c_sequence(1, 4)[:3] == [1, 3, 13]
    assert c_sequence(1, 20) == [legendre_at_3(l) for l in range(21)]
    assert c_sequence(5, 0) == [1]


def test_c_sequence_matches_series_power():
    from fractions import Fraction

    for g in (2, 4, 6):
        m = 3 * g - 1
        assert c_sequence(m, 30) == list(SPECTRAL_CURVE.power_series(Fraction(-m, 2), 30).coeffs)


def test_bound_chain():
    t = coeff_table_beta2(60, 10)
    for g in range(2, 11, 2):
        a = r_polynomial(g, table=t).poly.coeffs
        C = c_sequence(3 * g - 1, 60)
        total = sum(a)
        for k in range(2 * g - 2, 61):
            conv = sum(a[j] * C[k - j] for j in range(len(a)) if k - j >= 0)
            assert conv == t[k, g]
            assert C[k - (2 * g - 2)] * total <= t[k, g]


def test_verify_pk_small():
    r = verify_pk(9)
    assert r.passed and r.witness is None and r.wall_time >= 0


def test_verify_pk_mutation():
    def tamper(k, cs):
        if k == 5:
            cs[0] = -cs[0]
        return cs

    r = verify_pk(20, tamper=tamper)
    assert r.verdict == "fail"
    assert r.witness["k"] == 5 and r.witness["coefficient"] == 0


def test_verify_pk_nonintegral_witness(monkeypatch):
    import delaytimes.integrality as I

    real = I._pk_step

    def broken(k, a, b):
        if k == 7:
            a = list(a)
            a[1] = a[1] + 1
        return real(k, a, b)

    monkeypatch.setattr(I, "_pk_step", broken)
    r = verify_pk(10)
    assert not r.passed and r.witness["k"] == 7 and r.witness["reason"] == "not an integer"


@pytest.mark.parametrize("backend", ["python", "cython"])
def test_verify_pk_backends(backend, monkeypatch):
    import delaytimes.integrality as I

    try:
        mod = get_backend(backend)
    except ImportError:
        pytest.skip("compiled backend not built")
    monkeypatch.setattr(I, "_pk_step", mod.pk_step)
    assert verify_pk(300).passed


def test_verify_rg_examples():
    r = verify_rg(10)
    assert r.passed
    assert r.details["per_g"][4] == {"integer": True, "sum": "60", "sum_sign": "positive"}
    assert r.details["zero_sum"] == []


def test_verify_table_examples():
    assert verify_table(1, 8, 6).passed
    assert verify_table(2, 8, 6).passed
    assert verify_table(1, 20, 20).passed


def test_verify_table_reports_failure():
    t = coeff_table_beta1(8, 6)
    t.entries[5, 3] = -t.entries[5, 3]
    r = verify_table(1, 8, 6, table=t)
    assert r.verdict == "fail" and (r.witness["k"], r.witness["g"]) == (5, 3)
    t2 = coeff_table_beta2(8, 6)
    from fractions import Fraction

    t2.entries[4, 2] = Fraction(1, 2)
    assert verify_table(2, 8, 6, table=t2).witness["value"] == "1/2"


def test_verify_pk_deterministic():
    a, b = verify_pk(400), verify_pk(400)
    assert (a.verdict, a.witness) == (b.verdict, b.witness)
