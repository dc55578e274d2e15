import numpy as np
import pytest
from hypothesis import given, strategies as st

from delaytimes import kernels
from delaytimes.kernels import get_backend


def _backends():
    out = [get_backend("python")]
    try:
        out.append(get_backend("cython"))
    except ImportError:
        pass
    return out


def test_backend_selected():
    assert kernels.BACKEND in ("cython", "python")


@pytest.mark.parametrize("mod", _backends(), ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_jacobi_against_lapack(mod):
    rng = np.random.default_rng(1)
    x = rng.standard_normal((50, 12, 12))
    a = x @ np.swapaxes(x, 1, 2)
    w, sweeps = mod.jacobi_eigvals_batch(a)
    assert np.all(sweeps >= 0)
    assert np.allclose(np.sort(w, axis=1), np.linalg.eigvalsh(a), rtol=1e-11, atol=1e-11)


@pytest.mark.parametrize("mod", _backends(), ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_jacobi_reports_nonconvergence(mod):
    a = np.array([[[2.0, 1.0], [1.0, 3.0]]])
    _, sweeps = mod.jacobi_eigvals_batch(a, 1e-12, 0)
    assert sweeps[0] == -1


def test_jacobi_input_validation():
    with pytest.raises(ValueError):
        get_backend("python").jacobi_eigvals_batch(np.zeros((2, 3)))
    with pytest.raises(ValueError):
        get_backend("fortran")


@given(st.integers(1, 9), st.integers(0, 2**32 - 1))
def test_backends_agree(n, seed):
    mods = _backends()
    if len(mods) < 2:
        pytest.skip("compiled backend not built")
    rng = np.random.default_rng(seed)
    x = rng.standard_normal((4, n, n))
    a = x + np.swapaxes(x, 1, 2)
    (w1, s1), (w2, s2) = (m.jacobi_eigvals_batch(a) for m in mods)
    assert np.array_equal(s1, s2)
    assert np.allclose(np.sort(w1, axis=1), np.sort(w2, axis=1), rtol=1e-12, atol=1e-12)


@given(st.integers(2, 60))
def test_pk_step_backends_agree(k):
    mods = _backends()
    a = [3 * i + 1 for i in range(k // 2 + 1)]
    b = [2 * i + 5 for i in range(k // 2)]
    results = [m.pk_step(k, list(a), list(b)) for m in mods]
    assert all(r == results[0] for r in results)


def test_pk_step_with_gmpy2():
    gmpy2 = pytest.importorskip("gmpy2")
    for mod in _backends():
        out, bad = mod.pk_step(4, [gmpy2.mpz(6)], [gmpy2.mpz(2)])
        # 4 P_4 = 15 P_3 - (1 - 4 zeta) P_2  with P_3 = 6, P_2 = 2
        assert bad is None and [int(c) for c in out] == [22, 2]
