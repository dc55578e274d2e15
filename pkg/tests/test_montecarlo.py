from fractions import Fraction as F
from functools import lru_cache

import numpy as np
import pytest

from delaytimes.moments import DivergentMomentError, tau_symbolic
from delaytimes.montecarlo import (
    RNG_SPEC,
    eigvals_symmetric,
    sample_delay_moment,
    sample_delay_moments,
    sample_wishart_moments,
)


def test_eig_identity():
    assert np.allclose(eigvals_symmetric(np.eye(5)), np.ones(5))


def test_eig_swap():
    assert np.allclose(eigvals_symmetric(np.array([[0.0, 1.0], [1.0, 0.0]])), [-1.0, 1.0])


def test_eig_trace_identity():
    rng = np.random.default_rng(3)
    x = rng.standard_normal((20, 20))
    a = x + x.T
    w = eigvals_symmetric(a)
    assert abs(w.sum() - np.trace(a)) <= 1e-10 * abs(np.trace(a)) + 1e-12 * np.abs(a).sum()
    assert np.allclose(w, np.linalg.eigvalsh(a), atol=1e-10)


def test_eig_hermitian():
    rng = np.random.default_rng(4)
    x = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
    h = x + x.conj().T
    assert np.allclose(eigvals_symmetric(h), np.linalg.eigvalsh(h), atol=1e-10)


def test_eig_rejects_asymmetric_and_large():
    with pytest.raises(ValueError, match="symmetric"):
        eigvals_symmetric(np.array([[1.0, 2.0], [0.0, 1.0]]))
    with pytest.raises(ValueError):
        eigvals_symmetric(np.eye(257))
    with pytest.raises(ValueError):
        eigvals_symmetric(np.ones((2, 3)))


def test_eig_nonconvergence():
    a = np.array([[1.0, 2.0, 3.0], [2.0, 4.0, 5.0], [3.0, 5.0, 6.0]])
    with pytest.raises(ArithmeticError, match="converge"):
        eigvals_symmetric(a, max_sweeps=0)


# --- delay-time moments ---------------------------------------------------

@lru_cache(maxsize=None)
def _beta2_n8():
    return sample_delay_moments(2, 8, [1, 2], 100_000, 20240601, shards=2)


def test_beta2_tau1():
    est = _beta2_n8()[0]
    assert abs(est.mean - 1) <= 3 * est.stderr


def test_beta2_tau2():
    est = _beta2_n8()[1]
    assert abs(est.mean - 128 / 63) <= 3 * est.stderr


def test_beta1_tau2():
    est = sample_delay_moment(1, 9, 2, 100_000, 20240602, shards=2)
    assert abs(est.mean - 81 / 35) <= 3 * est.stderr


def test_joint_run_beta2_n10():
    exact = tau_symbolic(2, 3)
    ests = sample_delay_moments(2, 10, [1, 2, 3], 40_000, 99)
    for e in ests:
        assert abs(e.mean - float(exact[e.k](10))) <= 4 * e.stderr


@pytest.mark.parametrize("beta,n,k", [(2, 3, 3), (2, 2, 5), (1, 4, 2), (1, 7, 4)])
def test_divergent_moment(beta, n, k):
    with pytest.raises(DivergentMomentError, match="divergent moment"):
        sample_delay_moment(beta, n, k, 10, 1)


def test_argument_validation():
    with pytest.raises(ValueError):
        sample_delay_moment(2, 5, 1, 0, 1)
    with pytest.raises(ValueError):
        sample_delay_moment(2, 5, 1, 10, -1)
    with pytest.raises(ValueError):
        sample_delay_moment(4, 5, 1, 10, 1)


@pytest.mark.parametrize("beta", [1, 2])
def test_shard_merge_bitwise(beta):
    n = 7
    a = sample_delay_moments(beta, n, [1, 2], 5_500, 2024, shards=1)
    b = sample_delay_moments(beta, n, [1, 2], 5_500, 2024, shards=4)
    for x, y in zip(a, b):
        assert x.mean == y.mean and x.stderr == y.stderr


def test_determinism_and_seed_sensitivity():
    a = sample_delay_moment(2, 6, 1, 3000, 5)
    b = sample_delay_moment(2, 6, 1, 3000, 5)
    c = sample_delay_moment(2, 6, 1, 3000, 6)
    assert a == b and a.mean != c.mean


def test_estimate_metadata():
    e = sample_delay_moment(2, 5, 1, 1500, 77, shards=3)
    assert (e.beta, e.N, e.k, e.samples, e.seed, e.shards) == (2, 5, 1, 1500, 77, 3)
    assert e.rng == RNG_SPEC and e.rng["generator"] == "PCG64"
    assert e.stderr > 0


def test_single_sample_has_zero_stderr():
    e = sample_delay_moment(2, 4, 1, 1, 3)
    assert e.stderr == 0.0


def test_scaling_identity():
    # mean of (1/N) Tr W^-1 equals tau_1 = 1 for either beta
    for beta, n in ((2, 6), (1, 9)):
        e = sample_delay_moment(beta, n, 1, 20_000, 11)
        assert abs(e.mean - 1) <= 4 * e.stderr


@pytest.mark.parametrize("n,alpha", [(4, 3), (5, 2)])
def test_real_wishart_positive_moments(n, alpha):
    from delaytimes.moments import real_wishart_moments

    exact = real_wishart_moments(F(n), F(alpha), 0, 3)
    res = sample_wishart_moments(1, n, alpha, [1, 2, 3], 40_000, 8)
    for k, (m, s) in zip([1, 2, 3], res):
        assert abs(m - float(exact[k])) <= 4 * s


def test_complex_wishart_inverse_moment():
    from delaytimes.moments import complex_wishart_moments

    exact = complex_wishart_moments(F(4), F(3), -2, 1)
    res = sample_wishart_moments(2, 4, 3, [-1, -2], 40_000, 9)
    for k, (m, s) in zip([-1, -2], res):
        assert abs(m - float(exact[k])) <= 4 * s


def test_wishart_divergence_guard():
    with pytest.raises(DivergentMomentError):
        sample_wishart_moments(1, 4, 3, [-2], 10, 1)
