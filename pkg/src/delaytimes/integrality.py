"""Integrality checks for the beta = 2 coefficients and for the tables.

``verify_pk`` streams the ``P_k`` recursion in integer arithmetic: each
step divides by ``k`` and any nonzero remainder is a witness that ``P_k`` is
not integral.  ``verify_rg`` checks the two conditions on ``R_g`` that force
every ``tau_{k,g}`` (fixed even ``g``) to be a nonnegative integer.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Optional

from .coeffs import coeff_table, coeff_table_beta2
from .genfun import r_polynomial
from .kernels import pk_step as _pk_step

try:  # gmpy2 integers are markedly faster for the multi-thousand-bit P_k coefficients
    from gmpy2 import mpz as _bigint
except ImportError:  # pragma: no cover
    _bigint = int

__all__ = [
    "VerificationReport",
    "legendre_at_3",
    "c_sequence",
    "verify_pk",
    "verify_rg",
    "verify_table",
]


@dataclass
class VerificationReport:
    target: str
    checked: dict
    verdict: str  # "pass" | "fail"
    witness: Optional[dict] = None
    wall_time: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


def legendre_at_3(ell: int) -> int:
    """``p_ell(3) = sum_p C(ell, p)^2 2^p``."""
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    return sum(comb(ell, p) ** 2 * 2**p for p in range(ell + 1))


def c_sequence(twice_exponent: int, ell_max: int) -> list[int]:
    """Coefficients ``C_0..C_ellmax`` of ``y(z)^(-twice_exponent/2)``.

    ``twice_exponent = 3g - 1`` gives the sequence used for ``R_g``; 1 gives
    ``1/sqrt(y)`` and 2 gives ``1/y``.  Built from the first-order recurrence
    ``(n+1) C_{n+1} = 3(2n+m) C_n - (n-1+m) C_{n-1}`` (``m = twice_exponent``)
    and checked to be nondecreasing.
    """
    m = twice_exponent
    if m < 1:
        raise ValueError("twice_exponent must be positive")
    out = [1]
    prev = 0
    for n in range(ell_max):
        num = 3 * (2 * n + m) * out[n] - (n - 1 + m) * prev
        q, r = divmod(num, n + 1)
        if r:
            raise ArithmeticError(f"C_{n + 1} is not an integer")
        prev = out[n]
        out.append(q)
    for ell in range(ell_max):
        if out[ell + 1] < out[ell]:
            raise ArithmeticError(f"monotonicity failed: C_{ell + 1} < C_{ell}")
    return out


def verify_pk(
    k_star: int,
    tamper: Callable[[int, list], list] | None = None,
) -> VerificationReport:
    """Check that ``P_0..P_kstar`` have nonnegative integer coefficients.

    Only two consecutive polynomials are kept.  ``tamper(k, coeffs)`` may
    replace ``P_k`` before it is checked (mutation testing).
    """
    t0 = time.perf_counter()
    a, b = [_bigint(1)], [_bigint(1)]  # P_1, P_0
    witness = None
    for k in range(2, k_star + 1):
        coeffs, bad = _pk_step(k, a, b)
        if coeffs is None:
            witness = {"k": k, "coefficient": bad, "reason": "not an integer"}
            break
        if tamper is not None:
            coeffs = [_bigint(c) for c in tamper(k, [int(c) for c in coeffs])]
        neg = next((i for i, c in enumerate(coeffs) if c < 0), None)
        if neg is not None:
            witness = {"k": k, "coefficient": neg, "value": str(int(coeffs[neg])), "reason": "negative"}
            break
        a, b = coeffs, a
    return VerificationReport(
        "Pk",
        {"k_star": k_star},
        "fail" if witness else "pass",
        witness,
        time.perf_counter() - t0,
    )


def verify_rg(g_star: int, check_depth: int = 10) -> VerificationReport:
    """For even ``g <= g_star``: every ``a_{g,j}`` is an integer and ``sum_j a_{g,j} >= 0``.

    The functional form ``F_g = R_g / y^((3g-1)/2)`` is verified on the way
    (tail depth ``check_depth``).  A zero coefficient sum is recorded under
    ``details["zero_sum"]`` as a separate outcome.
    """
    t0 = time.perf_counter()
    gs = list(range(2, g_star + 1, 2))
    per_g = {}
    witness = None
    if gs:
        table = coeff_table_beta2(2 * gs[-1] - 2 + check_depth, gs[-1])
    for g in gs:
        R = r_polynomial(g, check_depth, table).poly
        nonint = next((j for j, c in enumerate(R.coeffs) if c.denominator != 1), None)
        total = sum(R.coeffs)
        sign = "positive" if total > 0 else ("zero" if total == 0 else "negative")
        per_g[g] = {"integer": nonint is None, "sum": str(total), "sum_sign": sign}
        if witness is None and nonint is not None:
            witness = {"g": g, "coefficient": nonint, "value": str(R.coeffs[nonint]), "reason": "not an integer"}
        if witness is None and sign == "negative":
            witness = {"g": g, "coefficient": None, "value": str(total), "reason": "negative coefficient sum"}
    return VerificationReport(
        "Rg",
        {"g_star": g_star, "check_depth": check_depth},
        "fail" if witness else "pass",
        witness,
        time.perf_counter() - t0,
        {"per_g": per_g, "zero_sum": [g for g, r in per_g.items() if r["sum_sign"] == "zero"]},
    )


def verify_table(beta: int, k_max: int, g_max: int, table=None) -> VerificationReport:
    """Every ``tau_{k,g}`` in range is a nonnegative integer; failures are reported, never repaired."""
    t0 = time.perf_counter()
    if table is None:
        table = coeff_table(beta, k_max, g_max)
    witness = None
    for k in range(k_max + 1):
        for g in range(g_max + 1):
            v = table.entries[k, g]
            if v.denominator != 1 or v < 0:
                witness = {"k": k, "g": g, "value": str(v)}
                break
        if witness:
            break
    return VerificationReport(
        "table",
        {"beta": beta, "k_max": k_max, "g_max": g_max},
        "fail" if witness else "pass",
        witness,
        time.perf_counter() - t0,
    )
