"""Exact moments of proper delay times, their 1/N expansions, and checks thereof."""
__version__ = "0.1.0"

from .algebra import AlgebraicSeries, Poly, RatFunc, Rational, TruncSeries, expand_in_invN  # noqa: E402
from .asymptotics import a_constant, b_constant, ratio_diagnostics  # noqa: E402
from .coeffs import CoeffTable, coeff_table, schroeder  # noqa: E402
from .genfun import f_beta1_pair, f_beta2_series, j_eval, p_polynomial, phi_ode_residual, r_polynomial  # noqa: E402
from .integrality import verify_pk, verify_rg, verify_table  # noqa: E402
from .kernels import BACKEND  # noqa: E402
from .moments import (  # noqa: E402
    DivergentMomentError,
    WishartMomentQuery,
    tau_exact_sum_MS,
    tau_exact_sum_Nov,
    tau_symbolic,
    wishart_moment,
)
from .montecarlo import MCEstimate, eigvals_symmetric, sample_delay_moment  # noqa: E402
from .reproduce import reproduce_report  # noqa: E402

__all__ = [
    "__version__", "BACKEND",
    "Rational", "Poly", "RatFunc", "TruncSeries", "AlgebraicSeries", "expand_in_invN",
    "tau_symbolic", "tau_exact_sum_MS", "tau_exact_sum_Nov", "WishartMomentQuery", "wishart_moment",
    "DivergentMomentError",
    "CoeffTable", "coeff_table", "schroeder",
    "p_polynomial", "j_eval", "r_polynomial", "f_beta2_series", "f_beta1_pair", "phi_ode_residual",
    "a_constant", "b_constant", "ratio_diagnostics",
    "verify_pk", "verify_rg", "verify_table",
    "MCEstimate", "eigvals_symmetric", "sample_delay_moment",
    "reproduce_report",
]
