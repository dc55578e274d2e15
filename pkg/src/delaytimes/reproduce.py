"""Recompute published reference values and diff them against :mod:`golden`."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import golden
from .algebra import Poly, RatFunc
from .coeffs import coeff_table
from .genfun import f_beta1_family, p_polynomial, r_polynomial
from .moments import tau_symbolic

__all__ = ["ReproductionReport", "reproduce_report", "TARGETS", "golden_moment"]

TARGETS = ("appendixA", "tableI", "appendixB")


@dataclass
class ReproductionReport:
    target: str
    checked: int = 0
    mismatches: list = field(default_factory=list)  # (location, expected, got)
    wall_time: float = 0.0

    @property
    def verdict(self) -> str:
        return "PASS" if not self.mismatches else "FAIL"

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def compare(self, location: str, expected, got) -> None:
        self.checked += 1
        if expected != got:
            self.mismatches.append((location, str(expected), str(got)))

    def summary(self) -> str:
        lines = [f"{self.target}: {self.verdict} ({self.checked} checked, {len(self.mismatches)} mismatches)"]
        for loc, exp, got in self.mismatches:
            lines.append(f"  {loc}: expected {exp}, got {got}")
        return "\n".join(lines)


def golden_moment(beta: int, k: int) -> RatFunc:
    num, factors = golden.MOMENTS[beta][k]
    den = Poly([1], "N")
    for f in factors:
        den = den * Poly(f, "N")
    return RatFunc(Poly(num, "N"), den)


def _finite_n_moments(rep: ReproductionReport) -> None:
    for beta in (2, 1):
        taus = tau_symbolic(beta, 6)
        for k in range(2, 7):
            rep.compare(f"tau_{k}(beta={beta})", golden_moment(beta, k), taus[k].value)


def _coefficient_table(rep: ReproductionReport) -> None:
    for beta, rows in golden.TABLES.items():
        table = coeff_table(beta, len(rows) - 1, len(rows[0]) - 1)
        for k, row in enumerate(rows):
            for g, v in enumerate(row):
                rep.compare(f"tau_{{{k},{g}}}(beta={beta})", Fraction(v), table.entries[k, g])


def _polynomial_families(rep: ReproductionReport) -> None:
    for g, coeffs in golden.R_POLYS.items():
        rep.compare(f"R_{g}", Poly(coeffs, "z"), r_polynomial(g).poly)
    for k, coeffs in golden.P_POLYS.items():
        rep.compare(f"P_{k}", Poly(coeffs, "zeta"), p_polynomial(k))
    order = golden.F1_SERIES_ORDER
    Fs, _ = f_beta1_family(max(golden.F1_SERIES), order)
    for g, coeffs in golden.F1_SERIES.items():
        got = Fs[g].to_series().truncate(order)
        rep.compare(f"F_{g}^(1) through z^{order}", [Fraction(c) for c in coeffs], list(got.coeffs))


_RUNNERS = {"appendixA": _finite_n_moments, "tableI": _coefficient_table, "appendixB": _polynomial_families}


def reproduce_report(target: str) -> ReproductionReport:
    if target not in _RUNNERS:
        raise ValueError(f"unknown target {target!r}; expected one of {', '.join(TARGETS)}")
    rep = ReproductionReport(target)
    t0 = time.perf_counter()
    _RUNNERS[target](rep)
    rep.wall_time = time.perf_counter() - t0
    return rep
