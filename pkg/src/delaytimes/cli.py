"""Command-line front end.

Every command prints a JSON :class:`~delaytimes.store.TableDocument` (or CSV
where requested) to stdout, or writes it to ``--out``.  Exit codes: 0 success,
1 usage error, 2 computation error, 3 verification failure.
"""
from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction

import mpmath

from . import __version__
from .asymptotics import a_constant, b_constant, ratio_diagnostics
from .coeffs import coeff_table
from .genfun import f_beta1_pair, f_beta2_series, j_eval, j_ratfunc, p_polynomial, r_polynomial
from .integrality import verify_pk, verify_rg, verify_table
from .moments import WishartMomentQuery, check_beta, tau_symbolic, wishart_moment
from .montecarlo import RNG_SPEC, sample_delay_moment
from .reproduce import TARGETS, reproduce_report
from .store import TableDocument

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE, EXIT_FAIL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _rational(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {s!r}") from None


def _nonneg(s: str) -> int:
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _range(s: str) -> tuple[int, int]:
    m = re.fullmatch(r"(\d+)\.\.(\d+)", s)
    if not m or int(m.group(1)) > int(m.group(2)):
        raise argparse.ArgumentTypeError(f"expected LO..HI with LO <= HI, got {s!r}")
    return int(m.group(1)), int(m.group(2))


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="delaytimes", description="Moments of proper delay times and their 1/N expansions.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    beta = {"type": int, "choices": (1, 2), "required": True}

    s = sub.add_parser("moments", help="tau_k(N) as rational functions of N or at a given N")
    s.add_argument("--beta", **beta)
    s.add_argument("--k-max", type=_nonneg, required=True)
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--symbolic", action="store_true")
    mode.add_argument("--n-value", type=_rational)
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.add_argument("--out")

    s = sub.add_parser("wishart", help="exact E[Tr W^k] for the Wishart-Laguerre ensemble")
    s.add_argument("--beta", **beta)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--alpha", type=_rational, required=True)
    s.add_argument("--n", type=_positive, required=True)

    s = sub.add_parser("coeffs", help="table of 1/N expansion coefficients tau_{k,g}")
    s.add_argument("--beta", **beta)
    s.add_argument("--k-max", type=_nonneg, required=True)
    s.add_argument("--g-max", type=_nonneg, required=True)

    s = sub.add_parser("genfun", help="generating-function families")
    s.add_argument("--which", choices=("P", "R", "F", "f", "J"), required=True)
    s.add_argument("--beta", **beta)
    s.add_argument("--index", type=_nonneg, required=True)
    s.add_argument("--order", type=_nonneg, default=12)
    s.add_argument("--zeta", type=_rational)

    s = sub.add_parser("asympt", help="asymptotic constants A_g, B_k")
    which = s.add_mutually_exclusive_group(required=True)
    which.add_argument("--a", type=_positive, metavar="G")
    which.add_argument("--b", type=int, metavar="K")
    s.add_argument("--digits", type=_positive, default=30)
    s.add_argument("--check-range", type=_range, metavar="LO..HI")

    s = sub.add_parser("verify-integrality", help="integrality checks")
    s.add_argument("--target", choices=("Pk", "Rg", "table"), required=True)
    s.add_argument("--k-star", type=_nonneg)
    s.add_argument("--g-star", type=_nonneg)
    s.add_argument("--beta", type=int, choices=(1, 2))

    s = sub.add_parser("mc", help="Monte Carlo estimate of tau_k")
    s.add_argument("--beta", **beta)
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--k", type=_positive, required=True)
    s.add_argument("--samples", type=_positive, required=True)
    s.add_argument("--seed", type=_nonneg, required=True)
    s.add_argument("--shards", type=_positive, default=1)

    s = sub.add_parser("reproduce", help="recompute published values and diff")
    s.add_argument("--target", choices=TARGETS, required=True)
    return p


# ---------------------------------------------------------------------------


def _cmd_moments(a):
    taus = tau_symbolic(a.beta, a.k_max)
    meta = {"beta": a.beta, "k_max": a.k_max}
    if a.n_value is None:
        if a.format == "csv":
            raise UsageError("CSV output is only available together with --n-value")
        payload = {f"tau_{t.k}": t.value for t in taus[1:]}
        return TableDocument("moments.symbolic", meta, payload)
    meta["N"] = str(a.n_value)
    rows = [[t.k, t(a.n_value)] for t in taus[1:]]
    return TableDocument("moments.value", meta, {"columns": ["k", "tau_k"], "rows": rows})


def _cmd_wishart(a):
    q = WishartMomentQuery(a.beta, a.k, a.alpha, a.n)
    meta = {"beta": a.beta, "k": a.k, "alpha": str(a.alpha), "N": a.n}
    return TableDocument("wishart", meta, {"value": wishart_moment(q)})


def _cmd_coeffs(a):
    t = coeff_table(a.beta, a.k_max, a.g_max)
    cols = ["k"] + [f"g={g}" for g in range(a.g_max + 1)]
    payload = {"columns": cols, "rows": [[k] + t.column(k) for k in range(a.k_max + 1)]}
    if t.aux_entries:
        payload["aux_rows"] = [[k] + t.aux_column(k) for k in range(a.k_max + 1)]
    return TableDocument("coeffs", {"beta": a.beta, "k_max": a.k_max, "g_max": a.g_max}, payload)


def _series_payload(s):
    return {"order": s.order, "coeffs": list(s.coeffs)}


def _cmd_genfun(a):
    meta = {"which": a.which, "beta": a.beta, "index": a.index}
    w, i = a.which, a.index
    if w in ("P", "R", "J") and a.beta != 2:
        raise ValueError(f"{w} is only defined for beta = 2")
    if w == "f" and a.beta != 1:
        raise ValueError("f is only defined for beta = 1")
    if w == "P":
        return TableDocument("genfun.P", meta, {"polynomial": p_polynomial(i)})
    if w == "R":
        return TableDocument("genfun.R", meta, {"polynomial": r_polynomial(i).poly})
    if w == "J":
        if a.zeta is not None:
            meta["zeta"] = str(a.zeta)
            return TableDocument("genfun.J", meta, {"value": j_eval(i, a.zeta)})
        return TableDocument("genfun.J", meta, {"rational_function": j_ratfunc(i)})
    meta["order"] = a.order
    if a.beta == 2:
        return TableDocument("genfun.F", meta, {"series": _series_payload(f_beta2_series(i, a.order))})
    F, f = f_beta1_pair(i, a.order)
    s = F if w == "F" else f
    return TableDocument(f"genfun.{w}", meta, {"series": _series_payload(s.to_series())})


def _cmd_asympt(a):
    meta = {"digits": a.digits}
    if a.a is not None:
        c = a_constant(a.a, a.digits)
        meta["g"] = a.a
        payload = {"A": mpmath.nstr(c.numeric, a.digits)}
        if a.check_range:
            lo, hi = a.check_range
            rep = ratio_diagnostics("k_to_inf", a.a, range(max(lo, 1), hi + 1), digits=a.digits)
            payload["ratios"] = [[k, mpmath.nstr(r, 15)] for k, r in rep.ratios]
            payload["monotone_toward_one"] = rep.monotone_toward_one
    else:
        B = b_constant(a.b)
        meta["k"] = a.b
        with mpmath.workdps(a.digits):
            num = mpmath.mpf(B.numerator) / B.denominator
            payload = {"B": B, "B_numeric": mpmath.nstr(num, a.digits)}
        if a.check_range:
            lo, hi = a.check_range
            rep = ratio_diagnostics("g_to_inf", a.b, range(max(lo, 1), hi + 1))
            payload["ratios"] = [[g, r] for g, r in rep.ratios]
            payload["monotone_toward_one"] = rep.monotone_toward_one
    return TableDocument("asympt", meta, payload)


def _cmd_verify(a):
    if a.target == "Pk":
        rep = verify_pk(2000 if a.k_star is None else a.k_star)
    elif a.target == "Rg":
        rep = verify_rg(40 if a.g_star is None else a.g_star)
    else:
        betas = (1, 2) if a.beta is None else (a.beta,)
        k_max = 50 if a.k_star is None else a.k_star
        g_max = 30 if a.g_star is None else a.g_star
        reps = [verify_table(b, k_max, g_max) for b in betas]
        failed = [r for r in reps if not r.passed]
        rep = failed[0] if failed else reps[-1]
        rep.checked = {"betas": list(betas), "k_max": k_max, "g_max": g_max}
    payload = {
        "verdict": rep.verdict.upper(),
        "checked": rep.checked,
        "witness": rep.witness,
        "wall_time_s": round(rep.wall_time, 3),
    }
    if rep.details:
        payload["details"] = rep.details
    doc = TableDocument(f"verify.{a.target}", {}, payload, exact=False)
    return doc, (EXIT_OK if rep.passed else EXIT_FAIL)


def _cmd_mc(a):
    check_beta(a.beta)
    est = sample_delay_moment(a.beta, a.n, a.k, a.samples, a.seed, a.shards)
    exact = tau_symbolic(a.beta, a.k)[a.k](a.n)
    meta = {"beta": a.beta, "N": a.n, "k": a.k, "samples": a.samples, "seed": a.seed, "shards": a.shards,
            "rng": RNG_SPEC}
    payload = {
        "mean": est.mean,
        "stderr": est.stderr,
        "exact": exact,
        "exact_float": float(exact),
        "z_score": est.z_score(exact),
    }
    return TableDocument("mc", meta, payload, exact=False)


def _cmd_reproduce(a):
    rep = reproduce_report(a.target)
    payload = {
        "verdict": rep.verdict,
        "checked": rep.checked,
        "mismatches": [{"location": l, "expected": e, "got": g} for l, e, g in rep.mismatches],
    }
    return TableDocument(f"reproduce.{a.target}", {}, payload, exact=False), (EXIT_OK if rep.passed else EXIT_FAIL)


_COMMANDS = {
    "moments": _cmd_moments,
    "wishart": _cmd_wishart,
    "coeffs": _cmd_coeffs,
    "genfun": _cmd_genfun,
    "asympt": _cmd_asympt,
    "verify-integrality": _cmd_verify,
    "mc": _cmd_mc,
    "reproduce": _cmd_reproduce,
}


def run_command(argv=None, stdout=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    try:
        result = _COMMANDS[args.command](args)
    except UsageError as e:
        print(f"delaytimes: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ArithmeticError, OverflowError) as e:
        print(f"delaytimes: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_COMPUTE
    doc, code = result if isinstance(result, tuple) else (result, EXIT_OK)
    text = doc.to_csv() if getattr(args, "format", "json") == "csv" else doc.to_json() + "\n"
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main(argv=None) -> None:
    sys.exit(run_command(argv))


if __name__ == "__main__":  # pragma: no cover
    main()
