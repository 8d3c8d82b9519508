"""Command-line front end: ``lowzero <subcommand> [options]``.

Results go to stdout as JSON (or CSV where the result is a table), progress
and diagnostics go to stderr.  Exit status is 0 on success, 1 when a
computation fails and 2 for bad arguments.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import math
import sys
import time

from . import __version__
from .bounds import (
    PUBLISHED_CONSTANTS,
    bound_report,
    derive_inequality_constants,
    lemma3_property_check,
    recomputed_constants,
)
from .explicit_formula import quadratic_field, verify_34_35, weil_residual
from .fields import RATIONALS, FieldSpecError, NumberField, parse_field_spec
from .lfunctions import LFunctionSpec, hardy_z
from .primes import (
    SieveRangeError,
    chebyshev_psi,
    lambda_weighted_sum,
    mangoldt_sieve,
    rosser_bound,
    ROSSER_PSI_CONSTANT,
)
from .table1 import cmd_table1
from .testfn import fhat_agreement, sup_norm_F
from .zeros import DEFAULT_GRID_STEP, BRACKET_WIDTH, lowest_zero, scan_zeros, tau_quadratic

SCHEMA_VERSION = "1"

log = logging.getLogger("lowzero")


class UsageError(Exception):
    pass


def _round(obj):
    """Floats to 15 significant digits; non-finite floats become null."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return None
        return float(f"{obj:.15g}")
    if isinstance(obj, dict):
        return {str(k): _round(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round(v) for v in obj]
    if hasattr(obj, "item"):  # numpy scalars
        return _round(obj.item())
    return obj


def render_json(doc: dict) -> str:
    return json.dumps(_round(doc), indent=2, sort_keys=False) + "\n"


def render_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow(["" if v is None else (f"{v:.15g}" if isinstance(v, float) else v) for v in r])
    return buf.getvalue()


def _constants(args):
    if not getattr(args, "recomputed_constants", False):
        return PUBLISHED_CONSTANTS
    if getattr(args, "_recomputed", None) is None:
        args._recomputed = recomputed_constants()
    return args._recomputed


def _field_from_args(args) -> NumberField:
    if args.spec is not None:
        return parse_field_spec(args.spec)
    if args.disc is None or args.degree is None or args.r1 is None:
        raise UsageError("give --spec, or all of --disc, --degree and --r1")
    r2, rem = divmod(args.degree - args.r1, 2)
    if rem or r2 < 0:
        raise UsageError("degree - r1 must be a nonnegative even number")
    return NumberField(args.degree, args.r1, r2, int(args.disc), disc_is_field_disc=True, label=f"disc {args.disc}")


def _lspec(args) -> LFunctionSpec:
    if args.zeta:
        return LFunctionSpec.zeta()
    if args.d is None:
        raise UsageError("give --zeta or --d <fundamental discriminant>")
    try:
        return LFunctionSpec.dirichlet(int(args.d))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


# ---------------------------------------------------------------- commands


def cmd_table1_cli(args):
    c = _constants(args)
    rows = cmd_table1(slow=args.slow, constants=c, progress=lambda m: print(m, file=sys.stderr))
    dicts = [r.to_dict() for r in rows]
    if args.format == "csv":
        header = list(dicts[0])
        return None, render_csv(header, [[("; ".join(v) if isinstance(v, list) else v) for v in d.values()] for d in dicts])
    ok = all(r.status in ("ok", "slow_skipped", "out_of_scope_tau") for r in rows)
    return {"rows": dicts, "all_ok": ok}, None


def cmd_bound(args):
    try:
        K = _field_from_args(args)
    except (FieldSpecError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    c = _constants(args)
    rep = bound_report(K, central_zero=args.central_zero, constants=c)
    return {"field": K.to_dict(), "report": rep.to_dict(), "_diagnostics": list(rep.reasons)}, None


def cmd_tau(args):
    if args.quadratic_m is not None:
        try:
            K = parse_field_spec(f"x^2+{args.quadratic_m}")
        except FieldSpecError as exc:
            raise UsageError(str(exc)) from exc
        res, source = tau_quadratic(K.disc, t_max=args.t_max, grid_step=args.grid_step)
        return {
            "field": K.to_dict(),
            "tau": res.tau,
            "status": res.status,
            "source": source,
            "bracket_width": res.bracket_width,
            "central_value": res.central_value,
            "t_max": res.t_max,
        }, None
    spec = _lspec(args)
    res = lowest_zero(spec, args.t_max, args.grid_step)
    return {
        "l_function": spec.label,
        "tau": res.tau,
        "status": res.status,
        "bracket_width": res.bracket_width,
        "central_value": res.central_value,
        "t_max": res.t_max,
    }, None


def cmd_zeros(args):
    spec = _lspec(args)
    if not 0 < args.max_height <= 100:
        raise UsageError("--max-height must lie in (0, 100]")
    res = scan_zeros(spec, args.max_height, args.grid_step)
    if args.format == "csv":
        return None, render_csv(["gamma", "bracket_width"], [[g, w] for g, w in res.zeros])
    return {
        "l_function": spec.label,
        "count": len(res.zeros),
        "zeros": [{"gamma": g, "bracket_width": w} for g, w in res.zeros],
        "suspected_even_order": res.suspected_even_order,
        "grid_step": res.grid_step,
        "evaluations": res.evaluations,
    }, None


def cmd_lvalue(args):
    spec = _lspec(args)
    t0 = time.perf_counter()
    v = hardy_z(spec, args.t)
    return {
        "l_function": spec.label,
        "t": v.t,
        "lambda": v.lambda_value,
        "err": v.err_estimate,
        "scale": v.scale,
        "n_terms": v.n_terms,
        "eval_seconds": time.perf_counter() - t0,
    }, None


def cmd_primes(args):
    try:
        if args.which == "psi":
            if args.x is None:
                raise UsageError("primes psi needs --x")
            table = mangoldt_sieve(max(2, math.ceil(args.x)), cap=args.sieve_cap)
            value = chebyshev_psi(args.x, table)
            bound = ROSSER_PSI_CONSTANT * args.x
            return {"x_or_T": args.x, "value": value, "bound": bound, "satisfied": value <= bound}, None
        if args.T is None:
            raise UsageError("primes sum needs --T")
        table = mangoldt_sieve(max(2, math.ceil(math.exp(args.T))), cap=args.sieve_cap)
        value = lambda_weighted_sum(args.T, table)
        bound = rosser_bound(args.T)
        return {"x_or_T": args.T, "value": value, "bound": bound, "satisfied": value <= bound}, None
    except SieveRangeError as exc:
        raise UsageError(str(exc)) from exc


def cmd_verify(args):
    which = args.which
    if which == "explicit-formula":
        if args.T is None or args.zero_height is None:
            raise UsageError("explicit-formula needs --T and --zero-height")
        if args.quadratic_d is not None:
            try:
                K, char = quadratic_field(args.quadratic_d)
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
        elif args.field == "Q":
            K, char = RATIONALS, None
        else:
            raise UsageError("give --field Q or --quadratic-d <d>")
        br = weil_residual(K, char, args.T, args.zero_height)
        out = br.to_dict()
        out["passed"] = abs(br.residual) <= args.residual_tol
        out["residual_tol"] = args.residual_tol
        return out, None
    if which == "integrals":
        grid = [float(x) for x in args.grid.split(",")] if args.grid else [0.314 * 1.1**k for k in range(48)]
        try:
            rep = verify_34_35(grid)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        rep["passed"] = rep["all_j_ok"] and rep["all_i_ok"]
        return rep, None
    if which == "constants":
        try:
            audit = derive_inequality_constants(args.tol)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        x_star, sup_f = sup_norm_F()
        agree = fhat_agreement()
        out = {
            "audit": audit.to_dict(),
            "sup_norm_F": {"argmax": x_star, "value": sup_f, "ceiling": 1.21},
            "fhat_agreement": agree,
            "checks": {
                "sup_F_below_ceiling": sup_f <= 1.21,
                "exp_delta_ok": abs(audit.exp_delta) <= 2e-3,
                "lin_delta_ok": abs(audit.lin_delta) <= 2e-3,
                "fhat_ok": agree["max_abs_diff"] <= 1e-8,
            },
        }
        out["passed"] = all(out["checks"].values())
        return out, None
    if which == "lemma3":
        rep = lemma3_property_check(args.n, args.seed)
        return rep, None
    raise UsageError(f"unknown selector {which!r}")


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lowzero", description="Bounds and computations for the lowest Dedekind zeta zero.")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--no-timing", action="store_true", help="emit seconds as null for byte-stable output")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("table1", help="reproduce the seven-field comparison table")
    s.add_argument("--slow", action="store_true", help="also compute tau for the two largest conductors")
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.add_argument("--recomputed-constants", action="store_true")
    s.set_defaults(func=cmd_table1_cli)

    s = sub.add_parser("bound", help="bound report for one field")
    s.add_argument("--spec")
    s.add_argument("--disc", type=int)
    s.add_argument("--degree", type=int)
    s.add_argument("--r1", type=int)
    s.add_argument("--central-zero", action="store_true")
    s.add_argument("--recomputed-constants", action="store_true")
    s.set_defaults(func=cmd_bound)

    def lsel(s):
        g = s.add_mutually_exclusive_group()
        g.add_argument("--zeta", action="store_true")
        g.add_argument("--d", type=int)

    s = sub.add_parser("tau", help="lowest zero of zeta, L(s, chi_d) or a quadratic Dedekind zeta")
    lsel(s)
    s.add_argument("--quadratic-m", type=int, help="field Q(sqrt(-m)) given as x^2+m")
    s.add_argument("--t-max", type=float, default=20.0)
    s.add_argument("--grid-step", type=float, default=DEFAULT_GRID_STEP)
    s.set_defaults(func=cmd_tau)

    s = sub.add_parser("zeros", help="all zeros up to a height")
    lsel(s)
    s.add_argument("--max-height", type=float, required=True)
    s.add_argument("--grid-step", type=float, default=DEFAULT_GRID_STEP)
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.set_defaults(func=cmd_zeros)

    s = sub.add_parser("lvalue", help="completed L-value on the critical line")
    lsel(s)
    s.add_argument("--t", type=float, required=True)
    s.set_defaults(func=cmd_lvalue)

    s = sub.add_parser("primes", help="Chebyshev psi or the Lambda(n)/sqrt(n) sum")
    s.add_argument("which", choices=("psi", "sum"))
    s.add_argument("--x", type=float)
    s.add_argument("--T", type=float)
    s.add_argument("--sieve-cap", type=float, default=None, help="raise the sieve cap (at most 1e9)")
    s.set_defaults(func=cmd_primes)

    s = sub.add_parser("verify", help="numerical checks of the explicit formula and the proof constants")
    s.add_argument("which", choices=("explicit-formula", "integrals", "constants", "lemma3"))
    s.add_argument("--field", choices=("Q",))
    s.add_argument("--quadratic-d", type=int)
    s.add_argument("--T", type=float)
    s.add_argument("--zero-height", type=float)
    s.add_argument("--residual-tol", type=float, default=0.1)
    s.add_argument("--grid", help="comma-separated T values in [0.314, 30]")
    s.add_argument("--tol", type=float, default=1e-8)
    s.add_argument("--n", type=int, default=10_000)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_verify)
    return p


def _tolerance(args) -> dict:
    return {
        "bracket_width": BRACKET_WIDTH,
        "quadrature": 1e-10,
        "audit_tol": getattr(args, "tol", None),
    }


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    if getattr(args, "sieve_cap", None) is not None:
        args.sieve_cap = int(args.sieve_cap)
    t0 = time.perf_counter()
    try:
        results, text = args.func(args)
    except UsageError as exc:
        print(f"lowzero {args.command}: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:
        print(f"lowzero {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    seconds = time.perf_counter() - t0
    if text is not None:
        sys.stdout.write(text)
        return 0
    diagnostics = []
    if isinstance(results, dict):
        if args.no_timing:
            results.pop("eval_seconds", None)
        diagnostics = list(results.pop("_diagnostics", []))
        if not results.get("passed", results.get("all_ok", True)):
            diagnostics.append("one or more checks failed; see results")
    inputs = {k: v for k, v in vars(args).items() if k not in ("func", "verbose", "no_timing", "_recomputed")}
    doc = {
        "command": args.command,
        "inputs": inputs,
        "results": results,
        "diagnostics": diagnostics,
        "seconds": None if args.no_timing else seconds,
        "schema_version": SCHEMA_VERSION,
        "constants_used": _constants(args).to_dict(),
        "tolerance": _tolerance(args),
    }
    sys.stdout.write(render_json(doc))
    return 0


if __name__ == "__main__":
    sys.exit(main())
