"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines, or
directly with ``python3 tests/test_acceptance.py`` (add ``--slow`` for the
two largest-conductor tau rows).
"""

import math
import sys
import time

import numpy as np
import pytest

from lowzero.bounds import (
    derive_inequality_constants,
    lemma3_property_check,
    neugebauer_bound,
    theorem1_bound,
)
from lowzero.explicit_formula import quadratic_field, weil_residual
from lowzero.fields import RATIONALS, parse_field_spec
from lowzero.lfunctions import LFunctionSpec
from lowzero.primes import lambda_weighted_sum, mangoldt_sieve, rosser_bound, weighted_prime_sum_with_F
from lowzero.table1 import TABLE1, compute_row
from lowzero.testfn import fhat_agreement
from lowzero.zeros import lowest_zero, zero_list_for_explicit_formula

FAST_ROWS = [r for r in TABLE1 if not r[4] and parse_field_spec(r[0]).degree == 2]
SLOW_ROWS = [r for r in TABLE1 if r[4]]


def _report(label, ok, detail, seconds, budget):
    ok = ok and seconds < budget
    line = f"{'PASS' if ok else 'FAIL'}  {label}: {detail} [{seconds:.2f} s, budget {budget:g} s]"
    print(line)
    return ok, line


def check_alpha():
    t0 = time.perf_counter()
    errs = [abs(parse_field_spec(s).alpha - a) / a for s, a, *_ in TABLE1]
    return _report("1 alpha column", max(errs) <= 1e-9, f"max rel err {max(errs):.2e}", time.perf_counter() - t0, 1)


def check_bound_column():
    t0 = time.perf_counter()
    errs = [abs(theorem1_bound(parse_field_spec(s).alpha) - b) / b for s, _, _, b, _ in TABLE1]
    return _report("2 bound column", max(errs) <= 1e-3, f"max rel err {max(errs):.2e}", time.perf_counter() - t0, 1)


def _tau_rows(rows, label, budget):
    t0 = time.perf_counter()
    errs, consistent = [], True
    for spec, a, tau, b, slow_tau in rows:
        row = compute_row(spec, a, tau, b, slow_tau, slow=True)
        if row.tau_computed is None:
            errs.append(math.inf)
            continue
        errs.append(abs(row.tau_computed - tau))
        consistent &= row.tau_computed < row.bound_computed
    ok = max(errs) <= 1e-6 and consistent
    detail = f"{len(rows)} rows, max abs err {max(errs):.2e}, tau < bound: {consistent}"
    return _report(label, ok, detail, time.perf_counter() - t0, budget)


def check_tau_fast():
    return _tau_rows(FAST_ROWS, "3 tau rows 1-3", 60)


def check_tau_slow():
    return _tau_rows(SLOW_ROWS, "3 tau rows 4-5 (slow)", 15 * 60)


def check_tau0():
    t0 = time.perf_counter()
    res = lowest_zero(LFunctionSpec.zeta())
    ok = res.status == "found" and abs(res.tau - 14.1347) <= 1e-4 and res.bracket_width <= 1e-9
    detail = f"tau_0 = {res.tau:.10f}, bracket {res.bracket_width:.2e}"
    return _report("4 lowest zeta zero", ok, detail, time.perf_counter() - t0, 10)


def check_explicit_formula():
    t0 = time.perf_counter()
    zeros = zero_list_for_explicit_formula(LFunctionSpec.zeta(), 100.0)
    ok, parts = True, []
    for T in (1.0, 2.0):
        r100 = weil_residual(RATIONALS, None, T, 100.0, zeros=zeros).residual
        r50 = weil_residual(RATIONALS, None, T, 50.0, zeros=zeros).residual
        ok &= abs(r100) <= 0.05 and abs(r100) <= abs(r50)
        parts.append(f"Q T={T:g}: {r100:.4f} (H=50 {r50:.4f})")
    K, chi = quadratic_field(-4)
    r = weil_residual(K, chi, 2.0, 60.0).residual
    ok &= abs(r) <= 0.1
    parts.append(f"d=-4 T=2: {r:.4f}")
    return _report("5 explicit formula", ok, "; ".join(parts), time.perf_counter() - t0, 120)


def check_constants():
    t0 = time.perf_counter()
    a = derive_inequality_constants(1e-8)
    ok = (
        1.2095 <= a.sup_F <= 1.2100
        and a.j_const <= 0.276
        and a.i_const_full <= 0.1034
        and abs(a.exp_delta) <= 2e-3
        and abs(a.lin_delta) <= 2e-3
    )
    detail = (
        f"sup|F| {a.sup_F:.6f}, J {a.j_const:.6f}, -I {a.i_const_full:.6f} "
        f"(truncated at T: {a.i_const:.6f}), exp {a.assembled_exp_const:.5f}, lin {a.assembled_lin_const:.5f}"
    )
    return _report("6 constant audit", ok, detail, time.perf_counter() - t0, 60)


def check_inequalities():
    t0 = time.perf_counter()
    T_max = math.log(1e8) - 1e-12  # keep exp(T_max) inside the table
    table = mangoldt_sieve(10**8)
    grid = np.append(np.arange(0.25, T_max, 0.05), T_max)
    sums_ok = all(
        lambda_weighted_sum(T, table) <= rosser_bound(T)
        and abs(weighted_prime_sum_with_F(T, table)) <= 1.21 * rosser_bound(T)
        for T in grid
    )
    lemma = lemma3_property_check(10_000, seed=0)
    fhat = fhat_agreement(20.0, 2001, 1e-12)
    ok = sums_ok and lemma["passed"] and lemma["instances"] == 10_000 and fhat["max_abs_diff"] <= 1e-8
    detail = (
        f"Lambda-sum on {len(grid)} T values: {sums_ok}; lemma on {lemma['instances']} draws: {lemma['passed']}; "
        f"F-hat max diff {fhat['max_abs_diff']:.1e}"
    )
    return _report("7 inequality suites", ok, detail, time.perf_counter() - t0, 120)


def check_neugebauer():
    t0 = time.perf_counter()
    vals = [neugebauer_bound(parse_field_spec(s).alpha) for s, *_ in TABLE1]
    return _report("8 Neugebauer bound", all(v == 60.0 for v in vals), f"values {set(vals)}", time.perf_counter() - t0, 1)


def _assert(check):
    ok, line = check()
    assert ok, line


def test_criterion_1_alpha():
    _assert(check_alpha)


def test_criterion_2_bound_column():
    _assert(check_bound_column)


def test_criterion_3_tau_small_conductors():
    _assert(check_tau_fast)


@pytest.mark.slow
def test_criterion_3_tau_large_conductors():
    _assert(check_tau_slow)


def test_criterion_4_lowest_zeta_zero():
    _assert(check_tau0)


def test_criterion_5_explicit_formula():
    _assert(check_explicit_formula)


def test_criterion_6_constant_audit():
    _assert(check_constants)


def test_criterion_7_inequality_suites():
    _assert(check_inequalities)


def test_criterion_8_neugebauer():
    _assert(check_neugebauer)


if __name__ == "__main__":
    checks = [check_alpha, check_bound_column, check_tau_fast]
    if "--slow" in sys.argv:
        checks.append(check_tau_slow)
    checks += [check_tau0, check_explicit_formula, check_constants, check_inequalities, check_neugebauer]
    results = [c()[0] for c in checks]
    sys.exit(0 if all(results) else 1)
