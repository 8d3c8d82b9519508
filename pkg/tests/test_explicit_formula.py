import math

import mpmath as mp
import numpy as np
import pytest
from scipy import integrate

from lowzero.explicit_formula import (
    ARCHIMEDEAN_CONSTANT,
    EULER_GAMMA,
    _i_integrand,
    archimedean_term,
    i_integral,
    i_integral_truncated,
    j_integral,
    quadratic_field,
    sup_scaled,
    verify_34_35,
    weil_lhs,
    weil_residual,
    weil_rhs,
)
from lowzero.fields import RATIONALS
from lowzero.lfunctions import LFunctionSpec
from lowzero.primes import mangoldt_sieve
from lowzero.testfn import f_eval
from lowzero.zeros import zero_list_for_explicit_formula

# (T, J, I, Phi(0)+Phi(1)) from 30-digit mpmath quadrature
MP_VALUES = [
    (0.314, 0.12695323716780734, 2.4257122610050051, 1.0205370605596415),
    (1.0, 0.39575813362696013, 1.2786507647935351, 3.3224144179388907),
    (2.0, 0.74237031704123927, 0.62181487840447257, 7.1424107308309149),
    (10.0, 1.7018742014611466, -0.32203071994822665, 221.39078354356978),
]


@pytest.fixture(scope="module")
def zeta_zeros():
    return zero_list_for_explicit_formula(LFunctionSpec.zeta(), 100.0)


@pytest.fixture(scope="module")
def table():
    return mangoldt_sieve(int(math.exp(2)) + 1)


def test_constants():
    assert EULER_GAMMA == pytest.approx(float(mp.euler), abs=1e-16)
    assert ARCHIMEDEAN_CONSTANT == pytest.approx(math.log(2 * math.pi) + 0.5772156649015329 + 2 * math.log(2))


@pytest.mark.parametrize("T,J,I,A", MP_VALUES)
def test_integrals_against_mp_quadrature(T, J, I, A):
    assert j_integral(T) == pytest.approx(J, abs=1e-10)
    assert i_integral(T) == pytest.approx(I, abs=1e-10)
    assert archimedean_term(T) == pytest.approx(A, abs=1e-10 * max(1, A))


def test_archimedean_from_mellin_definition():
    for T in (0.5, 2.0, 7.0):
        phi = lambda s: integrate.quad(  # noqa: E731
            lambda x: f_eval(x / T) * math.exp((s - 0.5) * x), -T, T, points=[0.0], epsabs=1e-13, epsrel=1e-13
        )[0]
        assert archimedean_term(T) == pytest.approx(phi(0.0) + phi(1.0), abs=1e-10 * max(1, phi(1.0)))


def test_small_T_limits():
    assert j_integral(1e-6) == pytest.approx(0.0, abs=1e-6)
    assert archimedean_term(1e-6) == pytest.approx(0.0, abs=1e-5)
    with pytest.raises(ValueError):
        j_integral(0.0)


def test_j_ceiling():
    assert j_integral(10.0) <= 0.276 * math.exp(5)
    assert j_integral(10.0) <= 1.21 * math.pi / 2
    assert j_integral(0.314) <= 0.276 * math.exp(0.157)


def test_i_integrand_limit():
    for T in (0.5, 3.0):
        g = _i_integrand(T)
        assert g(0.0) == -2.0 / T
        x = 1e-5 * T
        assert g(x) == pytest.approx(-2.0 / T, rel=1e-4)


def test_i_behaviour():
    assert i_integral(0.314) >= -0.1034 * math.exp(0.157)
    # the full integral dips below zero for large T and then increases back toward 0
    assert i_integral(20.0) > i_integral(10.0)
    assert i_integral(10.0) < 0
    tail = -math.log(math.tanh(5.0 / 4))
    assert i_integral(5.0) - i_integral_truncated(5.0) == pytest.approx(tail, abs=1e-14)


def test_quadrature_tolerance_consistency():
    for T in (0.5, 4.0, 17.0):
        assert j_integral(T, 1e-6) == pytest.approx(j_integral(T, 1e-10), abs=1e-6)
        assert i_integral(T, 1e-6) == pytest.approx(i_integral(T, 1e-10), abs=1e-6)


def test_sign_structure():
    for T in np.linspace(0.314, 30, 25):
        assert j_integral(T) >= 0
        assert archimedean_term(T) > 0


def test_rhs_trivial_cases(table):
    br = weil_rhs(RATIONALS, None, 0.5, table)
    assert br.prime_term == 0 and br.disc_term == 0
    assert (br.r1, br.degree) == (1, 1)
    K, chi = quadratic_field(-4)
    br = weil_rhs(K, chi, 2.0, table)
    assert br.disc_term == pytest.approx(math.log(4))
    assert br.j_term == 0.0
    assert br.residual is None


def test_rhs_field_mismatch(table):
    K, _ = quadratic_field(-4)
    with pytest.raises(ValueError):
        weil_rhs(K, None, 1.0, table)
    _, chi5 = quadratic_field(5)
    with pytest.raises(ValueError):
        weil_rhs(K, chi5, 1.0, table)


def test_lhs():
    assert weil_lhs([], 2.0) == 0.0
    assert weil_lhs([], 2.0, central_order=1) == pytest.approx(16 * 2.0 / math.pi**2, abs=1e-14)
    for r in (1, 3):
        assert weil_lhs([], 1.7, r) == pytest.approx(16 / math.pi**2 * r * 1.7, rel=1e-15)
    with pytest.raises(ValueError):
        weil_lhs([-1.0], 1.0)


@pytest.mark.parametrize("T", [1.0, 2.0])
def test_identity_for_Q(zeta_zeros, T):
    r100 = weil_residual(RATIONALS, None, T, 100.0, zeros=zeta_zeros)
    r50 = weil_residual(RATIONALS, None, T, 50.0, zeros=zeta_zeros)
    assert abs(r100.residual) <= 0.05
    assert abs(r100.residual) <= abs(r50.residual) + 1e-6
    # the residual is the omitted zero tail; the density estimate tracks it
    assert r100.residual == pytest.approx(r100.tail_estimate, rel=0.05)
    assert r100.zero_count == 29


def test_identity_for_gaussian_field():
    K, chi = quadratic_field(-4)
    br = weil_residual(K, chi, 2.0, 60.0)
    assert abs(br.residual) <= 0.1
    assert br.zero_count == 25 + 13


def test_zero_height_cap():
    with pytest.raises(ValueError):
        weil_residual(RATIONALS, None, 1.0, 150.0)


def test_verify_grid():
    rep = verify_34_35([0.314, 0.5, 1, 2, 5, 10, 30])
    assert rep["all_j_ok"] and rep["all_i_ok"]
    assert rep["sup_J_scaled"] <= 0.276
    assert rep["sup_minus_I_scaled"] <= 0.1034
    with pytest.raises(ValueError):
        verify_34_35([0.1])


def test_sup_scaled_simple():
    T, v = sup_scaled(lambda T: T, 0.5, 30.0)
    assert T == pytest.approx(2.0, abs=1e-6)
    assert v == pytest.approx(2 / math.e, abs=1e-12)
