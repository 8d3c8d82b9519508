import math

import numpy as np
import pytest
from scipy import integrate

from lowzero.fields import KroneckerCharacter, kronecker
from lowzero.lfunctions import (
    EvaluationError,
    LFunctionSpec,
    afe_length,
    char_coefficient_cache,
    completed_dirichlet,
    hardy_z,
    hardy_z_many,
    riemann_siegel_theta,
    zeta_em,
)

from ._oracles import completed_l_oracle, eta_zeta, theta_prime

ZETA_HALF = -1.4603545088095868


def test_spec_invariants():
    z = LFunctionSpec.zeta()
    assert (z.conductor, z.parity, z.has_pole, z.root_number) == (1, 0, True, 1)
    L = LFunctionSpec.dirichlet(-4)
    assert (L.conductor, L.parity, L.has_pole) == (4, 1, False)
    assert LFunctionSpec.dirichlet(5).parity == 0
    with pytest.raises(ValueError):
        LFunctionSpec("dirichlet_real", None)
    with pytest.raises(ValueError):
        LFunctionSpec.dirichlet(-4 * (10**12 + 1))


def test_zeta_em_known_values():
    v, err = zeta_em(2.0)
    assert abs(v - math.pi**2 / 6) <= 1e-12
    v, _ = zeta_em(0.5)
    assert v.real == pytest.approx(ZETA_HALF, abs=1e-12)
    assert eta_zeta(0.5).real == pytest.approx(ZETA_HALF, abs=1e-14)
    v, _ = zeta_em(0.5 + 14.134725j)
    assert abs(v) < 1e-5


def test_zeta_em_envelope():
    with pytest.raises(ValueError):
        zeta_em(0.5 + 200j)
    with pytest.raises(ValueError):
        zeta_em(-0.5)


def test_zeta_em_vs_eta_oracle():
    rng = np.random.default_rng(3)
    ts = rng.uniform(-30, 30, 100)
    vals, _ = zeta_em(0.5 + 1j * ts)
    for t, v in zip(ts, vals):
        ref = eta_zeta(complex(0.5, t), n=80, dps=30)
        assert abs(v - ref) <= 1e-10 * max(1.0, abs(ref))


def test_theta():
    assert riemann_siegel_theta(0.0) == 0.0
    rng = np.random.default_rng(5)
    for t in rng.uniform(0, 90, 20):
        assert riemann_siegel_theta(-t) == pytest.approx(-riemann_siegel_theta(t), abs=1e-13)
    integral, _ = integrate.quad(theta_prime, 0, 20, epsabs=1e-13, epsrel=1e-13)
    assert riemann_siegel_theta(20.0) == pytest.approx(integral, abs=1e-9)


def test_character_cache():
    chi = KroneckerCharacter(-4)
    assert char_coefficient_cache(chi, 8)[1:].tolist() == [1, 0, -1, 0, 1, 0, -1, 0]
    with pytest.raises(MemoryError):
        char_coefficient_cache(chi, 10**8)
    big = KroneckerCharacter(-2042040)
    v = char_coefficient_cache(big, 10**6)
    rng = np.random.default_rng(9)
    for n in rng.integers(1, 10**6, 10_000):
        assert v[n] == kronecker(-2042040, int(n))


def test_multiplicativity_spot_check():
    rng = np.random.default_rng(2)
    done = 0
    while done < 100:
        d = int(rng.integers(-10**6, 10**6))
        try:
            chi = KroneckerCharacter(d)
        except ValueError:
            continue
        assert chi(6) == chi(2) * chi(3)
        done += 1


def test_zeta_sign_at_center():
    assert hardy_z(LFunctionSpec.zeta(), 0.0).lambda_value == pytest.approx(ZETA_HALF, abs=1e-12)


@pytest.mark.parametrize("d", [-4, -3, 5, 8, -8, 12])
@pytest.mark.parametrize("t", [0.0, 3.7, 11.25])
def test_completed_l_vs_hurwitz_oracle(d, t):
    v = hardy_z(LFunctionSpec.dirichlet(d), t)
    ref = completed_l_oracle(d, complex(0.5, t))
    assert abs(ref.imag) <= 1e-25 + 1e-20 * abs(ref)
    assert v.lambda_value == pytest.approx(ref.real, rel=1e-10, abs=1e-12 * v.scale)


def test_chi_minus4_center_positive():
    assert hardy_z(LFunctionSpec.dirichlet(-4), 0.0).lambda_value > 0


@pytest.mark.parametrize("d", [-4, 5, -2042040])
def test_self_dual_symmetry(d):
    spec = LFunctionSpec.dirichlet(d)
    rng = np.random.default_rng(abs(d) % 1000)
    for t in rng.uniform(0.5, 40, 5):
        a = hardy_z(spec, t).lambda_value
        b = hardy_z(spec, -t).lambda_value
        assert a == pytest.approx(b, rel=1e-10, abs=1e-13 * hardy_z(spec, t).scale)


@pytest.mark.parametrize("d", [-3, -4, 8, -2042040])
def test_imaginary_residual_small(d):
    spec = LFunctionSpec.dirichlet(d)
    ts = np.linspace(0, 20, 81)
    phi = 0.0
    val, _, _, scale, _ = completed_dirichlet(spec, 0.5 + 1j * ts[:20], phi=phi)
    assert np.all(np.abs(val.imag) <= 1e-10 * (np.abs(val.real) + scale))
    for cv in hardy_z_many(spec, ts):
        assert cv.err_estimate <= 1e-10 * (abs(cv.lambda_value) + cv.scale)


@pytest.mark.parametrize("d", [-4, 5, -2042040])
@pytest.mark.parametrize("s", [0.5 + 2j, 0.7 + 5j, 0.3 - 1j, 2.0 + 0j])
def test_functional_equation_swapped_sums(d, s):
    # swapping the two sums corresponds to s -> 1 - s with the split point inverted
    spec = LFunctionSpec.dirichlet(d)
    v1 = completed_dirichlet(spec, s, phi=0.0, split_abs=1.3)[0][0]
    v2 = completed_dirichlet(spec, 1 - s, phi=0.0, split_abs=1 / 1.3)[0][0]
    assert abs(v1 - v2) <= 1e-10 * abs(v1)


@pytest.mark.parametrize("d", [-4, 12, -2042040])
def test_split_point_independence(d):
    spec = LFunctionSpec.dirichlet(d)
    s = 0.5 + 7.5j
    ref = completed_dirichlet(spec, s)[0][0]
    for c_abs, phi in ((0.8, 0.0), (1.25, 0.3), (1.0, -0.2)):
        v, _, _, scale, _ = completed_dirichlet(spec, s, phi=phi, split_abs=c_abs)
        assert abs(v[0] - ref) <= 1e-11 * scale[0]


@pytest.mark.parametrize("d", [-4, -2042040])
def test_truncation_doubling(d):
    spec = LFunctionSpec.dirichlet(d)
    s = 0.5 + 9.0j
    v, _, _, scale, n = completed_dirichlet(spec, s)
    v2 = completed_dirichlet(spec, s, n_max=2 * n)[0]
    assert abs(v2[0] - v[0]) <= 1e-12 * scale[0]


def test_afe_length_grows_with_rotation():
    assert afe_length(10**6, 1.2) > afe_length(10**6, 0.0)


def test_tolerance_and_range_errors():
    spec = LFunctionSpec.dirichlet(-4)
    with pytest.raises(ValueError):
        hardy_z(spec, 150.0)
    with pytest.raises(ValueError):
        hardy_z(spec, 1.0, tol=1e-12)
    assert issubclass(EvaluationError, RuntimeError)


def test_large_conductor_finite_at_high_t():
    v = hardy_z(LFunctionSpec.dirichlet(-2042040), 95.0)
    assert math.isfinite(v.lambda_value) and v.scale > 0
