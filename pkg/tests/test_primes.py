import math

import numpy as np
import pytest

from lowzero.fields import KroneckerCharacter
from lowzero.primes import (
    SieveRangeError,
    chebyshev_psi,
    is_prime,
    lambda_weighted_sum,
    mangoldt_sieve,
    prime_ideal_decomposition,
    primes_upto,
    quadratic_prime_sum,
    rosser_bound,
    weighted_prime_sum_with_F,
)
from lowzero.primes import _primes_segmented
from lowzero.testfn import f_eval

from ._oracles import kronecker_bruteforce, prime_power_table, python_sieve

LN = math.log


@pytest.fixture(scope="module")
def table():
    return mangoldt_sieve(int(math.exp(18)) + 1)


def test_small_tables():
    t = mangoldt_sieve(10)
    assert t.entries() == [(2, LN(2)), (3, LN(3)), (4, LN(2)), (5, LN(5)), (7, LN(7)), (8, LN(2)), (9, LN(3))]
    assert mangoldt_sieve(2).entries() == [(2, LN(2))]


def test_sieve_errors():
    with pytest.raises(SieveRangeError):
        mangoldt_sieve(1)
    with pytest.raises(SieveRangeError):
        mangoldt_sieve(2 * 10**8)
    with pytest.raises(SieveRangeError):
        mangoldt_sieve(2 * 10**9, cap=10**10)


def test_prime_power_recount_1e6():
    t = mangoldt_sieve(10**6)
    oracle = prime_power_table(10**6)
    assert len(t) == len(oracle)
    assert t.n.tolist() == sorted(oracle)
    assert np.allclose(t.log_p, [oracle[n] for n in t.n.tolist()], rtol=1e-15, atol=0)
    assert int((t.k == 1).sum()) == 78498


def test_segmented_matches_flat():
    n = 3 * 10**6
    assert np.array_equal(_primes_segmented(n, workers=3, flat_limit=10**6), primes_upto(n))


def test_is_prime_against_sieve():
    flags = python_sieve(20_000)
    assert all(is_prime(n) == bool(flags[n]) for n in range(20_000))
    assert is_prime(2**61 - 1)
    assert not is_prime(3215031751)


def test_psi(table):
    assert chebyshev_psi(10, table) == pytest.approx(3 * LN(2) + 2 * LN(3) + LN(5) + LN(7), abs=1e-13)
    assert chebyshev_psi(1.5, table) == 0.0
    assert chebyshev_psi(100, table) <= 1.0389 * 100
    with pytest.raises(SieveRangeError):
        chebyshev_psi(1e9, table)


def test_psi_ratio_window(table):
    for x in np.geomspace(100, table.x_max, 60):
        r = chebyshev_psi(x, table) / x
        assert 0.8 <= r <= 1.0389


def test_lambda_weighted_sum_examples(table):
    expected = LN(2) / math.sqrt(2) + LN(3) / math.sqrt(3) + LN(2) / 2 + LN(5) / math.sqrt(5) + LN(7) / math.sqrt(7)
    assert lambda_weighted_sum(2.0, table) == pytest.approx(expected, abs=1e-14)
    assert lambda_weighted_sum(2.0, table) == pytest.approx(2.9263, abs=1e-4)
    assert lambda_weighted_sum(0.5, table) == 0.0
    assert lambda_weighted_sum(10.0, table) <= rosser_bound(10.0)


def test_rosser_inequality_grid(table):
    for T in np.arange(0.5, 18.01, 0.5):
        assert lambda_weighted_sum(T, table) <= rosser_bound(T)


def test_weighted_sum_with_F(table):
    assert weighted_prime_sum_with_F(0.5, table) == 0.0
    assert weighted_prime_sum_with_F(1.0, table) == pytest.approx(LN(2) / math.sqrt(2) * f_eval(LN(2)), abs=1e-15)
    for T in np.arange(0.5, 18.01, 0.5):
        assert abs(weighted_prime_sum_with_F(T, table)) <= 1.21 * lambda_weighted_sum(T, table)


def test_prime_ideal_decomposition():
    chi = KroneckerCharacter(-4)
    assert prime_ideal_decomposition(chi, 5).splitting == "split"
    assert prime_ideal_decomposition(chi, 5).ideal_norms == ((5, 2),)
    assert prime_ideal_decomposition(chi, 3).ideal_norms == ((9, 1),)
    assert prime_ideal_decomposition(chi, 2).splitting == "ramified"
    with pytest.raises(ValueError):
        prime_ideal_decomposition(chi, 9)


def test_quadratic_sum_examples(table):
    chi = KroneckerCharacter(-4)
    assert quadratic_prime_sum(chi, 0.5, table) == 0.0
    assert quadratic_prime_sum(chi, 1.0, table) == pytest.approx(LN(2) / math.sqrt(2) * f_eval(LN(2)), abs=1e-15)


@pytest.mark.parametrize("d", [-4, -3, 5, 8, -2042040, 12])
@pytest.mark.parametrize("T", [2.0, 5.0, 9.2])
def test_quadratic_sum_dedekind_factorization(table, d, T):
    # -zeta_K'/zeta_K = sum Lambda(n) (1 + chi(n)) n^{-s}, chi(p^k) = chi(p)^k
    chi = KroneckerCharacter(d)
    n_max = int(math.exp(T))
    pp = prime_power_table(n_max)
    terms = []
    for n, lp in pp.items():
        p = round(math.exp(lp))
        k = round(math.log(n) / lp)
        c = kronecker_bruteforce(d, p) ** k
        terms.append(lp * (1 + c) / math.sqrt(n) * float(f_eval(math.log(n) / T)))
    assert quadratic_prime_sum(chi, T, table) == pytest.approx(math.fsum(terms), abs=1e-12)


def test_lemma_prime_bound_grid(table):
    chars = [KroneckerCharacter(d) for d in (-4, 5, -2042040)]
    for T in np.arange(0.5, 18.01, 0.5):
        rhs = 2 * 1.2571 * 2 * (2 * math.exp(T / 2) - 1)
        for chi in chars:
            assert abs(2 * quadratic_prime_sum(chi, T, table)) <= rhs
        assert abs(2 * weighted_prime_sum_with_F(T, table)) <= 2 * 1.2571 * (2 * math.exp(T / 2) - 1)
