"""Von Mangoldt sieve, Chebyshev psi and the prime sums of the explicit formula."""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .fields import KroneckerCharacter
from .testfn import f_eval

__all__ = [
    "MangoldtTable",
    "PrimeIdealLocal",
    "SieveRangeError",
    "mangoldt_sieve",
    "primes_upto",
    "is_prime",
    "chebyshev_psi",
    "lambda_weighted_sum",
    "weighted_prime_sum_with_F",
    "prime_ideal_decomposition",
    "quadratic_prime_sum",
    "ROSSER_PSI_CONSTANT",
    "rosser_bound",
]

ROSSER_PSI_CONSTANT = 1.0389
FLAT_SIEVE_LIMIT = 10**8
HARD_CAP = 10**9
_SEGMENT = 10**7


def _default_cap() -> int:
    return int(float(os.environ.get("LOWZERO_SIEVE_CAP", FLAT_SIEVE_LIMIT)))


class SieveRangeError(ValueError):
    pass


def primes_upto(n: int) -> np.ndarray:
    """All primes ``<= n`` from a flat odd-only sieve."""
    if n < 2:
        return np.zeros(0, dtype=np.int64)
    half = (n - 1) // 2  # index i stands for 2i + 1
    sieve = np.ones(half + 1, dtype=bool)
    sieve[0] = False
    for i in range(1, (math.isqrt(n) - 1) // 2 + 1):
        if sieve[i]:
            p = 2 * i + 1
            sieve[(p * p - 1) // 2 :: p] = False
    odd = 2 * np.nonzero(sieve)[0].astype(np.int64) + 1
    return np.concatenate(([2], odd)).astype(np.int64)


def _segment_primes(lo: int, hi: int, base: np.ndarray) -> np.ndarray:
    """Primes in ``[lo, hi)`` using the base primes ``<= sqrt(hi)``."""
    mark = np.ones(hi - lo, dtype=bool)
    for p in base:
        p = int(p)
        if p * p >= hi:
            break
        start = max(p * p, ((lo + p - 1) // p) * p)
        mark[start - lo :: p] = False
    return np.nonzero(mark)[0].astype(np.int64) + lo


def _primes_segmented(n: int, workers: int | None = None, flat_limit: int = FLAT_SIEVE_LIMIT) -> np.ndarray:
    base = primes_upto(math.isqrt(n) + 1)
    start = flat_limit + 1
    bounds = [(lo, min(lo + _SEGMENT, n + 1)) for lo in range(start, n + 1, _SEGMENT)]
    workers = workers or int(os.environ.get("LOWZERO_THREADS", os.cpu_count() or 1))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(lambda b: _segment_primes(b[0], b[1], base), bounds))
    return np.concatenate([primes_upto(min(flat_limit, n))] + parts)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for ``n < 3.3e24``."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for p in small:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class MangoldtTable:
    """Prime powers ``n = p^k <= x_max`` sorted by ``n``, with ``p``, ``k`` and ``ln p``."""

    x_max: int
    n: np.ndarray
    p: np.ndarray
    k: np.ndarray
    log_p: np.ndarray
    # chi(p) per entry, keyed by discriminant; filled lazily by quadratic sums
    _chi: dict = field(default_factory=dict, compare=False, repr=False)

    def __len__(self):
        return len(self.n)

    def upto(self, x: float) -> slice:
        return slice(0, int(np.searchsorted(self.n, math.floor(x), side="right")))

    def check_range(self, x: float):
        if x > self.x_max:
            raise SieveRangeError(f"{x:.6g} exceeds table range {self.x_max}")

    def entries(self):
        return list(zip(self.n.tolist(), self.log_p.tolist()))


def mangoldt_sieve(x_max: int, cap: int | None = None) -> MangoldtTable:
    """Table of all prime powers ``<= x_max`` with ``Lambda(p^k) = ln p``.

    Flat sieve up to ``10^8``, segmented above; ``cap`` (default from the
    ``LOWZERO_SIEVE_CAP`` environment variable, else ``10^8``) bounds ``x_max``.
    """
    x_max = int(x_max)
    cap = _default_cap() if cap is None else int(cap)
    if x_max < 2:
        raise SieveRangeError("x_max must be at least 2")
    if x_max > min(cap, HARD_CAP):
        raise SieveRangeError(f"x_max={x_max} beyond sieve cap {min(cap, HARD_CAP)}")
    if x_max <= FLAT_SIEVE_LIMIT:
        primes = primes_upto(x_max)
    else:
        primes = _primes_segmented(x_max)
    ns, ps, ks = [primes], [primes], [np.ones_like(primes)]
    small = primes[primes <= math.isqrt(x_max)]
    k = 2
    powers = small * small
    while powers.size:
        keep = powers <= x_max
        powers, base = powers[keep], small[: keep.sum()]
        if not powers.size:
            break
        ns.append(powers)
        ps.append(base)
        ks.append(np.full_like(base, k))
        small = base
        powers = powers * base
        k += 1
    n = np.concatenate(ns)
    order = np.argsort(n, kind="stable")
    p = np.concatenate(ps)[order]
    return MangoldtTable(
        x_max=x_max,
        n=n[order],
        p=p,
        k=np.concatenate(ks)[order],
        log_p=np.log(p.astype(float)),
    )


def rosser_bound(T: float) -> float:
    """Partial-summation bound ``1.0389 (2 e^{T/2} - 1)`` on the Lambda/sqrt(n) sum."""
    return ROSSER_PSI_CONSTANT * (2.0 * math.exp(T / 2.0) - 1.0)


def chebyshev_psi(x: float, table: MangoldtTable) -> float:
    table.check_range(x)
    return math.fsum(table.log_p[table.upto(x)])


def _cutoff(T: float, table: MangoldtTable) -> slice:
    if not T > 0:
        raise ValueError("T must be positive")
    x = math.exp(T)
    table.check_range(x)
    return table.upto(x)


def lambda_weighted_sum(T: float, table: MangoldtTable) -> float:
    """``sum_{n <= e^T} Lambda(n) / sqrt(n)``."""
    sl = _cutoff(T, table)
    return math.fsum(table.log_p[sl] / np.sqrt(table.n[sl].astype(float)))


def weighted_prime_sum_with_F(T: float, table: MangoldtTable) -> float:
    """``sum_{n <= e^T} Lambda(n) / sqrt(n) * F_T(ln n)``, the prime sum for K = Q."""
    sl = _cutoff(T, table)
    n = table.n[sl].astype(float)
    return math.fsum(table.log_p[sl] / np.sqrt(n) * f_eval(np.log(n) / T))


@dataclass(frozen=True)
class PrimeIdealLocal:
    p: int
    splitting: str
    ideal_norms: tuple[tuple[int, int], ...]


def prime_ideal_decomposition(char: KroneckerCharacter, p: int) -> PrimeIdealLocal:
    """Splitting of ``p`` in the quadratic field of discriminant ``char.d``."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    c = char(p)
    if c == 1:
        return PrimeIdealLocal(p, "split", ((p, 2),))
    if c == -1:
        return PrimeIdealLocal(p, "inert", ((p * p, 1),))
    return PrimeIdealLocal(p, "ramified", ((p, 1),))


def quadratic_prime_sum(char: KroneckerCharacter, T: float, table: MangoldtTable) -> float:
    """Prime-ideal sum ``sum_P sum_m ln N(P) / N(P)^{m/2} F_T(m ln N(P))``.

    Built from the splitting law: a split prime gives two ideals of norm
    ``p``, an inert prime one ideal of norm ``p^2`` and a ramified prime one
    ideal of norm ``p``.
    """
    sl = _cutoff(T, table)
    if char.d not in table._chi:
        table._chi[char.d] = char.at(table.p)
    is_p = table.k[sl] == 1
    primes = table.n[sl][is_p]
    chi = table._chi[char.d][sl][is_p]
    terms = []
    for kind, mask in (("split", chi == 1), ("inert", chi == -1), ("ramified", chi == 0)):
        ps = primes[mask].astype(float)
        if not ps.size:
            continue
        if kind == "inert":
            norm_log = 2.0 * np.log(ps)
            count = 1.0
        else:
            norm_log = np.log(ps)
            count = 2.0 if kind == "split" else 1.0
        m = 1
        while True:
            live = m * norm_log <= T
            if not live.any():
                break
            nl = norm_log[live]
            terms.append(count * nl * np.exp(-0.5 * m * nl) * f_eval(m * nl / T))
            m += 1
    if not terms:
        return 0.0
    return math.fsum(np.concatenate(terms))
