"""Number-field invariants for the restricted family of fields we handle.

Fields are given either by a spec string ``"x^k+c"`` or directly by their
signature and discriminant.  Quadratic fields get their exact field
discriminant; for ``k >= 3`` the polynomial discriminant of ``x^k + c`` is
used and flagged as such (maximality of ``Z[beta]`` is not checked).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "NumberField",
    "KroneckerCharacter",
    "FieldSpecError",
    "parse_field_spec",
    "alpha",
    "squarefree_decompose",
    "kronecker",
    "kronecker_array",
    "is_fundamental_discriminant",
    "quadratic_discriminant",
    "RATIONALS",
]


class FieldSpecError(ValueError):
    """Raised for malformed field specs or degenerate field records."""


@dataclass(frozen=True)
class NumberField:
    degree: int
    r1: int
    r2: int
    disc: int
    disc_is_field_disc: bool = True
    label: str = ""

    def __post_init__(self):
        if self.degree < 1:
            raise FieldSpecError("degree must be positive")
        if self.r1 < 0 or self.r2 < 0 or self.r1 + 2 * self.r2 != self.degree:
            raise FieldSpecError(
                f"signature ({self.r1}, {self.r2}) incompatible with degree {self.degree}"
            )
        if self.degree >= 2 and abs(self.disc) < 3:
            raise FieldSpecError("|d_K| >= 3 is required for degree >= 2")
        if self.disc == 0:
            raise FieldSpecError("discriminant must be nonzero")

    @property
    def log_disc(self) -> float:
        return math.log(abs(self.disc))

    @property
    def alpha(self) -> float:
        return alpha(self)

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "r1": self.r1,
            "r2": self.r2,
            "disc": str(self.disc),
            "alpha": self.alpha if abs(self.disc) >= 2 else None,
            "disc_is_field_disc": self.disc_is_field_disc,
        }


RATIONALS = NumberField(degree=1, r1=1, r2=0, disc=1, label="Q")


def alpha(field: NumberField) -> float:
    """Log root discriminant ``ln|d_K| / n_K`` in nats."""
    if abs(field.disc) < 2:
        raise FieldSpecError("log root discriminant needs |d_K| >= 2")
    # math.log is exact to rounding for arbitrarily large ints
    return math.log(abs(field.disc)) / field.degree


def squarefree_decompose(m: int) -> tuple[int, int]:
    """Return ``(s, r)`` with ``m = s * r**2`` and ``s`` squarefree.

    Trial division; fine for the smooth inputs we see in practice.
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    s, r = 1, 1
    rest = m
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            if e & 1:
                s *= p
            r *= p ** (e // 2)
        p += 1 if p == 2 else 2
    s *= rest
    return s, r


def quadratic_discriminant(D: int) -> int:
    """Field discriminant of Q(sqrt(D)) for squarefree ``D != 0, 1``."""
    return D if D % 4 == 1 else 4 * D


def is_fundamental_discriminant(d: int) -> bool:
    if d in (0, 1):
        return False
    if d % 4 == 1:
        return squarefree_decompose(abs(d))[1] == 1
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and squarefree_decompose(abs(m))[1] == 1
    return False


_SPEC_RE = re.compile(r"^\s*x\s*\^\s*(\d+)\s*\+\s*(\d+)\s*$")


def parse_field_spec(spec: str) -> NumberField:
    """Parse ``"x^k+c"`` (``k >= 2``, ``c >= 1``) into a :class:`NumberField`.

    >>> parse_field_spec("x^2+510510").disc
    -2042040
    """
    match = _SPEC_RE.match(spec)
    if match is None:
        raise FieldSpecError(f"cannot parse field spec {spec!r}; expected 'x^k+c'")
    k, c = int(match.group(1)), int(match.group(2))
    if k < 2:
        raise FieldSpecError("degree k must be at least 2")
    if c < 1:
        raise FieldSpecError("constant c must be a positive integer")
    label = f"x^{k}+{c}"
    if k == 2:
        s, _ = squarefree_decompose(c)
        # c a perfect square gives D = -1, i.e. Q(i)
        D = -s
        return NumberField(2, 0, 1, quadratic_discriminant(D), True, label)
    sign = -1 if (k * (k - 1) // 2) % 2 else 1
    disc = sign * k**k * c ** (k - 1)
    if k % 2:
        r1, r2 = 1, (k - 1) // 2
    else:
        r1, r2 = 0, k // 2
    return NumberField(k, r1, r2, disc, False, label)


_TAB2 = (0, 1, 0, -1, 0, -1, 0, 1)
_PERIOD_TABLE_MAX = 10**7


def kronecker(a: int, b: int) -> int:
    """Kronecker symbol ``(a/b)`` by the binary (Jacobi-style) algorithm."""
    if b == 0:
        return 1 if abs(a) == 1 else 0
    if not (a & 1) and not (b & 1):
        return 0
    v = 0
    while not (b & 1):
        b >>= 1
        v += 1
    k = 1 if not (v & 1) else _TAB2[a & 7]
    if b < 0:
        b = -b
        if a < 0:
            k = -k
    while a:
        v = 0
        while not (a & 1):
            a >>= 1
            v += 1
        if v & 1:
            k *= _TAB2[b & 7]
        if a & b & 2:
            k = -k
        r = abs(a)
        a = b % r
        b = r
    return k if b == 1 else 0


def kronecker_array(d: int, n: np.ndarray) -> np.ndarray:
    """Vectorized ``(d/n)`` for a fixed integer ``d`` and positive ``n``."""
    b = np.asarray(n, dtype=np.int64).copy()
    if np.any(b <= 0):
        raise ValueError("kronecker_array expects positive n")
    out = np.ones(b.shape, dtype=np.int8)
    tab = np.array(_TAB2, dtype=np.int8)
    if not (d & 1):
        out[(b & 1) == 0] = 0
    # strip powers of two from b
    twos = np.zeros(b.shape, dtype=np.int64)
    while True:
        even = (b & 1) == 0
        if not even.any():
            break
        b[even] >>= 1
        twos[even] += 1
    if d & 1:
        out[(twos & 1) == 1] *= tab[d & 7]
    a = np.full(b.shape, d, dtype=np.int64)
    live = out != 0
    while live.any():
        idx = np.nonzero(live)[0]
        aa, bb, kk = a[idx], b[idx], out[idx]
        done = aa == 0
        if done.any():
            kk[done & (bb != 1)] = 0
        go = ~done
        av, bv, kv = aa[go], bb[go], kk[go]
        v = np.zeros(av.shape, dtype=np.int64)
        while True:
            even = (av & 1) == 0
            if not even.any():
                break
            av[even] >>= 1
            v[even] += 1
        odd_v = (v & 1) == 1
        kv[odd_v] *= tab[bv[odd_v] & 7]
        flip = (av & bv & 2) != 0
        kv[flip] = -kv[flip]
        r = np.abs(av)
        av, bv = bv % r, r
        aa[go], bb[go], kk[go] = av, bv, kv
        a[idx], b[idx], out[idx] = aa, bb, kk
        live[idx[done]] = False
    return out


@dataclass(eq=False)
class KroneckerCharacter:
    """The real primitive character ``n -> (d/n)`` of a fundamental discriminant."""

    d: int
    _cache: np.ndarray | None = field(default=None, init=False, repr=False)

    def __post_init__(self):
        if not is_fundamental_discriminant(self.d):
            raise FieldSpecError(f"{self.d} is not a fundamental discriminant")

    @property
    def conductor(self) -> int:
        return abs(self.d)

    @property
    def parity(self) -> int:
        return 0 if self.d > 0 else 1

    def __call__(self, n: int) -> int:
        if self._cache is not None and 0 < n < len(self._cache):
            return int(self._cache[n])
        return kronecker(self.d, n)

    def values(self, n_max: int) -> np.ndarray:
        """Read-only array ``v`` with ``v[n] = chi(n)`` for ``0 <= n <= n_max``.

        Extends the internal cache on demand; ``v[0] = 0``.
        """
        if self._cache is None or len(self._cache) <= n_max:
            vals = np.zeros(n_max + 1, dtype=np.int8)
            if n_max >= 1:
                vals[1:] = kronecker_array(self.d, np.arange(1, n_max + 1, dtype=np.int64))
            vals.flags.writeable = False
            self._cache = vals
        return self._cache[: n_max + 1]

    def at(self, n: np.ndarray) -> np.ndarray:
        """chi evaluated on an arbitrary array of positive integers."""
        n = np.asarray(n, dtype=np.int64)
        if self._cache is not None and n.size and n.max() < len(self._cache):
            return self._cache[n]
        q = self.conductor
        if n.size > q and q <= _PERIOD_TABLE_MAX:
            # chi_d is periodic mod |d|
            return self.values(q)[n % q]
        return kronecker_array(self.d, n)

    def number_field(self) -> NumberField:
        r1, r2 = (2, 0) if self.d > 0 else (0, 1)
        return NumberField(2, r1, r2, self.d, True, f"Q(sqrt({self.d}))")
