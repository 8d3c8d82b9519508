"""Riemann zeta and real Dirichlet L-functions on the critical line.

``zeta`` is evaluated by Euler-Maclaurin summation and rotated to the real
Hardy function ``Z(t) = e^{i theta(t)} zeta(1/2 + it)``.

For a real primitive character ``chi_d`` of conductor ``q`` and parity ``a``
the completed function

    Lambda(s) = (q/pi)^{(s+a)/2} Gamma((s+a)/2) L(s, chi_d)

is computed directly from the smoothed approximate functional equation

    Lambda(s) = sum_n chi(n) n^{-s}   (q/pi)^{w}  Gamma(w,  pi n^2 c / q)
              + sum_n chi(n) n^{s-1}  (q/pi)^{w'} Gamma(w', pi n^2 / (c q)),

``w = (s+a)/2``, ``w' = (1-s+a)/2``, with the split point ``c = e^{i phi}``
on the unit circle.  Real characters have root number +1, so ``Lambda`` is
real on the critical line.  For large ``|t|`` the split point is rotated
towards ``i sign(t)`` so the terms shrink like ``Lambda`` itself does
(``e^{-pi |t| / 4}``) instead of cancelling down to it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special

from .fields import KroneckerCharacter
from .gammainc import upper_incomplete_gamma

__all__ = [
    "LFunctionSpec",
    "CompletedValue",
    "EvaluationError",
    "zeta_em",
    "riemann_siegel_theta",
    "completed_dirichlet",
    "hardy_z",
    "hardy_z_many",
    "char_coefficient_cache",
    "afe_length",
    "MAX_CONDUCTOR",
]

MAX_CONDUCTOR = 10**12
T_ENVELOPE = 100.0
# terms are dropped once their weight is below e^{-_CUT} relative to the first
_CUT = 40.0
# digits (in nats) we accept losing to cancellation before rotating the split
_ROTATION_LOSS = math.log(1e4)
# max number of AFE terms times t-points evaluated in one vectorized block
_BLOCK = 2_000_000

# B_2 .. B_14
_BERNOULLI = [1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730, 7 / 6]


class EvaluationError(RuntimeError):
    """Raised when an evaluation cannot meet its accuracy contract."""


@dataclass(frozen=True, eq=False)
class LFunctionSpec:
    kind: str
    char: KroneckerCharacter | None = None

    def __post_init__(self):
        if self.kind == "riemann_zeta":
            if self.char is not None:
                raise ValueError("zeta takes no character")
        elif self.kind == "dirichlet_real":
            if self.char is None:
                raise ValueError("dirichlet_real needs a character")
            if self.char.conductor > MAX_CONDUCTOR:
                raise ValueError(f"conductor beyond {MAX_CONDUCTOR:.0e} not supported")
        else:
            raise ValueError(f"unknown L-function kind {self.kind!r}")

    @classmethod
    def zeta(cls) -> "LFunctionSpec":
        return cls("riemann_zeta")

    @classmethod
    def dirichlet(cls, d: int) -> "LFunctionSpec":
        return cls("dirichlet_real", KroneckerCharacter(d))

    @property
    def conductor(self) -> int:
        return 1 if self.char is None else self.char.conductor

    @property
    def parity(self) -> int:
        return 0 if self.char is None else self.char.parity

    @property
    def has_pole(self) -> bool:
        return self.kind == "riemann_zeta"

    @property
    def root_number(self) -> int:
        return 1

    @property
    def label(self) -> str:
        return "zeta" if self.char is None else f"L(s, chi_{self.char.d})"


@dataclass(frozen=True)
class CompletedValue:
    t: float
    lambda_value: float
    err_estimate: float
    scale: float
    n_terms: int


# ---------------------------------------------------------------- zeta


def _em_terms(s: np.ndarray, N: int):
    n = np.arange(1, N, dtype=float)
    logn = np.log(n)
    head = np.exp(-np.multiply.outer(s, logn)).sum(axis=-1)
    logN = math.log(N)
    NS = np.exp(-s * logN)
    total = head + NS / 2.0 + N * NS / (s - 1.0)
    # Bernoulli corrections B_{2k}/(2k)! s(s+1)...(s+2k-2) N^{-s-2k+1}
    rising = s.copy()
    power = NS / N
    last = None
    for k, B in enumerate(_BERNOULLI, start=1):
        term = B / math.factorial(2 * k) * rising * power
        if k == len(_BERNOULLI):
            last = term
            break
        total = total + term
        rising = rising * (s + 2 * k - 1) * (s + 2 * k)
        power = power / (N * N)
    return total, np.abs(last)


def zeta_em(s, tol: float = 1e-12, N: int | None = None):
    """Riemann zeta by Euler-Maclaurin with corrections through ``B_12``.

    Valid for ``0 < Re s <= 2``, ``|Im s| <= 100`` (arrays accepted).  The
    first omitted Bernoulli term serves as the error estimate; ``N`` grows
    until it is below ``tol``.  Returns ``(value, error_estimate)``.
    """
    s = np.asarray(s, dtype=complex)
    scalar = s.ndim == 0
    s = np.atleast_1d(s)
    if np.any(s.real <= 0) or np.any(s.real > 2) or np.any(np.abs(s.imag) > T_ENVELOPE):
        raise ValueError("zeta_em envelope is 0 < Re s <= 2, |Im s| <= 100")
    if N is None:
        N = max(20, int(math.ceil(np.max(np.abs(s.imag)))))
    while True:
        val, err = _em_terms(s, N)
        if np.max(err) <= tol or N > 4000:
            break
        N = int(N * 1.5)
    if np.max(err) > tol:
        raise EvaluationError(f"zeta_em: tolerance {tol:g} unreachable (estimate {np.max(err):.2g})")
    if scalar:
        return complex(val[0]), float(err[0])
    return val, err


def riemann_siegel_theta(t):
    """``theta(t) = arg Gamma(1/4 + it/2) - (t/2) ln pi`` on the continuous branch."""
    t = np.asarray(t, dtype=float)
    val = special.loggamma(0.25 + 0.5j * t).imag - 0.5 * t * math.log(math.pi)
    if val.ndim == 0:
        return float(val)
    return val


# ---------------------------------------------------------------- Dirichlet


def char_coefficient_cache(char: KroneckerCharacter, n_max: int) -> np.ndarray:
    """Read-only ``chi(n)`` for ``0 <= n <= n_max`` (index 0 holds 0)."""
    if n_max > 10**7:
        raise MemoryError("character cache limited to n_max <= 1e7")
    return char.values(n_max)


def _rotation(t: float) -> float:
    if abs(t) * math.pi / 4.0 <= _ROTATION_LOSS:
        return 0.0
    return math.copysign(math.pi / 2.0 - 2.0 * _ROTATION_LOSS / abs(t), t)


def afe_length(q: int, phi: float = 0.0) -> int:
    """Number of AFE terms needed for conductor ``q`` and split angle ``phi``."""
    return int(math.ceil(math.sqrt(_CUT * q / (math.pi * math.cos(phi))))) + 2


def _afe_sums(char, s: np.ndarray, phi, n_max: int, split_abs: float = 1.0):
    """Both AFE sums for an array of ``s``; returns ``(first, second, scale)``.

    ``phi`` is the split angle, scalar or one per entry of ``s``.
    """
    q = char.conductor
    a = char.parity
    chi = char.values(n_max)[1:].astype(float)
    n = np.arange(1, n_max + 1, dtype=float)
    keep = chi != 0
    chi, n = chi[keep], n[keep]
    logn = np.log(n)
    lq = math.log(q / math.pi)
    c = split_abs * np.exp(1j * np.broadcast_to(np.asarray(phi, dtype=float), s.shape))
    base = math.pi * n * n / q
    w1 = (s + a) / 2.0
    w2 = (1.0 - s + a) / 2.0
    first = np.empty(s.shape, dtype=complex)
    second = np.empty(s.shape, dtype=complex)
    scale = np.empty(s.shape, dtype=float)
    rows = max(1, _BLOCK // max(1, n.size))
    for lo in range(0, s.size, rows):
        sl = slice(lo, lo + rows)
        ss, ww1, ww2, cc = s[sl, None], w1[sl, None], w2[sl, None], c[sl, None]
        g1 = upper_incomplete_gamma(ww1, base[None, :] * cc)
        g2 = upper_incomplete_gamma(ww2, base[None, :] / cc)
        t1 = chi * np.exp(ww1 * lq - ss * logn) * g1
        t2 = chi * np.exp(ww2 * lq + (ss - 1.0) * logn) * g2
        first[sl] = _csum(t1)
        second[sl] = _csum(t2)
        scale[sl] = np.maximum(np.abs(t1).max(axis=1), np.abs(t2).max(axis=1))
    return first, second, scale


def _csum(terms: np.ndarray) -> np.ndarray:
    """Row-wise compensated sum of a complex 2-D array."""
    if terms.shape[1] < 64:
        return terms.sum(axis=1)
    return np.array(
        [complex(math.fsum(r.real), math.fsum(r.imag)) for r in terms],
        dtype=complex,
    )


def completed_dirichlet(
    spec: LFunctionSpec,
    s,
    phi: float | None = None,
    split_abs: float = 1.0,
    n_max: int | None = None,
):
    """``Lambda(s, chi)`` at arbitrary complex ``s`` via the smoothed AFE.

    ``split_abs * e^{i phi}`` is the split point of the theta integral; the
    value does not depend on it, which makes it a useful self-check.
    Returns ``(value, first_sum, second_sum, scale, n_terms)``.
    """
    if spec.char is None:
        raise ValueError("completed_dirichlet needs a Dirichlet spec")
    s = np.atleast_1d(np.asarray(s, dtype=complex))
    if phi is None:
        phi = _rotation(float(np.max(s.imag) if np.max(s.imag) > -np.min(s.imag) else np.min(s.imag)))
    if n_max is None:
        reach = max(split_abs, 1.0 / split_abs)
        n_max = int(afe_length(spec.conductor, phi) * math.sqrt(reach)) + 1
    first, second, scale = _afe_sums(spec.char, s, phi, n_max, split_abs)
    return first + second, first, second, scale, n_max


def hardy_z_many(spec: LFunctionSpec, ts, tol: float = 1e-10) -> list[CompletedValue]:
    """Real critical-line values at many ordinates.

    ``zeta``: Hardy's ``Z(t)``.  Dirichlet: ``Lambda(1/2 + it)``.
    """
    ts = np.atleast_1d(np.asarray(ts, dtype=float))
    if np.any(np.abs(ts) > T_ENVELOPE):
        raise ValueError("|t| <= 100 required")
    if tol < 1e-10:
        raise ValueError("tol below 1e-10 is not supported")
    out: list[CompletedValue | None] = [None] * ts.size
    if spec.kind == "riemann_zeta":
        s = 0.5 + 1j * ts
        zv, err = zeta_em(s, tol=min(tol, 1e-12) * 0.1)
        z = np.exp(1j * riemann_siegel_theta(ts)) * zv
        for i, t in enumerate(ts):
            resid = abs(z[i].imag)
            if resid > tol * abs(z[i].real) + 1e-12:
                raise EvaluationError(f"Z({t}) has imaginary residual {resid:.2g}")
            out[i] = CompletedValue(float(t), float(z[i].real), float(err[i] + resid), 1.0, 0)
        return out
    # Dirichlet: each ordinate gets its own split rotation
    phis = np.array([_rotation(float(t)) for t in ts])
    n_max = afe_length(spec.conductor, float(np.max(np.abs(phis))))
    lam_first, lam_second, scale = _afe_sums(spec.char, 0.5 + 1j * ts, phis, n_max)
    lam = lam_first + lam_second
    for i, t in enumerate(ts):
        resid = abs(lam[i].imag)
        if resid > tol * abs(lam[i].real) + 1e-12 * scale[i]:
            raise EvaluationError(
                f"Lambda(1/2+{t}i) has imaginary residual {resid:.2g} (scale {scale[i]:.2g})"
            )
        out[i] = CompletedValue(float(t), float(lam[i].real), float(resid), float(scale[i]), n_max)
    return out


def hardy_z(spec: LFunctionSpec, t: float, tol: float = 1e-10) -> CompletedValue:
    return hardy_z_many(spec, [t], tol)[0]
