"""Upper incomplete gamma function for complex parameter, vectorized.

``Gamma(z, x) = int_x^inf t^{z-1} e^{-t} dt`` with the principal branch of
``x^z``.  ``x`` may be real positive or complex with ``Re x > 0``; the
integration path is then the ray from ``x`` to infinity parallel to the
positive axis.
"""

from __future__ import annotations

import numpy as np
from scipy import special

__all__ = ["upper_incomplete_gamma", "GammaConvergenceError", "MAX_ITER"]

MAX_ITER = 500
_EPS = 1e-16
_TINY = 1e-300


class GammaConvergenceError(RuntimeError):
    def __init__(self, achieved: float):
        super().__init__(
            f"incomplete gamma did not converge in {MAX_ITER} iterations "
            f"(relative accuracy reached {achieved:.3g})"
        )
        self.achieved = achieved


def _series(z: np.ndarray, x: np.ndarray) -> np.ndarray:
    # Gamma(z) - x^z e^{-x} sum_k x^k / (z)_{k+1}
    term = 1.0 / z
    total = term.copy()
    idx = np.arange(z.size)
    k = 0
    while idx.size:
        k += 1
        if k > MAX_ITER:
            raise GammaConvergenceError(float(np.max(np.abs(term[idx] / total[idx]))))
        term[idx] *= x[idx] / (z[idx] + k)
        total[idx] += term[idx]
        small = np.abs(term[idx]) <= _EPS * np.abs(total[idx])
        idx = idx[~small]
    lower = np.exp(z * np.log(x) - x) * total
    return special.gamma(z) - lower


def _continued_fraction(z: np.ndarray, x: np.ndarray) -> np.ndarray:
    # modified Lentz on e^{-x} x^z / (x+1-z - 1(1-z)/(x+3-z - 2(2-z)/...))
    b = x + 1.0 - z
    c = np.full(z.shape, 1.0 / _TINY, dtype=complex)
    d = 1.0 / b
    h = d.copy()
    idx = np.arange(z.size)
    i = 0
    while idx.size:
        i += 1
        if i > MAX_ITER:
            raise GammaConvergenceError(float(np.max(np.abs(delta - 1.0))))
        zi = z[idx]
        an = -i * (i - zi)
        b[idx] += 2.0
        dd = an * d[idx] + b[idx]
        dd[np.abs(dd) < _TINY] = _TINY
        cc = b[idx] + an / c[idx]
        cc[np.abs(cc) < _TINY] = _TINY
        dd = 1.0 / dd
        delta = dd * cc
        h[idx] *= delta
        d[idx], c[idx] = dd, cc
        idx = idx[np.abs(delta - 1.0) > _EPS]
    return np.exp(z * np.log(x) - x) * h


def _at_poles(n: np.ndarray, x: np.ndarray) -> np.ndarray:
    # Gamma(z, x) = (Gamma(z + 1, x) - x^z e^{-x}) / z
    val = special.exp1(x)
    for k in range(0, int(-n.min())):
        z = -(k + 1.0)
        step = -n > k
        val[step] = (val[step] - np.exp(z * np.log(x[step]) - x[step])) / z
    return val


def upper_incomplete_gamma(z, x):
    """``Gamma(z, x)`` for complex ``z`` and ``Re x > 0`` (arrays broadcast).

    Power series for the complement when ``|x| < max(Re z + 1, 1.5, 0.7 |Im z|)``,
    modified Lentz continued fraction otherwise.  Working envelope ``Re z in [-2, 5]``,
    ``|Im z| <= 100``; relative accuracy about ``1e-13`` there.
    """
    z, x = np.broadcast_arrays(np.asarray(z, dtype=complex), np.asarray(x, dtype=complex))
    if np.any(x.real <= 0):
        raise ValueError("Gamma(z, x) is implemented for Re x > 0 only")
    shape = z.shape
    z = z.ravel()
    x = x.ravel()
    out = np.empty(z.shape, dtype=complex)
    use_series = np.abs(x) < np.maximum(np.maximum(z.real + 1.0, 1.5), 0.7 * np.abs(z.imag))
    # Gamma(z) has poles at z = 0, -1, -2, ...: start from E1 and recurse down
    pole = use_series & (z.imag == 0) & (z.real <= 0) & (z.real == np.round(z.real))
    if pole.any():
        out[pole] = _at_poles(z[pole].real.astype(int), x[pole])
        use_series &= ~pole
    if use_series.any():
        out[use_series] = _series(z[use_series], x[use_series])
    use_cf = ~(use_series | pole)
    if use_cf.any():
        out[use_cf] = _continued_fraction(z[use_cf], x[use_cf])
    out = out.reshape(shape)
    if out.ndim == 0:
        return complex(out)
    return out
