"""The compactly supported test function ``F``, its dilations and Fourier transform.

``F(x) = (1 - |x|) cos(pi x) + (3/pi) sin(pi |x|)`` on ``[-1, 1]`` and zero
elsewhere.  Its transform (angular convention ``Fhat(u) = int F(x) e^{iux} dx``)
is

    Fhat(u) = 2 (2 - u^2/pi^2) [2 pi cos(u/2) / (pi^2 - u^2)]^2,

which is nonnegative exactly on ``|u| <= sqrt(2) pi``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import optimize

from ._quad import integrate_adaptive

__all__ = [
    "TestFunctionEval",
    "f_eval",
    "f_T_eval",
    "fhat_closed",
    "fhat_T",
    "fhat_numeric",
    "sup_norm_F",
    "fhat_agreement",
    "SQRT2_PI",
]

PI = math.pi
SQRT2_PI = math.sqrt(2.0) * PI
# |u^2 - pi^2| < GUARD * pi^2 switches to the series for sin(h/2)/h
_GUARD = 1e-6


@dataclass(frozen=True)
class TestFunctionEval:
    x: float
    value: float


def f_eval(x):
    """Evaluate ``F`` (scalar or array)."""
    ax = np.abs(np.asarray(x, dtype=float))
    val = np.where(
        ax <= 1.0,
        (1.0 - ax) * np.cos(PI * ax) + (3.0 / PI) * np.sin(PI * ax),
        0.0,
    )
    if np.ndim(val) == 0:
        return float(val)
    return val


def f_T_eval(x, T: float):
    """``F_T(x) = F(x / T)``, supported on ``[-T, T]``."""
    if not T > 0:
        raise ValueError("T must be positive")
    return f_eval(np.asarray(x, dtype=float) / T)


def fhat_closed(u):
    """Closed-form Fourier transform of ``F``.

    ``cos(u/2) / (pi^2 - u^2)`` is rewritten as ``sin(h/2) / (h (pi + |u|))``
    with ``h = pi - |u|``, so numerator and denominator vanish together.
    Inside the guard band ``sin(h/2)/h`` comes from its Taylor series.
    """
    u = np.abs(np.asarray(u, dtype=float))
    h = PI - u
    band = np.abs(u * u - PI * PI) < _GUARD * PI * PI
    hs = np.where(band, 1.0, h)
    h2 = h * h
    series = 0.5 - h2 / 48.0 + h2 * h2 / 3840.0 - h2 * h2 * h2 / 645120.0
    ratio = np.where(band, series, np.sin(hs / 2.0) / hs)
    g = ratio / (PI + u)
    val = 2.0 * (2.0 - u * u / (PI * PI)) * (2.0 * PI * g) ** 2
    if np.ndim(val) == 0:
        return float(val)
    return val


def fhat_T(u, T: float):
    """Transform of ``F_T``: ``T * Fhat(T u)``."""
    if not T > 0:
        raise ValueError("T must be positive")
    val = T * np.asarray(fhat_closed(np.asarray(u, dtype=float) * T))
    if np.ndim(val) == 0:
        return float(val)
    return val


def fhat_numeric(u: float, tol: float = 1e-10) -> float:
    """Quadrature oracle ``2 int_0^1 F(x) cos(u x) dx`` for the transform."""
    if not tol > 0:
        raise ValueError("tol must be positive")
    u = float(u)
    # F is even, so only the cosine part survives
    if abs(u) < 1.0:
        half = integrate_adaptive(lambda x: f_eval(x) * math.cos(u * x), 0.0, 1.0, tol / 4)
    else:
        half = integrate_adaptive(f_eval, 0.0, 1.0, tol / 4, weight="cos", wvar=u)
    return 2.0 * half


def sup_norm_F(step: float = 1e-4, xtol: float = 1e-10) -> tuple[float, float]:
    """Global maximum of ``|F|`` on ``[0, 1]`` as ``(argmax, max)``.

    Dense grid followed by golden-section refinement of the best cell.
    """
    grid = np.arange(0.0, 1.0 + step / 2, step)
    vals = np.abs(f_eval(grid))
    i = int(np.argmax(vals))
    lo, hi = grid[max(i - 1, 0)], grid[min(i + 1, len(grid) - 1)]
    if 0 < i < len(grid) - 1:
        x_best = optimize.golden(
            lambda x: -abs(f_eval(x)), brack=(lo, grid[i], hi), tol=xtol
        )
    else:
        x_best = grid[i]
    x_best = float(x_best)
    return x_best, abs(f_eval(x_best))


def fhat_agreement(u_max: float = 20.0, n: int = 2001, tol: float = 1e-10) -> dict:
    """Largest gap between the closed form and quadrature on ``[0, u_max]``."""
    us = np.linspace(0.0, u_max, n)
    us = np.union1d(us, [math.pi, math.sqrt(2.0) * math.pi])
    closed = np.asarray(fhat_closed(us))
    numeric = np.array([fhat_numeric(u, tol) for u in us])
    gaps = np.abs(closed - numeric)
    k = int(np.argmax(gaps))
    return {"points": int(us.size), "u_max": u_max, "max_abs_diff": float(gaps[k]), "worst_u": float(us[k])}
