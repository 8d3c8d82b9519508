"""Thin wrapper over QUADPACK adaptive Gauss-Kronrod quadrature."""

from __future__ import annotations

import warnings

from scipy import integrate

MAX_SUBINTERVALS = 10_000


class QuadratureError(RuntimeError):
    def __init__(self, message: str, achieved: float):
        super().__init__(f"{message} (achieved error estimate {achieved:.3g})")
        self.achieved = achieved


def integrate_adaptive(func, a: float, b: float, tol: float = 1e-10, **kwargs) -> float:
    """Integrate ``func`` over ``[a, b]`` to absolute tolerance ``tol``.

    Raises :class:`QuadratureError` when the error estimate exceeds ``tol``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        value, err = integrate.quad(
            func, a, b, epsabs=tol, epsrel=0.0, limit=MAX_SUBINTERVALS, **kwargs
        )
    if err > tol:
        raise QuadratureError(f"quadrature on [{a}, {b}] did not converge", err)
    return value
