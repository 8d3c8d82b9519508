"""Effective upper bounds for the lowest zero and the constants behind them.

Under GRH, with ``alpha = ln|d_K| / n_K``, either ``tau(K) >= tau_0`` or:

* no central zero, ``alpha > 6.6958``::

      tau(K) <= pi / (sqrt(2) ln((alpha - 1.2874) / 5.4084))

* central zero, ``alpha > 12.1048``::

      tau(K) <= sqrt(2) pi / min(A, B),
      A = (alpha - 1.2874) / (2 (17.2/pi^2) alpha / ln ln|d_K|),
      B = ln((alpha - 1.2874) / 10.8168)

The large-degree variant replaces 5.4084 by 5.1561 (``alpha > 6.4435``).
Neugebauer's unconditional bound ``min(60, 64 pi^2 / ln(ln(82 + 27 alpha) / 4))``
is included for comparison.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np
from scipy import optimize

from .explicit_formula import (
    ARCHIMEDEAN_CONSTANT,
    I_BOUND_CONSTANT,
    J_BOUND_CONSTANT,
    T_MIN,
    i_integral,
    i_integral_truncated,
    j_integral,
    sup_scaled,
)
from .fields import NumberField
from .primes import ROSSER_PSI_CONSTANT
from .testfn import SQRT2_PI, sup_norm_F

__all__ = [
    "BoundConstants",
    "PUBLISHED_CONSTANTS",
    "BoundReport",
    "ConstantAudit",
    "theorem1_bound",
    "theorem2_bound",
    "remark_variant_bound",
    "neugebauer_bound",
    "neugebauer_crossover_log10",
    "lemma3_threshold",
    "central_order_bound",
    "lemma3_property_check",
    "derive_inequality_constants",
    "recomputed_constants",
    "bound_report",
    "DICHOTOMY_NOTE",
]

TAU_0 = 14.134725141734693
HOFFSTEIN_TAU = 0.87
SUP_F_CEILING = 1.21
PRIME_CONSTANT = 1.2571

DICHOTOMY_NOTE = "under GRH: either tau(K) >= tau_0 = 14.1347..., or tau(K) <= the bound"


@dataclass(frozen=True)
class BoundConstants:
    c_lin: float = 1.2874
    c_exp: float = 5.4084
    c_exp_remark: float = 5.1561
    c_order: float = 17.2 / math.pi**2
    theorem2_threshold: float = 12.1048
    source: str = "published"

    @property
    def theorem1_threshold(self) -> float:
        return self.c_lin + self.c_exp

    @property
    def remark_threshold(self) -> float:
        return self.c_lin + self.c_exp_remark

    def to_dict(self) -> dict:
        return {
            "c_lin": self.c_lin,
            "c_exp": self.c_exp,
            "c_exp_remark": self.c_exp_remark,
            "c_order": self.c_order,
            "theorem1_threshold": self.theorem1_threshold,
            "theorem2_threshold": self.theorem2_threshold,
            "remark_threshold": self.remark_threshold,
            "source": self.source,
        }


PUBLISHED_CONSTANTS = BoundConstants()


def theorem1_bound(alpha: float, constants: BoundConstants = PUBLISHED_CONSTANTS) -> float | None:
    """Bound for fields without a central zero; ``None`` when not applicable."""
    ratio = (alpha - constants.c_lin) / constants.c_exp
    if not (alpha > constants.theorem1_threshold and ratio > 1.0):
        return None
    return math.pi / (math.sqrt(2.0) * math.log(ratio))


def remark_variant_bound(alpha: float, constants: BoundConstants = PUBLISHED_CONSTANTS) -> float | None:
    """Large-degree variant (only meaningful once ``tau(K) <= 0.87`` is known)."""
    ratio = (alpha - constants.c_lin) / constants.c_exp_remark
    if not (alpha > constants.remark_threshold and ratio > 1.0):
        return None
    return math.pi / (math.sqrt(2.0) * math.log(ratio))


def theorem2_bound(
    alpha: float, log_disc: float, constants: BoundConstants = PUBLISHED_CONSTANTS
) -> dict | None:
    """Bound for fields with a central zero: ``{"A", "B", "bound"}`` or ``None``."""
    if log_disc <= 1.0:
        raise ValueError("ln|d_K| must exceed 1 for ln ln|d_K| to be positive")
    if alpha <= constants.theorem2_threshold:
        return None
    c = alpha - constants.c_lin
    a = constants.c_order * alpha / math.log(log_disc)
    A = c / (2.0 * a)
    B = math.log(c / (2.0 * constants.c_exp))
    if B <= 0:
        return None
    return {"A": A, "B": B, "bound": SQRT2_PI / min(A, B)}


def neugebauer_bound(alpha: float) -> float:
    """``min(60, 64 pi^2 / ln(ln(82 + 27 alpha) / 4))``."""
    if not alpha > 0:
        raise ValueError("alpha must be positive")
    inner = math.log(0.25 * math.log(82.0 + 27.0 * alpha))
    if inner <= 0:
        raise ArithmeticError("inner logarithm nonpositive")
    return min(60.0, 64.0 * math.pi**2 / inner)


def neugebauer_crossover_log10() -> float:
    """``log10`` of the ``alpha`` beyond which Neugebauer's bound drops below 60."""
    # ln(ln(82 + 27 alpha) / 4) = 64 pi^2 / 60; 82 is negligible at this size
    ln_arg = 4.0 * math.exp(64.0 * math.pi**2 / 60.0)
    return ln_arg / math.log(10.0) - math.log10(27.0)


def lemma3_threshold(a: float, b: float, c: float) -> float:
    """``min(c / 2a, ln(c / 2b))``: a lower bound for ``T`` once ``aT + b e^{T/2} >= c``."""
    if not (a > 0 and b > 0 and c > 0):
        raise ValueError("a, b, c must be positive")
    if c <= 2 * b:
        raise ValueError("c > 2b required")
    return min(c / (2.0 * a), math.log(c / (2.0 * b)))


def central_order_bound(log_disc: float, degree: int) -> float:
    """Ceiling on the order of vanishing at 1/2: ``L/ln L + n/(2 ln L)``, ``L = ln|d_K|``."""
    if log_disc <= 1.0:
        raise ValueError("ln|d_K| must exceed 1")
    ll = math.log(log_disc)
    return log_disc / ll + degree / (2.0 * ll)


@dataclass
class ConstantAudit:
    sup_F: float
    sup_F_argmax: float
    j_const: float
    j_argmax: float
    i_const: float
    i_argmax: float
    i_const_full: float
    prime_const: float
    assembled_exp_const: float
    assembled_lin_const: float
    paper_exp_const: float = PUBLISHED_CONSTANTS.c_exp
    paper_lin_const: float = PUBLISHED_CONSTANTS.c_lin
    published_chain_exp_const: float = 0.0
    published_chain_lin_const: float = 0.0
    remark_T_min: float = 0.0
    remark_j_const: float = 0.0
    remark_i_const: float = 0.0
    assembled_remark_const: float = 0.0
    order_constant_majorizes: bool = True
    notes: list[str] = field(default_factory=list)

    @property
    def exp_delta(self) -> float:
        return self.assembled_exp_const - self.paper_exp_const

    @property
    def lin_delta(self) -> float:
        return self.assembled_lin_const - self.paper_lin_const

    def to_dict(self) -> dict:
        out = asdict(self)
        out["exp_delta"] = self.exp_delta
        out["lin_delta"] = self.lin_delta
        return out


def derive_inequality_constants(tol: float = 1e-8, T_hi: float = 30.0) -> ConstantAudit:
    """Recompute the constants of ``ln|d_K| <= c_exp n e^{T/2} + c_lin n``.

    ``j_const`` and ``i_const`` are the suprema of ``J(F_T) e^{-T/2}`` and of
    ``-I(F_T) e^{-T/2}`` for ``T`` in ``[0.314, T_hi]``, with ``I`` taken over
    ``[0, T]`` only; the full ``I`` adds the positive tail ``-ln tanh(T/4)``,
    so this is the conservative choice.  The prime constant is
    ``sup|F| * 1.0389``.
    """
    if tol < 1e-8:
        raise ValueError("tol >= 1e-8 expected")
    qtol = min(tol, 1e-10)
    x_star, sup_F = sup_norm_F()
    j_T, j_const = sup_scaled(lambda T: j_integral(T, qtol), T_MIN, T_hi)
    i_T, i_const = sup_scaled(lambda T: -i_integral_truncated(T, qtol), T_MIN, T_hi)
    _, i_full = sup_scaled(lambda T: -i_integral(T, qtol), T_MIN, T_hi)
    prime = sup_F * ROSSER_PSI_CONSTANT
    # larger-degree variant: tau(K) <= 0.87 forces T >= sqrt(2) pi / 0.87
    T_rem = SQRT2_PI / HOFFSTEIN_TAU
    _, rem_j = sup_scaled(lambda T: j_integral(T, qtol), T_rem, T_hi)
    _, rem_i = sup_scaled(lambda T: -i_integral_truncated(T, qtol), T_rem, T_hi)
    majorizes = 16.0 / math.pi**2 * (1.0 + 1.0 / (2.0 * PUBLISHED_CONSTANTS.theorem2_threshold)) <= (
        PUBLISHED_CONSTANTS.c_order
    )
    audit = ConstantAudit(
        sup_F=sup_F,
        sup_F_argmax=x_star,
        j_const=j_const,
        j_argmax=j_T,
        i_const=i_const,
        i_argmax=i_T,
        i_const_full=i_full,
        prime_const=prime,
        assembled_exp_const=4.0 * prime + j_const + i_const,
        assembled_lin_const=ARCHIMEDEAN_CONSTANT - 2.0 * prime,
        published_chain_exp_const=4.0 * PRIME_CONSTANT + J_BOUND_CONSTANT + I_BOUND_CONSTANT,
        published_chain_lin_const=ARCHIMEDEAN_CONSTANT - 2.0 * PRIME_CONSTANT,
        remark_T_min=T_rem,
        remark_j_const=rem_j,
        remark_i_const=rem_i,
        assembled_remark_const=4.0 * prime + rem_j + max(rem_i, 0.0),
        order_constant_majorizes=majorizes,
    )
    if T_MIN < SQRT2_PI / TAU_0:
        audit.notes.append(
            f"T range starts at {T_MIN}; the exact threshold is sqrt(2) pi / tau_0 = {SQRT2_PI / TAU_0:.6f}"
        )
    return audit


def recomputed_constants(audit: ConstantAudit | None = None) -> BoundConstants:
    audit = audit or derive_inequality_constants()
    return BoundConstants(
        c_lin=audit.assembled_lin_const,
        c_exp=audit.assembled_exp_const,
        c_exp_remark=audit.assembled_remark_const,
        c_order=PUBLISHED_CONSTANTS.c_order,
        theorem2_threshold=audit.assembled_lin_const + 2.0 * audit.assembled_exp_const,
        source="recomputed",
    )


@dataclass
class BoundReport:
    alpha: float
    log_disc: float
    degree: int
    central_zero: bool
    theorem1: float | None
    theorem1_applicable: bool
    theorem2: dict | None
    theorem2_applicable: bool
    remark_variant: float | None
    remark_applicable: bool
    neugebauer: float
    constants_used: dict
    dichotomy_note: str = DICHOTOMY_NOTE
    reasons: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)


def bound_report(
    field_: NumberField, central_zero: bool = False, constants: BoundConstants = PUBLISHED_CONSTANTS
) -> BoundReport:
    """Dispatch to the no-central-zero or central-zero bound, plus comparisons."""
    a = field_.alpha
    ld = field_.log_disc
    reasons: list[str] = []
    t1 = None
    t2 = None
    if central_zero:
        if ld > 1.0:
            t2 = theorem2_bound(a, ld, constants)
        if t2 is None:
            reasons.append(
                f"central-zero bound needs alpha > {constants.theorem2_threshold:.4f}; alpha = {a:.6f}"
            )
    else:
        t1 = theorem1_bound(a, constants)
        if t1 is None:
            reasons.append(
                f"bound needs alpha > {constants.theorem1_threshold:.4f}; alpha = {a:.6f}"
            )
    rem = remark_variant_bound(a, constants)
    if rem is not None:
        reasons.append("large-degree variant assumes tau(K) <= 0.87 (sufficiently large degree)")
    report = BoundReport(
        alpha=a,
        log_disc=ld,
        degree=field_.degree,
        central_zero=central_zero,
        theorem1=t1,
        theorem1_applicable=t1 is not None,
        theorem2=t2,
        theorem2_applicable=t2 is not None,
        remark_variant=rem,
        remark_applicable=rem is not None,
        neugebauer=neugebauer_bound(a),
        constants_used=constants.to_dict(),
        reasons=reasons,
    )
    if not field_.disc_is_field_disc:
        report.reasons.append("discriminant is the polynomial discriminant; maximality not checked")
    return report


def lemma3_property_check(n: int = 10_000, seed: int = 0) -> dict:
    """Brute-force the implication behind :func:`lemma3_threshold`.

    Draws ``(a, b, c)`` with ``c > 2b`` and a ``T`` satisfying
    ``aT + b e^{T/2} >= c``; half the draws sit just above the smallest
    such ``T`` (the tight case), the rest anywhere above it.
    """
    rng = np.random.default_rng(seed)
    failures = []
    worst_margin = math.inf
    checked = 0
    for k in range(n):
        a = 10.0 ** rng.uniform(-3, 3)
        b = 10.0 ** rng.uniform(-3, 3)
        c = 2.0 * b * (1.0 + 10.0 ** rng.uniform(-6, 3))
        g = lambda T: a * T + b * math.exp(T / 2.0) - c  # noqa: E731
        t_star = optimize.brentq(g, 0.0, 2.0 * math.log(c / b) + 1.0, xtol=1e-14, rtol=1e-15)
        if k % 2 == 0:
            T = t_star * (1.0 + 1e-12 + rng.uniform(0.0, 1e-6))
        else:
            T = t_star + rng.exponential(max(t_star, 1e-3))
        if g(T) < 0:
            continue
        checked += 1
        margin = T - lemma3_threshold(a, b, c)
        worst_margin = min(worst_margin, margin)
        if margin < 0:
            failures.append({"a": a, "b": b, "c": c, "T": T})
    return {"instances": checked, "failures": failures, "passed": not failures, "min_margin": worst_margin}
